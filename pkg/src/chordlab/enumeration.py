"""Exhaustive generation of rooted chord diagrams and class counting."""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .diagram import ChordDiagram
from .patterns import cycle_profile, in_class
from .structure import (
    intersection_order,
    terminal_labels,
    terminality,
    t1,
    vertex_connectivity,
)


def _gen_pairs(points: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
    # match the smallest free point with every later one, in order; this
    # walks partner arrays lexicographically
    if not points:
        yield []
        return
    a = points[0]
    for i in range(1, len(points)):
        b = points[i]
        rest = points[1:i] + points[i + 1:]
        for tail in _gen_pairs(rest):
            tail.append((a, b))
            yield tail


def all_pairs(n: int, branch: int | None = None) -> Iterator[list[tuple[int, int]]]:
    """Raw source-sorted pair lists, lexicographic in the partner array.
    `branch` restricts to diagrams whose first chord is (1, branch)."""
    if n == 0:
        yield []
        return
    points = tuple(range(1, 2 * n + 1))
    if branch is None:
        for pairs in _gen_pairs(points):
            pairs.reverse()
            yield pairs
    else:
        rest = tuple(p for p in points[1:] if p != branch)
        for tail in _gen_pairs(rest):
            tail.append((1, branch))
            tail.reverse()
            yield tail


def all_diagrams(n: int) -> Iterator[ChordDiagram]:
    """Every size-n diagram exactly once, deterministic order."""
    if n < 0:
        raise ValueError("size must be >= 0")
    for pairs in all_pairs(n):
        yield ChordDiagram(pairs)


def branches(n: int) -> list[int]:
    """Partner choices for point 1; prefix-split handles for parallel sweeps."""
    return list(range(2, 2 * n + 1))


def crossing_masks(pairs: list[tuple[int, int]]) -> list[int]:
    """Bit i of entry j set iff chords i+1 and j+1 cross."""
    n = len(pairs)
    adj = [0] * n
    for i in range(n):
        yi = pairs[i][1]
        bit_i = 1 << i
        for j in range(i + 1, n):
            xj, yj = pairs[j]
            if xj < yi < yj:
                adj[i] |= 1 << j
                adj[j] |= bit_i
    return adj


def _is_connected_mask(adj: list[int]) -> bool:
    n = len(adj)
    if n == 0:
        return False
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for i in range(n):
            if frontier >> i & 1:
                nxt |= adj[i]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def _terminal_count_mask(adj: list[int]) -> int:
    # a chord is terminal iff nothing after it (in source order) crosses it
    n = len(adj)
    return sum(1 for i in range(n) if adj[i] >> (i + 1) == 0)


@lru_cache(maxsize=None)
def census(n: int, branch: int | None = None) -> dict[str, int]:
    """Counts of all / connected / one-terminal diagrams of size n. Cached;
    callers must treat the result as read-only."""
    total = conn = one_term = 0
    for pairs in all_pairs(n, branch):
        total += 1
        adj = crossing_masks(pairs)
        if _is_connected_mask(adj):
            conn += 1
            if _terminal_count_mask(adj) == 1:
                one_term += 1
    return {"all": total, "connected": conn, "one-terminal": one_term}


def _census_branch(args: tuple[int, int]) -> dict[str, int]:
    return census(args[0], args[1])


def census_parallel(n: int, jobs: int = 1) -> dict[str, int]:
    """Same counts as census(); the split by first chord makes the result
    independent of the job count."""
    if jobs <= 1 or n == 0:
        return census(n)
    work = [(n, b) for b in branches(n)]
    with multiprocessing.Pool(jobs) as pool:
        parts = pool.map(_census_branch, work)
    out = {"all": 0, "connected": 0, "one-terminal": 0}
    for part in parts:
        for k, v in part.items():
            out[k] += v
    return out


def one_terminal_pairs(n: int) -> Iterator[list[tuple[int, int]]]:
    """Raw pair lists of the one-terminal diagrams of size n."""
    for pairs in all_pairs(n):
        adj = crossing_masks(pairs)
        if _is_connected_mask(adj) and _terminal_count_mask(adj) == 1:
            yield pairs


@dataclass
class CountTable:
    """Refined counts: rows key (n, *statistic values) -> count."""

    class_name: str
    statistics: tuple[str, ...]
    rows: dict[tuple, int] = field(default_factory=dict)

    def add(self, key: tuple, weight: int = 1) -> None:
        self.rows[key] = self.rows.get(key, 0) + weight

    def total(self, n: int) -> int:
        return sum(v for k, v in self.rows.items() if k[0] == n)

    def sorted_rows(self) -> list[tuple[tuple, int]]:
        return sorted(self.rows.items())


_STAT_FUNCS: dict[str, Callable[[ChordDiagram], int]] = {
    "t1": t1,
    "terminal-count": lambda d: len(terminal_labels(d)),
    "crossings": lambda d: d.crossings(),
    "nestings": lambda d: d.nestings(),
    "kappa": vertex_connectivity,
    "terminality": terminality,
}

STAT_NAMES = tuple(_STAT_FUNCS)


def count_class(
    n: int,
    cls: str | Callable[[ChordDiagram], bool] = "all",
    statistics: tuple[str, ...] = (),
    branch: int | None = None,
) -> CountTable:
    """Count size-n diagrams of a class, refined by the named statistics."""
    for s in statistics:
        if s not in _STAT_FUNCS:
            raise ValueError("unknown statistic: %s" % s)
    pred = cls if callable(cls) else (lambda d: in_class(d, cls))
    name = cls if isinstance(cls, str) else getattr(cls, "__name__", "custom")
    table = CountTable(name, tuple(statistics))
    for pairs in all_pairs(n, branch):
        d = ChordDiagram(pairs)
        if not pred(d):
            continue
        key = (n,) + tuple(_STAT_FUNCS[s](d) for s in statistics)
        table.add(key)
    return table


def _count_class_branch(args) -> dict[tuple, int]:
    n, cls, statistics, b = args
    return count_class(n, cls, statistics, branch=b).rows


def count_class_parallel(
    n: int,
    cls: str = "all",
    statistics: tuple[str, ...] = (),
    jobs: int = 1,
) -> CountTable:
    if jobs <= 1 or n == 0:
        return count_class(n, cls, statistics)
    work = [(n, cls, statistics, b) for b in branches(n)]
    with multiprocessing.Pool(jobs) as pool:
        parts = pool.map(_count_class_branch, work)
    table = CountTable(cls, tuple(statistics))
    for rows in parts:
        for k, v in rows.items():
            table.add(k, v)
    return table


# classes whose membership falls out of one crossing-graph cycle profile
PROFILE_CLASSES = (
    "all",
    "top-cycle-free",
    "bottom-cycle-free",
    "triangle-free",
    "tree",
    "chordal",
    "bipartite",
    "noncrossing",
    "nonnesting",
)


@lru_cache(maxsize=None)
def class_census(n: int) -> dict[str, dict[str, int]]:
    """One sweep over size-n diagrams scoring every profile class at once;
    returns class -> {all, connected, one-terminal} counts. Cached; callers
    must treat the result as read-only."""
    out = {c: {"all": 0, "connected": 0, "one-terminal": 0} for c in PROFILE_CLASSES}
    for pairs in all_pairs(n):
        adj = crossing_masks(pairs)
        conn = _is_connected_mask(adj)
        one_term = conn and _terminal_count_mask(adj) == 1
        d = ChordDiagram(pairs)
        profile = cycle_profile(d)
        has_top = any(k[1] == "top" or k[0] == 3 for k in profile)
        has_bottom = any(k[1] == "bottom" or k[0] == 3 for k in profile)
        member = {
            "all": True,
            "top-cycle-free": not has_top,
            "bottom-cycle-free": not has_bottom,
            "triangle-free": (3, "top") not in profile,
            "tree": not profile,
            "chordal": all(k[0] == 3 for k in profile),
            "bipartite": all(k[0] % 2 == 0 for k in profile),
            "noncrossing": d.is_noncrossing(),
            "nonnesting": d.is_nonnesting(),
        }
        for c, ok in member.items():
            if not ok:
                continue
            out[c]["all"] += 1
            if conn:
                out[c]["connected"] += 1
            if one_term:
                out[c]["one-terminal"] += 1
    return out


@lru_cache(maxsize=None)
def tcf_refined(n: int) -> dict[int, int]:
    """Connected top-cycle-free counts of size n, refined by t1. Cached."""
    out: dict[int, int] = {}
    for pairs in all_pairs(n):
        adj = crossing_masks(pairs)
        if not _is_connected_mask(adj):
            continue
        d = ChordDiagram(pairs)
        if in_class(d, "top-cycle-free"):
            k = t1(d)
            out[k] = out.get(k, 0) + 1
    return out


@lru_cache(maxsize=None)
def pattern_free_count(n: int, pattern: ChordDiagram, variant: str = "all") -> int:
    """Size-n diagrams with no induced copy of `pattern`. Cached."""
    from .patterns import contains_pattern

    cnt = 0
    for pairs in all_pairs(n):
        d = ChordDiagram(pairs)
        if variant == "connected" and not d.is_connected():
            continue
        if variant == "one-terminal":
            adj = crossing_masks(pairs)
            if not (_is_connected_mask(adj) and _terminal_count_mask(adj) == 1):
                continue
        if not contains_pattern(d, pattern):
            cnt += 1
    return cnt


def witness_search(
    pred: Callable[[ChordDiagram], bool], n: int
) -> ChordDiagram | None:
    """First size-n diagram satisfying pred, in generation order."""
    for d in all_diagrams(n):
        if pred(d):
            return d
    return None


def connected_diagrams(n: int) -> Iterator[ChordDiagram]:
    for pairs in all_pairs(n):
        if _is_connected_mask(crossing_masks(pairs)):
            yield ChordDiagram(pairs)
