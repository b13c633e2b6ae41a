"""Rooted chord diagrams as immutable values.

A diagram of size n is a perfect matching of the points 1..2n. Each chord
is stored as a (source, sink) pair with source < sink, and chords are
numbered 1..n in order of their sources (the standard order). The size-0
diagram is a legitimate value.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Iterator

_PAIR_RE = re.compile(r"\((\d+)\s*,\s*(\d+)\)")


class ChordDiagram:
    """Immutable rooted chord diagram."""

    __slots__ = ("pairs", "_adj")

    pairs: tuple[tuple[int, int], ...]

    def __init__(self, pairs: Iterable[tuple[int, int]]):
        # orientation-normalizing: each pair is stored smaller point first
        ps = sorted(
            (a, b) if a < b else (b, a)
            for a, b in ((int(x), int(y)) for x, y in pairs)
        )
        seen = [p for pair in ps for p in pair]
        n = len(ps)
        if sorted(seen) != list(range(1, 2 * n + 1)):
            raise ValueError("endpoints must cover 1..2n exactly once")
        object.__setattr__(self, "pairs", tuple(ps))
        object.__setattr__(self, "_adj", None)

    def __setattr__(self, name, value):
        raise AttributeError("ChordDiagram is immutable")

    # -- constructors

    @classmethod
    def empty(cls) -> "ChordDiagram":
        return cls(())

    @classmethod
    def from_partner(cls, partner: Iterable[int]) -> "ChordDiagram":
        """Build from the partner array: partner[p-1] is the point matched to p."""
        arr = list(partner)
        pairs = [(p, q) for p, q in ((i + 1, v) for i, v in enumerate(arr)) if p < q]
        return cls(pairs)

    @classmethod
    def from_text(cls, text: str) -> "ChordDiagram":
        """Parse the plain format "(1,3)(2,4)". "()" and "" denote the empty diagram."""
        t = text.strip()
        if t in ("", "()"):
            return cls(())
        pairs = [(int(a), int(b)) for a, b in _PAIR_RE.findall(t)]
        if not pairs or _PAIR_RE.sub("", t).strip():
            raise ValueError(f"unparseable diagram text: {text!r}")
        return cls(pairs)

    @classmethod
    def from_json(cls, obj) -> "ChordDiagram":
        if isinstance(obj, str):
            obj = json.loads(obj)
        pairs = [(int(a), int(b)) for a, b in obj["pairs"]]
        d = cls(pairs)
        if "n" in obj and int(obj["n"]) != d.n:
            raise ValueError("size field disagrees with pair count")
        return d

    # -- basic accessors

    @property
    def n(self) -> int:
        return len(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def chord(self, i: int) -> tuple[int, int]:
        """The i-th chord in the standard order, 1-based."""
        return self.pairs[i - 1]

    def source(self, i: int) -> int:
        return self.pairs[i - 1][0]

    def sink(self, i: int) -> int:
        return self.pairs[i - 1][1]

    def partner(self) -> tuple[int, ...]:
        """Partner array over points 1..2n (entry p-1 holds the match of p)."""
        arr = [0] * (2 * len(self.pairs))
        for a, b in self.pairs:
            arr[a - 1] = b
            arr[b - 1] = a
        return tuple(arr)

    def chord_at(self, point: int) -> int:
        """Label of the chord having the given endpoint."""
        for i, (a, b) in enumerate(self.pairs):
            if point == a or point == b:
                return i + 1
        raise ValueError(f"no endpoint {point}")

    # -- serialization

    def to_text(self) -> str:
        if not self.pairs:
            return "()"
        return "".join(f"({a},{b})" for a, b in self.pairs)

    def to_json(self) -> dict:
        return {"n": self.n, "pairs": [list(p) for p in self.pairs]}

    def __repr__(self) -> str:
        return f"ChordDiagram({self.to_text()!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, ChordDiagram) and self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash(self.pairs)

    # -- pair relations

    def relation(self, i: int, j: int) -> str:
        """Exactly one of "cross", "nest", "disjoint" for two chord labels."""
        (x1, y1), (x2, y2) = sorted((self.pairs[i - 1], self.pairs[j - 1]))
        if x2 < y1 < y2:
            return "cross"
        if y2 < y1:
            return "nest"
        return "disjoint"

    def crosses(self, i: int, j: int) -> bool:
        return self.relation(i, j) == "cross"

    def nested(self, i: int, j: int) -> bool:
        return self.relation(i, j) == "nest"

    def disjoint(self, i: int, j: int) -> bool:
        return self.relation(i, j) == "disjoint"

    def crossings(self) -> int:
        return sum(1 for i in range(1, self.n) for j in range(i + 1, self.n + 1)
                   if self.crosses(i, j))

    def nestings(self) -> int:
        return sum(1 for i in range(1, self.n) for j in range(i + 1, self.n + 1)
                   if self.nested(i, j))

    def is_noncrossing(self) -> bool:
        return self.crossings() == 0

    def is_nonnesting(self) -> bool:
        return self.nestings() == 0

    # -- crossing graph

    def adjacency(self) -> tuple[int, ...]:
        """Crossing-graph adjacency as bitmasks: bit j-1 of entry i-1 means i crosses j."""
        if self._adj is None:
            n = len(self.pairs)
            adj = [0] * n
            ps = self.pairs
            for i in range(n):
                x1, y1 = ps[i]
                for j in range(i + 1, n):
                    x2, y2 = ps[j]
                    if x2 < y1 < y2:  # sources are sorted, so this is the only crossing shape
                        adj[i] |= 1 << j
                        adj[j] |= 1 << i
            object.__setattr__(self, "_adj", tuple(adj))
        return self._adj

    def crossing_edges(self) -> frozenset[tuple[int, int]]:
        adj = self.adjacency()
        return frozenset((i + 1, j + 1) for i in range(self.n) for j in range(i + 1, self.n)
                         if adj[i] >> j & 1)

    def right_neighbors(self, i: int) -> tuple[int, ...]:
        """Chords crossing i whose source lies inside chord i (so their sink is to its right)."""
        x, y = self.pairs[i - 1]
        adj = self.adjacency()
        return tuple(j + 1 for j in range(self.n) if adj[i - 1] >> j & 1
                     and x < self.pairs[j][0] < y)

    def left_neighbors(self, i: int) -> tuple[int, ...]:
        x, y = self.pairs[i - 1]
        adj = self.adjacency()
        return tuple(j + 1 for j in range(self.n) if adj[i - 1] >> j & 1
                     and self.pairs[j][0] < x)

    def arcs(self) -> tuple[tuple[int, int], ...]:
        """Directed crossing pairs (i, j): j is a right neighbor of i. Always acyclic."""
        out = []
        for i in range(1, self.n + 1):
            for j in self.right_neighbors(i):
                out.append((i, j))
        return tuple(out)

    def components(self) -> list[tuple[int, ...]]:
        """Connected components of the crossing graph, as sorted label tuples.

        Ordered by smallest label, which is also source order.
        """
        n = self.n
        adj = self.adjacency()
        seen = 0
        comps = []
        for s in range(n):
            if seen >> s & 1:
                continue
            mask = 1 << s
            frontier = mask
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    v = (f & -f).bit_length() - 1
                    f &= f - 1
                    nxt |= adj[v]
                frontier = nxt & ~mask
                mask |= nxt
            seen |= mask
            comps.append(tuple(i + 1 for i in range(n) if mask >> i & 1))
        return comps

    def is_connected(self) -> bool:
        """Nonempty with a weakly connected crossing graph; size 1 is connected."""
        return self.n > 0 and len(self.components()) == 1

    # -- subdiagrams and concatenation

    def subdiagram(self, labels: Iterable[int]) -> "ChordDiagram":
        """Induced subdiagram on the given chord labels, endpoints renumbered."""
        keep = sorted(set(labels))
        pts = sorted(p for i in keep for p in self.pairs[i - 1])
        rank = {p: r + 1 for r, p in enumerate(pts)}
        return ChordDiagram((rank[a], rank[b]) for a, b in (self.pairs[i - 1] for i in keep))

    def remove_chords(self, labels: Iterable[int]) -> "ChordDiagram":
        drop = set(labels)
        return self.subdiagram(i for i in range(1, self.n + 1) if i not in drop)

    def remove_chord(self, i: int) -> "ChordDiagram":
        return self.remove_chords((i,))

    def concat(self, other: "ChordDiagram") -> "ChordDiagram":
        """Place other entirely to the right of self."""
        off = 2 * self.n
        return ChordDiagram(list(self.pairs) + [(a + off, b + off) for a, b in other.pairs])

    def indecomposable_components(self) -> list[tuple[int, ...]]:
        """Maximal concatenation factors as label tuples, cut at every closed prefix."""
        out = []
        open_count = 0
        block: list[int] = []
        partner = self.partner()
        for p in range(1, 2 * self.n + 1):
            q = partner[p - 1]
            if q > p:
                open_count += 1
            else:
                open_count -= 1
                block.append(self.chord_at(q))
            if open_count == 0:
                out.append(tuple(sorted(block)))
                block = []
        return out

    def indecomposable_factors(self) -> list["ChordDiagram"]:
        """The concatenation factors as standalone diagrams."""
        return [self.subdiagram(labels) for labels in self.indecomposable_components()]

    def is_indecomposable(self) -> bool:
        return self.n > 0 and len(self.indecomposable_components()) == 1

    def root_label(self) -> int:
        """The chord containing point 1; always label 1 in source order."""
        if not self.pairs:
            raise ValueError("empty diagram has no root")
        return 1

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)


def concat_all(parts: Iterable[ChordDiagram]) -> ChordDiagram:
    out = ChordDiagram.empty()
    for p in parts:
        out = out.concat(p)
    return out
