"""Bijections on rooted chord diagrams.

psi / chi        one-terminal diagrams of size n <-> all diagrams of size n-1
alpha / beta     splitting a connected diagram at its first terminal chord
zeta             diagrams <-> Stirling words
eta              increasing ordered trees <-> Stirling words
theta            one-terminal diagrams <-> increasing ordered trees
root share       connected diagrams <-> (smaller connected) x (connected) x index
"""

from __future__ import annotations

from .diagram import ChordDiagram
from .structure import (
    intersection_order,
    is_one_terminal,
    source_sink_groups,
    t1,
    terminal_labels,
    traced_subdiagram,
)

# parts: (component diagram, block of intersection-order positions)
Parts = list[tuple[ChordDiagram, tuple[int, ...]]]

# increasing ordered tree: (label, (child, child, ...))
Tree = tuple


def psi(t: ChordDiagram) -> ChordDiagram:
    """Map a one-terminal diagram of size n to a diagram of size n-1.

    Each source hops over the run of sinks that follows it, then the
    chord that was terminal is deleted.
    """
    if not is_one_terminal(t):
        raise ValueError("psi requires a one-terminal diagram")
    n = t.n
    partner = t.partner()
    order: list[int] = []
    p = 1
    while p <= 2 * n:
        if partner[p - 1] > p:
            own = partner[p - 1]
            q = p + 1
            run = []
            while q <= 2 * n and partner[q - 1] < q and q != own:
                run.append(q)
                q += 1
            order.extend(run)
            order.append(p)
            p = q
        else:
            order.append(p)
            p += 1
    pos = {pt: r + 1 for r, pt in enumerate(order)}
    term = terminal_labels(t)[0]
    kept = [
        tuple(sorted((pos[a], pos[b])))
        for lbl, (a, b) in enumerate(t, 1)
        if lbl != term
    ]
    used = sorted(v for pair in kept for v in pair)
    rank = {v: r + 1 for r, v in enumerate(used)}
    return ChordDiagram((rank[a], rank[b]) for a, b in kept)


def chi(c: ChordDiagram) -> ChordDiagram:
    """Inverse of psi: append a fresh terminal chord, then pull every
    source in front of the sink run that precedes it."""
    n = c.n
    big = ChordDiagram(list(c) + [(2 * n + 1, 2 * n + 2)])
    partner = big.partner()
    order: list[int] = []
    run: list[int] = []
    for p in range(1, 2 * n + 3):
        if partner[p - 1] > p:
            order.append(p)
            order.extend(run)
            run = []
        else:
            run.append(p)
    order.extend(run)
    pos = {pt: r + 1 for r, pt in enumerate(order)}
    return ChordDiagram(tuple(sorted((pos[a], pos[b]))) for a, b in big)


def _traced_within(c: ChordDiagram, d_labels: list[int], x: int) -> set[int]:
    # traced subdiagram of chord x inside the prefix diagram on d_labels
    sub = c.subdiagram(d_labels)
    back = dict(enumerate(sorted(d_labels), 1))
    fwd = {v: k for k, v in back.items()}
    return {back[y] for y in traced_subdiagram(sub, fwd[x])}


def alpha(c: ChordDiagram) -> Parts:
    """Split a connected diagram of size >= 2 at its first terminal chord.

    Returns parts (C_l, I_l): C_l a connected subdiagram, I_l the block of
    intersection-order positions (within 1..t1-1) it occupies.  beta
    inverts this.
    """
    if not c.is_connected() or c.n < 2:
        raise ValueError("alpha requires a connected diagram of size >= 2")
    order = intersection_order(c)
    cut = t1(c)
    j = cut - 1
    term = order[cut - 1]
    d_labels = sorted(order[:cut])
    d_set = set(d_labels)
    pos_of = {lbl: r + 1 for r, lbl in enumerate(order)}

    neighbors = [x for x in range(1, c.n + 1) if c.crosses(term, x)]
    assert all(x in d_set for x in neighbors)

    rest = sorted(x for x in range(1, c.n + 1) if x not in d_set)
    comps: list[tuple[int, ...]] = []
    if rest:
        sub = c.subdiagram(rest)
        comps = [
            tuple(rest[i - 1] for i in comp)
            for comp in sub.indecomposable_components()
        ]

    # group the terminal chord's neighbors: two neighbors stick together
    # when some leftover component crosses both (transitively)
    parent = {x: x for x in neighbors}

    def root(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for comp in comps:
        touched = [
            x for x in neighbors
            if any(c.crosses(y, x) for y in comp)
        ]
        for x in touched[1:]:
            parent[root(x)] = root(touched[0])

    groups: dict[int, list[int]] = {}
    for x in neighbors:
        groups.setdefault(root(x), []).append(x)

    parts: list[tuple[int, set[int]]] = []
    for members in groups.values():
        dl: set[int] = set()
        for x in members:
            dl |= _traced_within(c, d_labels, x)
        cl = set(dl)
        for comp in comps:
            if any(c.crosses(y, z) for y in comp for z in dl):
                cl |= set(comp)
        attach = max(c.sink(x) for x in members)
        parts.append((attach, cl))

    parts.sort(key=lambda pr: -pr[0])
    seen: set[int] = set()
    out: Parts = []
    for _, cl in parts:
        assert not (cl & seen), "parts must be disjoint"
        seen |= cl
        block = tuple(sorted(pos_of[y] for y in cl if pos_of[y] <= j))
        out.append((c.subdiagram(sorted(cl)), block))
    assert seen == set(range(1, c.n + 1)) - {term}, "parts must cover C - term"
    flat = sorted(x for _, b in out for x in b)
    assert flat == list(range(1, j + 1)), "blocks must partition 1..t1-1"
    return out


def beta(parts: Parts) -> ChordDiagram:
    """Rebuild the connected diagram whose alpha-decomposition is `parts`.

    An empty list gives the single chord.
    """
    blocks = [tuple(sorted(block)) for _, block in parts]
    j = sum(len(b) for b in blocks)
    flat = sorted(x for b in blocks for x in b)
    if flat != list(range(1, j + 1)):
        raise ValueError("blocks must partition 1..j")
    for (p, _), b in zip(parts, blocks):
        if not p.is_connected():
            raise ValueError("parts must be connected")
        if not 1 <= len(b) <= t1(p):
            raise ValueError("block size must be between 1 and t1(part)")

    # one slot per position 1..j, then the new source, then the unused
    # tails of the parts in reverse order, then the new sink
    slots: list[list[tuple[int, int]]] = [[] for _ in range(j)]
    tails: list[list[tuple[int, int]]] = []
    for idx, ((p, _), b) in enumerate(zip(parts, blocks)):
        groups = source_sink_groups(p, m=len(b))
        used: set[int] = set()
        for r, g in enumerate(groups.values()):
            slots[b[r] - 1] = [(idx, pt) for pt in g]
            used.update(g)
        tails.append([(idx, pt) for pt in range(1, 2 * p.n + 1) if pt not in used])

    layout: list[tuple[int, int]] = []
    for s in slots:
        layout.extend(s)
    layout.append((-1, 1))
    for tail in reversed(tails):
        layout.extend(tail)
    layout.append((-1, 2))

    pos = {key: r + 1 for r, key in enumerate(layout)}
    pairs = [(pos[(-1, 1)], pos[(-1, 2)])]
    for idx, (p, _) in enumerate(parts):
        for a, b2 in p:
            pairs.append((pos[(idx, a)], pos[(idx, b2)]))
    return ChordDiagram(pairs)


def root_share_decompose(c: ChordDiagram) -> tuple[ChordDiagram, ChordDiagram, int]:
    """Split a connected diagram of size >= 2 as (C1, C2, idx): C2 is the
    outermost crossing component after deleting the root, C1 the rest
    (root included), idx how many C2 endpoints precede C1's second point."""
    if not c.is_connected() or c.n < 2:
        raise ValueError("root share requires a connected diagram of size >= 2")
    rest = list(range(2, c.n + 1))
    sub = c.subdiagram(rest)
    first = sub.components()[0]
    c2_labels = sorted(x + 1 for x in first)
    c1_labels = sorted(set(range(1, c.n + 1)) - set(c2_labels))
    c2_points = sorted(p for lbl in c2_labels for p in c.chord(lbl))
    c1_points = sorted(p for lbl in c1_labels for p in c.chord(lbl))
    e = c1_points[1]
    idx = sum(1 for p in c2_points if p < e)
    assert 1 <= idx <= 2 * len(c2_labels) - 1
    return c.subdiagram(c1_labels), c.subdiagram(c2_labels), idx


def root_share_compose(c1: ChordDiagram, c2: ChordDiagram, idx: int) -> ChordDiagram:
    """Inverse of root_share_decompose: thread the first idx endpoints of
    C2 under C1's root."""
    if not c1.is_connected() or not c2.is_connected():
        raise ValueError("root share composes connected diagrams")
    if not 1 <= idx <= 2 * c2.n - 1:
        raise ValueError("index out of range")
    layout = [(1, 1)]
    layout += [(2, p) for p in range(1, idx + 1)]
    layout += [(1, p) for p in range(2, 2 * c1.n + 1)]
    layout += [(2, p) for p in range(idx + 1, 2 * c2.n + 1)]
    pos = {key: r + 1 for r, key in enumerate(layout)}
    pairs = [(pos[(1, a)], pos[(1, b)]) for a, b in c1]
    pairs += [(pos[(2, a)], pos[(2, b)]) for a, b in c2]
    return ChordDiagram(pairs)


def zeta(c: ChordDiagram) -> tuple[int, ...]:
    """Encode a diagram as a Stirling word: recursively insert the pair
    `n n` at the gap just before where the root sink sat."""
    if c.n == 0:
        return ()
    p = c.sink(1)
    w = zeta(c.remove_chord(1))
    at = p - 2
    return w[:at] + (c.n, c.n) + w[at:]


def _stirling_check(w: tuple[int, ...]) -> int:
    n, r = divmod(len(w), 2)
    if r:
        raise ValueError("word length must be even")
    if sorted(w) != sorted(list(range(1, n + 1)) * 2):
        raise ValueError("word must use each of 1..n exactly twice")
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for i, s in enumerate(w):
        if s in first:
            last[s] = i
        else:
            first[s] = i
    for s in range(1, n + 1):
        if any(x < s for x in w[first[s] + 1:last[s]]):
            raise ValueError("smaller symbol between the two copies of %d" % s)
    return n


def zeta_inverse(w) -> ChordDiagram:
    """Decode a Stirling word back into the unique diagram mapping to it."""
    w = tuple(int(x) for x in w)
    n = _stirling_check(w)
    if n == 0:
        return ChordDiagram.empty()
    i0 = w.index(n)
    inner = w[:i0] + w[i0 + 2:]
    sub = zeta_inverse(inner)
    p = i0 + 2
    mapping: dict[int, int] = {}
    q = 2
    for old in range(1, 2 * n - 1):
        if q == p:
            q += 1
        mapping[old] = q
        q += 1
    pairs = [(1, p)] + [(mapping[a], mapping[b]) for a, b in sub]
    return ChordDiagram(pairs)


def check_tree(t: Tree) -> int:
    """Validate an increasing ordered tree (label, children); root label 0,
    labels 0..n each once, child labels exceed parents.  Returns n."""
    labels: list[int] = []

    def walk(node: Tree) -> None:
        lbl, kids = node
        labels.append(lbl)
        for k in kids:
            if k[0] <= lbl:
                raise ValueError("labels must increase away from the root")
            walk(k)

    if not isinstance(t, tuple) or len(t) != 2:
        raise ValueError("tree nodes are (label, children) pairs")
    if t[0] != 0:
        raise ValueError("root label must be 0")
    walk(t)
    if sorted(labels) != list(range(len(labels))):
        raise ValueError("labels must be exactly 0..n")
    return len(labels) - 1


def eta(t: Tree) -> tuple[int, ...]:
    """Read a Stirling word off an increasing ordered tree: each edge
    contributes the child's label on the way down and on the way back."""
    check_tree(t)
    out: list[int] = []

    def walk(node: Tree) -> None:
        for k in node[1]:
            out.append(k[0])
            walk(k)
            out.append(k[0])

    walk(t)
    return tuple(out)


def eta_inverse(w) -> Tree:
    """Parse a Stirling word into the increasing ordered tree tracing it."""
    w = tuple(int(x) for x in w)
    _stirling_check(w)
    root: list = [0, []]
    stack: list[list] = [root]
    for s in w:
        cur = stack[-1]
        if cur[0] == s:
            stack.pop()
        else:
            node = [s, []]
            cur[1].append(node)
            stack.append(node)
    if len(stack) != 1:
        raise ValueError("unbalanced word")

    def freeze(node: list) -> Tree:
        return (node[0], tuple(freeze(k) for k in node[1]))

    return freeze(root)


def _relabel_tree(t: Tree, values: list[int]) -> Tree:
    return (values[t[0]], tuple(_relabel_tree(k, values) for k in t[1]))


def theta(t: ChordDiagram) -> Tree:
    """Turn a one-terminal diagram of size n+1 into an increasing ordered
    tree on labels 0..n by recursing on the alpha-parts."""
    if not is_one_terminal(t):
        raise ValueError("theta requires a one-terminal diagram")
    if t.n == 1:
        return (0, ())
    kids = []
    for p, block in alpha(t):
        assert len(block) == p.n, "one-terminal parts fill their blocks"
        sub = theta(p)
        kids.append(_relabel_tree(sub, list(block)))
    return (0, tuple(kids))


def theta_inverse(t: Tree) -> ChordDiagram:
    """Inverse of theta: rebuild the one-terminal diagram from the tree."""
    check_tree(t)

    def labels_of(node: Tree) -> list[int]:
        out = [node[0]]
        for k in node[1]:
            out.extend(labels_of(k))
        return out

    def normalize(node: Tree, rank: dict[int, int]) -> Tree:
        return (rank[node[0]], tuple(normalize(k, rank) for k in node[1]))

    parts: Parts = []
    for k in t[1]:
        block = sorted(labels_of(k))
        rank = {v: r for r, v in enumerate(block)}
        parts.append((theta_inverse(normalize(k, rank)), tuple(block)))
    return beta(parts)
