"""Structural statistics of chord diagrams.

Intersection order, terminal chords, k-terminality, source-sink groups,
traced subdiagrams, chord valencies, and crossing-graph connectivity.
"""

from __future__ import annotations

from bisect import bisect_right

from .diagram import ChordDiagram


def connected_components(d: ChordDiagram) -> list[tuple[int, ...]]:
    """Crossing-graph components as label tuples, by leftmost endpoint."""
    return d.components()


def indecomposable_components(d: ChordDiagram) -> list[tuple[int, ...]]:
    """Maximal concatenation factors as label tuples, left to right."""
    return d.indecomposable_components()


def intersection_order(d: ChordDiagram) -> tuple[int, ...]:
    """Chord labels in the intersection order.

    Label the root, remove it, and recurse on the crossing-graph components
    of what is left, taken in order of their smallest source. Entry p-1 of
    the result is the standard-order label sitting at position p. Defined
    for connected nonempty diagrams.
    """
    if d.n == 0 or not d.is_connected():
        raise ValueError("intersection order needs a connected nonempty diagram")
    return _intersection_order_any(d)


def _intersection_order_any(d: ChordDiagram) -> tuple[int, ...]:
    adj = d.adjacency()

    def rec(labels: list[int]) -> list[int]:
        if not labels:
            return []
        out = [labels[0]]
        remaining = set(labels[1:])
        while remaining:
            s = min(remaining)
            comp = {s}
            frontier = {s}
            while frontier:
                nxt = set()
                for v in frontier:
                    m = adj[v - 1]
                    for w in remaining:
                        if w not in comp and m >> (w - 1) & 1:
                            nxt.add(w)
                comp |= nxt
                frontier = nxt
            out += rec(sorted(comp))
            remaining -= comp
        return out

    return tuple(rec(list(range(1, d.n + 1))))


def terminal_labels(d: ChordDiagram) -> tuple[int, ...]:
    """Chords with no right neighbor, in standard order. Any diagram."""
    return tuple(i for i in range(1, d.n + 1) if not d.right_neighbors(i))


def terminal_profile(d: ChordDiagram) -> tuple[int, ...]:
    """Positions of the terminal chords in the intersection order, ascending.

    Connected nonempty diagrams only.
    """
    order = intersection_order(d)
    pos = {lab: p + 1 for p, lab in enumerate(order)}
    return tuple(sorted(pos[lab] for lab in terminal_labels(d)))


def t1(d: ChordDiagram) -> int:
    """Index of the first terminal chord in the intersection order."""
    return terminal_profile(d)[0]


def is_one_terminal(d: ChordDiagram) -> bool:
    """Connected with exactly one terminal chord."""
    return d.is_connected() and len(terminal_labels(d)) == 1


def is_k_terminal(d: ChordDiagram, k: int) -> bool:
    """No chord with at most j-1 right neighbors sits strictly before
    intersection position n-j+1, for every j <= k.

    True for the empty diagram, false for disconnected ones (k >= 1).
    k beyond n means the same as k = n.
    """
    if k <= 0 or d.n == 0:
        return True
    if not d.is_connected():
        return False
    n = d.n
    order = intersection_order(d)
    rn_count = [len(d.right_neighbors(i)) for i in range(1, n + 1)]
    for j in range(1, min(k, n) + 1):
        cutoff = n - j + 1
        if cutoff <= 1:
            continue  # vacuous
        for p in range(1, cutoff):
            if rn_count[order[p - 1] - 1] <= j - 1:
                return False
    return True


def terminality(d: ChordDiagram) -> int:
    """Largest k <= n for which the diagram is k-terminal; 0 if none or empty."""
    if d.n == 0 or not d.is_connected():
        return 0
    k = 0
    while k < d.n and is_k_terminal(d, k + 1):
        k += 1
    return k


def is_k_terminal_minimal(d: ChordDiagram, k: int) -> bool:
    """k-terminal, and all but the last k chords in the intersection order
    have exactly k right neighbors."""
    if not is_k_terminal(d, k):
        return False
    n = d.n
    order = intersection_order(d)
    for p in range(1, n - k + 1):
        if len(d.right_neighbors(order[p - 1])) != k:
            return False
    return True


def source_sink_groups(d: ChordDiagram, m: int | None = None) -> dict[int, list[int]]:
    """Per-chord endpoint groups over the ground set D of the first m chords
    in the intersection order (m defaults to t1).

    The group of c in D is the maximal contiguous stretch from c's source
    onward that consumes sinks of other D chords and whole indecomposable
    blocks of C - D; it stops at the first D source, at c's own sink, or
    at a block that cannot be swallowed before reaching either.
    """
    order = intersection_order(d)
    if m is None:
        m = terminal_profile(d)[0]
    dset = set(order[:m])
    n2 = 2 * d.n
    kind = [0] * (n2 + 1)  # 1 = D source, 2 = D sink, 3 = outside D
    for i in range(1, d.n + 1):
        a, b = d.pairs[i - 1]
        if i in dset:
            kind[a], kind[b] = 1, 2
        else:
            kind[a] = kind[b] = 3

    # indecomposable blocks of the non-D chords: reach[p] = far end of p's block
    reach = [0] * (n2 + 1)
    rest = [i for i in range(1, d.n + 1) if i not in dset]
    if rest:
        pts = sorted(p for i in rest for p in d.pairs[i - 1])
        sinks = {d.pairs[i - 1][1] for i in rest}
        open_count = 0
        block: list[int] = []
        for p in pts:
            block.append(p)
            open_count += -1 if p in sinks else 1
            if open_count == 0:
                for q in block:
                    reach[q] = block[-1]
                block = []

    groups: dict[int, list[int]] = {}
    for c in order[:m]:
        s, own_sink = d.pairs[c - 1]
        pts_out = [s]
        p = s + 1
        while p <= n2:
            if kind[p] != 3:
                if p == own_sink or kind[p] == 1:
                    break
                pts_out.append(p)
                p += 1
                continue
            h = reach[p]
            q = p
            ok = True
            while q <= h:
                if kind[q] != 3:
                    if q == own_sink or kind[q] == 1:
                        ok = False
                        break
                else:
                    h = max(h, reach[q])
                q += 1
            if not ok:
                break
            pts_out.extend(range(p, h + 1))
            p = h + 1
        groups[c] = pts_out
    return groups


def traced_subdiagram(d: ChordDiagram, label: int) -> set[int]:
    """Closure of {label}: a chord joins when its rightmost-source right
    neighbor is already in the set. Meaningful for 1-terminal diagrams."""
    last_rn = {}
    for i in range(1, d.n + 1):
        rn = d.right_neighbors(i)
        if rn:
            last_rn[i] = max(rn, key=lambda j: d.pairs[j - 1][0])
    out = {label}
    changed = True
    while changed:
        changed = False
        for i, j in last_rn.items():
            if i not in out and j in out:
                out.add(i)
                changed = True
    return out


def valency_parts(d: ChordDiagram, i: int) -> tuple[int, int]:
    """(k, l) for chord i: k counts left neighbors crossing nothing later
    than i; l counts the closed chord blocks packed consecutively after i's
    source once all left neighbors are deleted, stopping at i's own sink or
    at a block that cannot close before reaching it."""
    x, y = d.pairs[i - 1]
    left = set(d.left_neighbors(i))
    k = 0
    for b in left:
        if not any(d.crosses(b, e) for e in range(i + 1, d.n + 1)):
            k += 1

    partner: dict[int, int] = {}
    for c in range(1, d.n + 1):
        if c == i or c in left:
            continue
        a, b = d.pairs[c - 1]
        partner[a] = b
        partner[b] = a
    pts = sorted(partner)

    l = 0
    idx = bisect_right(pts, x)
    while idx < len(pts):
        p = pts[idx]
        if p > y:
            break
        h = partner[p]
        if h < p or h > y:
            break
        j = idx + 1
        while j < len(pts) and pts[j] < h:
            h = max(h, partner[pts[j]])
            j += 1
        if h > y:
            break
        l += 1
        idx = bisect_right(pts, h)
    return k, l


def valency(d: ChordDiagram, i: int) -> int:
    k, l = valency_parts(d, i)
    return k + l


def vertex_connectivity(d: ChordDiagram) -> int:
    """Connectivity of the crossing graph: 0 for empty, single-chord, or
    disconnected diagrams, n-1 for complete crossing graphs, else the
    smallest vertex cut, found as a max flow between non-adjacent pairs."""
    n = d.n
    if n <= 1 or not d.is_connected():
        return 0
    adj = d.adjacency()
    full = (1 << n) - 1
    best = n - 1
    for s in range(n):
        if adj[s] | 1 << s == full:
            continue  # adjacent to everything, no cut excludes it as endpoint
        for t in range(s + 1, n):
            if not adj[s] >> t & 1:
                best = min(best, _vertex_flow(adj, n, s, t, best))
    return best


def is_k_connected(d: ChordDiagram, k: int) -> bool:
    """At least k chords, and no set of fewer than k chords disconnects the
    crossing graph.

    Complete crossing graphs have no disconnecting set at all, so they are
    k-connected for every k up to their size; for any other graph this is
    vertex_connectivity(d) >= k.
    """
    if k <= 0:
        return True
    n = d.n
    if n < k or not d.is_connected():
        return False
    adj = d.adjacency()
    full = (1 << n) - 1
    if all(adj[v] | 1 << v == full for v in range(n)):
        return True
    return vertex_connectivity(d) >= k


def _vertex_flow(adj: tuple[int, ...], n: int, s: int, t: int, cap_at: int) -> int:
    # unit vertex capacities via splitting: node v -> v_in (2v), v_out (2v+1)
    succ: list[set[int]] = [set() for _ in range(2 * n)]
    for v in range(n):
        succ[2 * v].add(2 * v + 1)
        m = adj[v]
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            succ[2 * v + 1].add(2 * w)
    src, dst = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap_at:
        prev = {src: -1}
        queue = [src]
        qi = 0
        while qi < len(queue) and dst not in prev:
            u = queue[qi]
            qi += 1
            for w in succ[u]:
                if w not in prev:
                    prev[w] = u
                    queue.append(w)
        if dst not in prev:
            break
        v = dst
        while v != src:
            u = prev[v]
            succ[u].discard(v)
            succ[v].add(u)
            v = u
        flow += 1
    return flow


def edge_connectivity(d: ChordDiagram) -> int:
    """Edge connectivity of the crossing graph; 0 when empty, single, or
    disconnected."""
    n = d.n
    if n <= 1 or not d.is_connected():
        return 0
    adj = d.adjacency()
    best = n - 1
    for t in range(1, n):
        cap = {}
        for v in range(n):
            m = adj[v]
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                cap[(v, w)] = 1
        flow = 0
        while flow < best:
            prev = {0: -1}
            queue = [0]
            qi = 0
            while qi < len(queue) and t not in prev:
                u = queue[qi]
                qi += 1
                for w in range(n):
                    if w not in prev and cap.get((u, w), 0) > 0:
                        prev[w] = u
                        queue.append(w)
            if t not in prev:
                break
            v = t
            while v != 0:
                u = prev[v]
                cap[(u, v)] -= 1
                cap[(v, u)] = cap.get((v, u), 0) + 1
                v = u
            flow += 1
        best = min(best, flow)
    return best


def exists_nonnesting_induced_path(d: ChordDiagram, a: int, b: int) -> bool:
    """Is there an induced crossing-graph path from a to b whose chords are
    pairwise non-nesting (non-consecutive ones disjoint)?"""
    if a == b:
        return True

    def extend(path: tuple[int, ...]) -> bool:
        last = path[-1]
        for w in range(1, d.n + 1):
            if w in path or not d.crosses(last, w):
                continue
            if any(d.relation(u, w) != "disjoint" for u in path[:-1]):
                continue
            if w == b or extend(path + (w,)):
                return True
        return False

    return extend((a,))
