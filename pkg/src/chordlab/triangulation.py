"""Rooted plane triangulations of a polygon, and the maps omega / gamma
between them and connected top-cycle-free diagrams."""

from __future__ import annotations

import json

from .bijections import alpha
from .diagram import ChordDiagram
from .patterns import contains_any_top_cycle


def _rot_min(f: tuple[int, int, int]) -> tuple[int, int, int]:
    # rotate an oriented triple so its smallest vertex leads
    i = f.index(min(f))
    return f[i:] + f[:i]


class Triangulation:
    """A rooted plane triangulation of a polygon.

    `boundary` walks the outer face once; the root edge joins boundary[0]
    to boundary[-1].  `faces` holds the bounded faces as oriented triples,
    each rotated so its smallest vertex leads.  Face orientation is
    opposite to the boundary walk, so every directed edge lies on exactly
    one side: a bounded face or the outer walk.
    """

    __slots__ = ("faces", "boundary")

    def __init__(self, faces, boundary):
        object.__setattr__(self, "faces", frozenset(_rot_min(tuple(f)) for f in faces))
        object.__setattr__(self, "boundary", tuple(boundary))

    def __setattr__(self, name, value):
        raise AttributeError("Triangulation is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Triangulation)
            and self.faces == other.faces
            and self.boundary == other.boundary
        )

    def __hash__(self) -> int:
        return hash((self.faces, self.boundary))

    def __repr__(self) -> str:
        return "Triangulation(%s, %r)" % (sorted(self.faces), list(self.boundary))

    def vertices(self) -> list[int]:
        vs = set(self.boundary)
        for f in self.faces:
            vs.update(f)
        return sorted(vs)

    def edges(self) -> set[frozenset[int]]:
        es: set[frozenset[int]] = set()
        b = self.boundary
        for i in range(len(b)):
            es.add(frozenset((b[i], b[(i + 1) % len(b)])))
        for f in self.faces:
            for i in range(3):
                es.add(frozenset((f[i], f[(i + 1) % 3])))
        return es

    def corner_map(self) -> dict[tuple[int, int], int]:
        """For each directed edge (u, v): the exit vertex w such that the
        walk u -> v -> w turns inside the face owning (u, v)."""
        corner: dict[tuple[int, int], int] = {}
        cycles = [tuple(f) for f in self.faces] + [self.boundary]
        for cyc in cycles:
            m = len(cyc)
            for i in range(m):
                key = (cyc[i], cyc[(i + 1) % m])
                if key in corner:
                    raise ValueError("directed edge on two faces: %r" % (key,))
                corner[key] = cyc[(i + 2) % m]
        return corner

    def validate(self) -> None:
        b = self.boundary
        if len(b) < 2 or len(set(b)) != len(b):
            raise ValueError("boundary must be a simple walk of >= 2 vertices")
        for f in self.faces:
            if len(f) != 3 or len(set(f)) != 3:
                raise ValueError("faces must be triangles")
        corner = self.corner_map()
        es = self.edges()
        for e in es:
            u, v = tuple(e)
            if u == v:
                raise ValueError("loop edge")
            if (u, v) not in corner or (v, u) not in corner:
                raise ValueError("edge missing a side: %r" % (e,))
        if len(corner) != 2 * len(es):
            raise ValueError("directed edges do not pair up")
        # single rotation cycle at every vertex
        nbr: dict[int, set[int]] = {}
        for u, v in corner:
            nbr.setdefault(v, set()).add(u)
        for v, ns in nbr.items():
            start = next(iter(ns))
            x, cnt = start, 0
            while True:
                x = corner[(x, v)]
                cnt += 1
                if x == start:
                    break
                if cnt > len(ns):
                    raise ValueError("split rotation at vertex %d" % v)
            if cnt != len(ns):
                raise ValueError("split rotation at vertex %d" % v)
        # connected
        verts = self.vertices()
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            v = stack.pop()
            for u in nbr.get(v, ()):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(seen) != len(verts):
            raise ValueError("not connected")
        # Euler: V - E + (bounded faces + outer) = 2
        if len(verts) - len(es) + len(self.faces) + 1 != 2:
            raise ValueError("Euler count failed")

    def canonical_code(self) -> str:
        """Label vertices by a breadth-first sweep from the root edge,
        reading each rotation from the entry edge; equal codes mean equal
        rooted plane triangulations."""
        corner = self.corner_map()
        root, anchor = self.boundary[0], self.boundary[-1]
        lab = {root: 0}
        entry = {root: anchor}
        queue = [root]
        rows: list[str] = []
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            u0 = entry[v]
            seq = []
            x = u0
            while True:
                seq.append(x)
                x = corner[(x, v)]
                if x == u0:
                    break
            row = []
            for w in seq:
                if w not in lab:
                    lab[w] = len(lab)
                    entry[w] = v
                    queue.append(w)
                row.append(lab[w])
            rows.append(",".join(map(str, row)))
        return ";".join(rows)

    def to_json(self) -> dict:
        return {
            "vertices": self.vertices(),
            "boundary": list(self.boundary),
            "faces": sorted(list(f) for f in self.faces),
            "root_edge": [self.boundary[0], self.boundary[-1]],
        }

    @classmethod
    def from_json(cls, obj) -> "Triangulation":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(tuple(map(tuple, obj["faces"])), tuple(obj["boundary"]))


def triangulation_canonical_code(t: Triangulation) -> str:
    return t.canonical_code()


def _remap(t: Triangulation, m: dict[int, int]) -> Triangulation:
    g = lambda v: m.get(v, v)
    return Triangulation(
        [tuple(g(x) for x in f) for f in t.faces],
        [g(x) for x in t.boundary],
    )


def _build(c: ChordDiagram, base: int) -> tuple[Triangulation, int]:
    if c.n == 1:
        return Triangulation((), (base, base + 1)), base + 2
    pieces: list[tuple[Triangulation, int]] = []
    nxt = base
    for p, block in alpha(c):
        t, nxt = _build(p, nxt)
        pieces.append((t, len(block)))
    # chain the pieces: each next piece's first boundary vertex lands on
    # the previous piece's boundary at its block size
    glued = [pieces[0]]
    for t, i in pieces[1:]:
        prev_t, prev_i = glued[-1]
        join = prev_t.boundary[prev_i]
        glued.append((_remap(t, {t.boundary[0]: join}), i))
    faces = [f for t, _ in glued for f in t.faces]
    # walk of the new bounded region: start at the far root corner, then
    # ride each piece's boundary backwards down to its join vertex
    walk = [glued[0][0].boundary[0]]
    for t, i in glued:
        b = t.boundary
        walk.extend(b[len(b) - 1:i - 1:-1])
    apex = nxt
    nxt += 1
    for r in range(len(walk) - 1):
        faces.append((walk[r + 1], walk[r], apex))
    boundary = list(glued[0][0].boundary[:glued[0][1] + 1])
    for t, i in glued[1:]:
        boundary.extend(t.boundary[1:i + 1])
    boundary.append(apex)
    return Triangulation(faces, boundary), nxt


def omega(c: ChordDiagram) -> Triangulation:
    """Map a connected top-cycle-free diagram of size n to a rooted plane
    triangulation with t1(C)+1 outer and n-t1(C) inner vertices."""
    if not c.is_connected():
        raise ValueError("omega requires a connected diagram")
    if contains_any_top_cycle(c):
        raise ValueError("omega requires a top-cycle-free diagram")
    t, _ = _build(c, 0)
    return t


def _third(f: tuple[int, int, int], u: int, v: int) -> int:
    # the vertex after v when f is read cyclically from u
    i = f.index(u)
    assert f[(i + 1) % 3] == v
    return f[(i + 2) % 3]


def gamma(t: Triangulation) -> list[tuple[Triangulation, int]]:
    """Peel the apex off a triangulation: returns the glued pieces and
    their block sizes, inverting the omega join step."""
    if len(t.boundary) < 3:
        raise ValueError("gamma needs at least one bounded face")
    apex = t.boundary[-1]
    face_dir: dict[tuple[int, int], tuple[int, int, int]] = {}
    for f in t.faces:
        for i in range(3):
            face_dir[(f[i], f[(i + 1) % 3])] = f
    # fan walk: follow the bounded faces around the apex
    walk = [t.boundary[0]]
    x = t.boundary[0]
    while (x, apex) in face_dir:
        x = _third(face_dir[(x, apex)], x, apex)
        walk.append(x)
    bpos = {v: q for q, v in enumerate(t.boundary)}
    cuts = [r for r in range(1, len(walk)) if walk[r] in bpos]
    spans = [bpos[walk[r]] for r in cuts]
    assert spans == sorted(spans) and spans[-1] == len(t.boundary) - 2

    inner = [f for f in t.faces if apex not in f]
    # cluster the non-apex faces by shared edges
    parent = {f: f for f in inner}

    def find(f):
        while parent[f] != f:
            parent[f] = parent[parent[f]]
            f = parent[f]
        return f

    owner: dict[frozenset[int], tuple] = {}
    for f in inner:
        for i in range(3):
            e = frozenset((f[i], f[(i + 1) % 3]))
            if e in owner:
                parent[find(owner[e])] = find(f)
            else:
                owner[e] = f
    clusters: dict[tuple, list] = {}
    for f in inner:
        clusters.setdefault(find(f), []).append(f)

    out: list[tuple[Triangulation, int]] = []
    prev_cut = 0
    prev_span = 0
    for r, s in zip(cuts, spans):
        seg = walk[prev_cut + 1:r + 1]
        b = list(t.boundary[prev_span:s + 1]) + list(reversed(seg))[1:]
        bset = {frozenset((b[i], b[(i + 1) % len(b)])) for i in range(len(b))}
        faces: list[tuple[int, int, int]] = []
        for rep, fs in clusters.items():
            if any(
                frozenset((f[i], f[(i + 1) % 3])) in bset
                for f in fs
                for i in range(3)
            ):
                faces.extend(fs)
                clusters[rep] = []
        clusters = {k: v for k, v in clusters.items() if v}
        out.append((Triangulation(faces, b), s - prev_span))
        prev_cut, prev_span = r, s
    assert not clusters, "every face cluster belongs to a piece"
    return out
