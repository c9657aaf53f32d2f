"""
Generalized tetrahedral triangulations of compact 3-manifolds.

Tetrahedra are numbered 0..size-1 and have vertices 0..3; face ``f`` is the
face opposite vertex ``f``.  The corners of face ``f`` are its three vertices
in increasing order, so corner ``k`` of face 2 is vertex ``(0, 1, 3)[k]``.
A gluing ``(i, f) -> (j, g, p)`` sends corner ``k`` of face ``f`` of
tetrahedron ``i`` to corner ``p[k]`` of face ``g`` of tetrahedron ``j``.
The table stores both directions of every gluing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, NamedTuple

from networkx.utils import UnionFind

from .report import InvalidInput, ValidationReport

FACE_VERTICES = {f: tuple(v for v in range(4) if v != f) for f in range(4)}


def invert_perm(p) -> tuple:
    inv = [0] * len(p)
    for k, pk in enumerate(p):
        inv[pk] = k
    return tuple(inv)


def is_perm(p, n: int) -> bool:
    return len(p) == n and sorted(p) == list(range(n))


@dataclass(frozen=True)
class Triangulation3:
    size: int
    gluings: Mapping = field(default_factory=dict, hash=False)

    def __post_init__(self):
        table = {}
        for (i, f), (j, g, p) in dict(self.gluings).items():
            table[(i, f)] = (j, g, tuple(p))
        object.__setattr__(self, "gluings", table)

    @classmethod
    def from_pairs(cls, size: int, pairs) -> "Triangulation3":
        """Build from ``(i, f, j, g, p)`` records, adding the inverse of each."""
        table = {}
        for i, f, j, g, p in pairs:
            p = tuple(p)
            for slot in ((i, f), (j, g)):
                if slot in table:
                    raise ValueError(f"face {slot} glued twice")
            table[(i, f)] = (j, g, p)
            table[(j, g)] = (i, f, invert_perm(p))
        return cls(size, table)

    def boundary_faces(self) -> list[tuple[int, int]]:
        return [(i, f) for i in range(self.size) for f in range(4) if (i, f) not in self.gluings]

    def vertex_across(self, i: int, f: int, v: int) -> tuple[int, int]:
        """Where vertex ``v`` of tetrahedron ``i`` lands when crossing face ``f``."""
        j, g, p = self.gluings[(i, f)]
        k = FACE_VERTICES[f].index(v)
        return j, FACE_VERTICES[g][p[k]]

    def pairs(self) -> list[tuple]:
        """Each gluing once, from its smaller slot."""
        return [(i, f, j, g, p) for (i, f), (j, g, p) in sorted(self.gluings.items()) if (i, f) <= (j, g)]


def _check_table(t: Triangulation3, report: ValidationReport) -> None:
    for (i, f), (j, g, p) in sorted(t.gluings.items()):
        if not (0 <= i < t.size and 0 <= j < t.size and f in range(4) and g in range(4)):
            report.add("bad index", ((i, f), (j, g)))
            continue
        if not is_perm(p, 3):
            report.add("corner map not a bijection", (i, f), f"got {p}")
            continue
        if (i, f) == (j, g):
            report.add("self-glued face", (i, f))
            continue
        back = t.gluings.get((j, g))
        if back is None or back[:2] != (i, f) or tuple(back[2]) != invert_perm(p):
            report.add("not involutive", (i, f), f"({i},{f})->({j},{g}) but ({j},{g})->{back}")


class _EdgeState(NamedTuple):
    # edge a-b of tetrahedron tet, about to leave through the face opposite c;
    # d is the remaining vertex
    tet: int
    a: int
    b: int
    c: int
    d: int


def _edge_step(t: Triangulation3, s: _EdgeState) -> _EdgeState | None:
    if (s.tet, s.c) not in t.gluings:
        return None
    j, g, _ = t.gluings[(s.tet, s.c)]
    _, a2 = t.vertex_across(s.tet, s.c, s.a)
    _, b2 = t.vertex_across(s.tet, s.c, s.b)
    _, d2 = t.vertex_across(s.tet, s.c, s.d)
    return _EdgeState(j, a2, b2, d2, g)


def _walk(t: Triangulation3, start: _EdgeState) -> tuple[list[_EdgeState], bool]:
    """States met from ``start`` until the fan closes (True) or hits the boundary."""
    states = [start]
    s = _edge_step(t, start)
    while s is not None and s != start:
        if len(states) > 6 * t.size:
            break
        states.append(s)
        s = _edge_step(t, s)
    return states, s == start


def _edge_links(t: Triangulation3, report: ValidationReport) -> list[list[tuple]]:
    """Walk the tetrahedron fan around every edge; record broken fans."""
    seen = set()
    classes = []
    for tet in range(t.size):
        for a, b in combinations(range(4), 2):
            if (tet, a, b) in seen:
                continue
            c, d = (v for v in range(4) if v not in (a, b))
            states, closed = _walk(t, _EdgeState(tet, a, b, c, d))
            if not closed:
                back, _ = _walk(t, _EdgeState(tet, a, b, d, c))
                states += back[1:]
            members = {}
            for s in states:
                key = (s.tet, min(s.a, s.b), max(s.a, s.b))
                members.setdefault(key, []).append((s.a, s.b))
            for key, uses in sorted(members.items()):
                if len(uses) > 1:
                    flipped = any(u != uses[0] for u in uses)
                    why = "edge identified with itself reversed" if flipped else "edge fan is not a simple cycle or path"
                    report.add("bad edge link", key, why)
                    break
            seen.update(members)
            classes.append(sorted(members))
    return classes


def validate3(t: Triangulation3, strict_links: bool = False) -> ValidationReport:
    report = ValidationReport()
    if t.size < 1:
        report.add("empty triangulation", None)
        return report
    _check_table(t, report)
    boundary = t.boundary_faces()
    report.details.update(boundary_faces=len(boundary), closed=not boundary)
    if strict_links and report.ok:
        report.details["edge_classes"] = len(_edge_links(t, report))
    return report


def require_valid3(t: Triangulation3) -> None:
    report = validate3(t)
    if not report.ok:
        raise InvalidInput("triangulation", report)


def is_simplicial3(t: Triangulation3) -> bool:
    """True when ``t`` is a simplicial complex.

    Every tetrahedron, face and edge must have distinct vertex classes, and
    no two distinct cells of the same dimension may share a vertex set.
    """
    require_valid3(t)
    vertices = UnionFind()
    edges = UnionFind()
    faces = UnionFind()
    for i in range(t.size):
        for v in range(4):
            vertices[(i, v)]
        for e in combinations(range(4), 2):
            edges[(i, e)]
        for f in range(4):
            faces[(i, f)]
    for (i, f), (j, g, _) in t.gluings.items():
        faces.union((i, f), (j, g))
        for v in FACE_VERTICES[f]:
            vertices.union((i, v), t.vertex_across(i, f, v))
        for e in combinations(FACE_VERTICES[f], 2):
            img = tuple(sorted(t.vertex_across(i, f, v)[1] for v in e))
            edges.union((i, e), (j, img))

    def vset(i, verts):
        return frozenset(vertices[(i, v)] for v in verts)

    cells = [
        {("T", i): [(i, range(4))] for i in range(t.size)},
        {},
        {},
    ]
    for i in range(t.size):
        for f in range(4):
            cells[1].setdefault(faces[(i, f)], []).append((i, FACE_VERTICES[f]))
        for e in combinations(range(4), 2):
            cells[2].setdefault(edges[(i, e)], []).append((i, e))
    for table in cells:
        owner = {}
        for cell, reps in table.items():
            for i, verts in reps:
                verts = tuple(verts)
                vs = vset(i, verts)
                if len(vs) != len(verts):
                    return False
                if owner.setdefault(vs, cell) != cell:
                    return False
    return True


# Chains (face, edge, vertex) of a tetrahedron: F contains e contains v.
CHAINS = tuple(
    (f, e, v)
    for f in range(4)
    for e in combinations(FACE_VERTICES[f], 2)
    for v in e
)
CHAIN_INDEX = {chain: n for n, chain in enumerate(CHAINS)}


class Chain(NamedTuple):
    tet: int
    face: int
    edge: tuple[int, int]
    vertex: int


def subdivision_chain(index: int) -> Chain:
    """The chain of the original triangulation that a subdivided tetrahedron comes from."""
    tet, n = divmod(index, 24)
    f, e, v = CHAINS[n]
    return Chain(tet, f, e, v)


def barycentric_subdivide3(t: Triangulation3) -> Triangulation3:
    """First barycentric subdivision.

    Tetrahedron ``24 * i + n`` of the result is the simplex
    ``[centre(i), centre(F), centre(e), v]`` for the ``n``-th chain
    ``(F, e, v)`` of tetrahedron ``i``; its local vertices 0..3 are those four
    points in that order.  Every gluing of the result is the identity on
    corners.
    """
    require_valid3(t)
    pairs = []
    identity = (0, 1, 2)
    for i in range(t.size):
        base = 24 * i
        for n, (f, e, v) in enumerate(CHAINS):
            me = base + n
            # opposite v: the other vertex of e
            w = e[0] if v == e[1] else e[1]
            pairs.append((me, 3, base + CHAIN_INDEX[(f, e, w)], 3, identity))
            # opposite centre(e): the other edge of F through v
            (other,) = (x for x in FACE_VERTICES[f] if x not in e)
            e2 = tuple(sorted((v, other)))
            pairs.append((me, 2, base + CHAIN_INDEX[(f, e2, v)], 2, identity))
            # opposite centre(F): the other face through e
            (f2,) = (x for x in range(4) if x not in e and x != f)
            pairs.append((me, 1, base + CHAIN_INDEX[(f2, e, v)], 1, identity))
            # opposite centre(tet): across the original face F
            if (i, f) in t.gluings:
                j, g, _ = t.gluings[(i, f)]
                e_img = tuple(sorted(t.vertex_across(i, f, x)[1] for x in e))
                v_img = t.vertex_across(i, f, v)[1]
                pairs.append((me, 0, 24 * j + CHAIN_INDEX[(g, e_img, v_img)], 0, identity))
    table = {}
    for me, k, other, k2, p in pairs:
        table[(me, k)] = (other, k2, p)
    return Triangulation3(24 * t.size, table)
