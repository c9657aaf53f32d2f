"""
Triangulated surfaces, their invariants, barycentric subdivision and
simplicial automorphisms.

A surface is a list of triangles over opaque vertex labels.  By default it
is *simplicial*: an edge is the unordered pair of its endpoints, so two
triangles sharing two vertices share an edge.  Passing ``sides`` switches to
a generalized (Delta-complex style) surface in which every triangle names
the edges opposite its three corners explicitly; this is how quotient
surfaces with several edges between the same two vertices (the
three-vertex projective plane, say) are represented.  Automorphisms are
vertex bijections and therefore only make sense on simplicial surfaces.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Hashable, Iterable, Mapping

import networkx as nx
from networkx.algorithms import isomorphism
from networkx.utils import UnionFind

from ._labels import label_key, sorted_labels
from .report import InvalidInput, ValidationReport

Label = Hashable


class NotAnAutomorphism(ValueError):
    def __init__(self, message: str, triangle=None):
        super().__init__(message)
        self.triangle = triangle


@dataclass(frozen=True)
class SurfaceTriangulation:
    triangles: tuple
    sides: tuple | None = None
    allow_disconnected: bool = False

    def __post_init__(self):
        triangles = tuple(tuple(t) for t in self.triangles)
        for t in triangles:
            if len(t) != 3:
                raise ValueError(f"triangle {t!r} does not have 3 corners")
        object.__setattr__(self, "triangles", triangles)
        if self.sides is not None:
            sides = tuple(tuple(s) for s in self.sides)
            if len(sides) != len(triangles) or any(len(s) != 3 for s in sides):
                raise ValueError("sides must give 3 edge keys per triangle")
            object.__setattr__(self, "sides", sides)

    @property
    def simplicial(self) -> bool:
        return self.sides is None

    def side_keys(self, i: int) -> tuple:
        """Edge keys of triangle ``i``; entry k is the side opposite corner k."""
        if self.sides is not None:
            return self.sides[i]
        a, b, c = self.triangles[i]
        return (frozenset((b, c)), frozenset((c, a)), frozenset((a, b)))

    @cached_property
    def vertices(self) -> frozenset:
        return frozenset(v for t in self.triangles for v in t)

    @cached_property
    def edge_uses(self) -> dict:
        """Map edge key -> list of (triangle index, side index)."""
        uses = defaultdict(list)
        for i in range(len(self.triangles)):
            for k, key in enumerate(self.side_keys(i)):
                uses[key].append((i, k))
        return dict(uses)

    @cached_property
    def edges(self) -> dict:
        """Map edge key -> frozenset of its endpoints (as seen first)."""
        out = {}
        for key, uses in self.edge_uses.items():
            i, k = uses[0]
            t = self.triangles[i]
            out[key] = frozenset((t[(k + 1) % 3], t[(k + 2) % 3]))
        return out

    def boundary_edges(self) -> list:
        return [key for key, uses in self.edge_uses.items() if len(uses) == 1]

    def __len__(self) -> int:
        return len(self.triangles)


def _endpoints(t: SurfaceTriangulation, i: int, k: int) -> tuple:
    tri = t.triangles[i]
    return tri[(k + 1) % 3], tri[(k + 2) % 3]


def validate_surface(t: SurfaceTriangulation) -> ValidationReport:
    report = ValidationReport()
    if not t.triangles:
        report.add("empty surface", None)
        return report

    for i, tri in enumerate(t.triangles):
        if len(set(tri)) != 3:
            report.add("degenerate triangle", tri, "repeated vertex")
        if len(set(t.side_keys(i))) != 3:
            report.add("repeated side", tri, "a side is glued to another side of the same triangle")

    if t.sides is not None:
        for key, uses in t.edge_uses.items():
            ends = {frozenset(_endpoints(t, i, k)) for i, k in uses}
            if len(ends) > 1:
                report.add("inconsistent edge", key, "edge key used with different endpoints")

    seen = {}
    for i, tri in enumerate(t.triangles):
        ident = frozenset(tri) if t.simplicial else frozenset(t.side_keys(i))
        if ident in seen:
            report.add("duplicate triangle", tri, f"same as triangle {seen[ident]}")
        else:
            seen[ident] = i

    for key, uses in t.edge_uses.items():
        if len(uses) > 2:
            report.add("overfull edge", sorted_labels(t.edges[key]), f"lies in {len(uses)} triangles")

    if report.violations:
        # link and connectivity checks assume well-formed triangles
        return report

    # vertex links: nodes are incident edges, arcs are corners at the vertex
    corners = defaultdict(list)
    for i, tri in enumerate(t.triangles):
        keys = t.side_keys(i)
        for k, v in enumerate(tri):
            corners[v].append((keys[(k + 1) % 3], keys[(k + 2) % 3]))
    for v in sorted_labels(corners):
        uf = UnionFind()
        degree = defaultdict(int)
        for e1, e2 in corners[v]:
            uf.union(e1, e2)
            degree[e1] += 1
            degree[e2] += 1
        if len(list(uf.to_sets())) != 1 or max(degree.values()) > 2:
            report.add("bad vertex link", v, "link is not a single path or cycle")

    components = _components(t)
    boundary = t.boundary_edges()
    report.details.update(
        closed=not boundary,
        boundary_edges=len(boundary),
        components=len(components),
    )
    if len(components) > 1 and not t.allow_disconnected:
        report.add("disconnected", len(components), "surface has several components")
    return report


def _components(t: SurfaceTriangulation) -> list[list[int]]:
    uf = UnionFind(range(len(t.triangles)))
    for uses in t.edge_uses.values():
        uf.union(*(i for i, _ in uses))
    first = {}
    for i, tri in enumerate(t.triangles):
        for v in tri:
            if v in first:
                uf.union(first[v], i)
            else:
                first[v] = i
    return sorted((sorted(s) for s in uf.to_sets()), key=lambda c: c[0])


def require_valid(t: SurfaceTriangulation) -> None:
    report = validate_surface(t)
    if not report.ok:
        raise InvalidInput("surface", report)


@dataclass(frozen=True)
class SurfaceStats:
    euler_characteristic: int
    orientable: bool
    boundary_components: int
    components: int


def _orientable(t: SurfaceTriangulation) -> bool:
    sign = {}
    for comp in _components(t):
        start = comp[0]
        sign[start] = 1
        stack = [start]
        while stack:
            i = stack.pop()
            for k, key in enumerate(t.side_keys(i)):
                a, b = _endpoints(t, i, k)
                if sign[i] < 0:
                    a, b = b, a
                for j, m in t.edge_uses[key]:
                    if (j, m) == (i, k):
                        continue
                    c, d = _endpoints(t, j, m)
                    # coherent orientations traverse a shared edge in opposite directions
                    want = 1 if (c, d) == (b, a) else -1
                    if j not in sign:
                        sign[j] = want
                        stack.append(j)
                    elif sign[j] != want:
                        return False
    return True


def surface_stats(t: SurfaceTriangulation) -> SurfaceStats:
    require_valid(t)
    boundary = t.boundary_edges()
    uf = UnionFind(boundary)
    at_vertex = defaultdict(list)
    for key in boundary:
        for v in t.edges[key]:
            at_vertex[v].append(key)
    for keys in at_vertex.values():
        uf.union(*keys)
    chi = len(t.vertices) - len(t.edge_uses) + len(t.triangles)
    return SurfaceStats(
        euler_characteristic=chi,
        orientable=_orientable(t),
        boundary_components=len(list(uf.to_sets())) if boundary else 0,
        components=len(_components(t)),
    )


def split_components(t: SurfaceTriangulation) -> list[SurfaceTriangulation]:
    """The connected components, in order of their first triangle."""
    out = []
    for comp in _components(t):
        triangles = [t.triangles[i] for i in comp]
        sides = None if t.simplicial else [t.sides[i] for i in comp]
        out.append(SurfaceTriangulation(triangles, sides))
    return out


def barycentric_subdivide_surface(t: SurfaceTriangulation) -> SurfaceTriangulation:
    """First barycentric subdivision.

    Vertices of the result are the simplices of ``t``.  For a simplicial
    input each simplex is labelled by its vertex set (a frozenset); for a
    generalized input the labels are ``("v", v)``, ``("e", key)`` and
    ``("t", index)``.  The result is always simplicial.  Sub-triangles keep
    the orientation of their parent triangle.
    """
    require_valid(t)
    if t.simplicial:
        def vlabel(v):
            return frozenset((v,))

        def elabel(key):
            return key

        def tlabel(i):
            return frozenset(t.triangles[i])
    else:
        def vlabel(v):
            return ("v", v)

        def elabel(key):
            return ("e", key)

        def tlabel(i):
            return ("t", i)

    out = []
    for i, tri in enumerate(t.triangles):
        keys = t.side_keys(i)
        centre = tlabel(i)
        for k in range(3):
            a, b = tri[(k + 1) % 3], tri[(k + 2) % 3]
            mid = elabel(keys[k])
            # a -> b runs along the parent orientation
            out.append((vlabel(a), mid, centre))
            out.append((vlabel(b), centre, mid))
    return SurfaceTriangulation(out, allow_disconnected=t.allow_disconnected)


@dataclass(frozen=True)
class SimplicialAutomorphism:
    """A vertex bijection, meant to act simplicially on some surface."""

    vertex_map: Mapping = field(hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertex_map", dict(self.vertex_map))

    def __call__(self, v):
        return self.vertex_map[v]

    def image(self, simplex: Iterable) -> frozenset:
        return frozenset(self.vertex_map[v] for v in simplex)

    def compose(self, other: "SimplicialAutomorphism") -> "SimplicialAutomorphism":
        """``self`` after ``other``."""
        return SimplicialAutomorphism({v: self.vertex_map[w] for v, w in other.vertex_map.items()})

    def inverse(self) -> "SimplicialAutomorphism":
        return SimplicialAutomorphism({w: v for v, w in self.vertex_map.items()})

    def power(self, k: int) -> "SimplicialAutomorphism":
        base = self if k >= 0 else self.inverse()
        result = SimplicialAutomorphism.identity(self.vertex_map)
        for _ in range(abs(k)):
            result = base.compose(result)
        return result

    def is_identity(self) -> bool:
        return all(v == w for v, w in self.vertex_map.items())

    def cycles(self) -> list[tuple]:
        seen = set()
        out = []
        for v in sorted_labels(self.vertex_map):
            if v in seen:
                continue
            cyc = [v]
            seen.add(v)
            w = self.vertex_map[v]
            while w != v:
                cyc.append(w)
                seen.add(w)
                w = self.vertex_map[w]
            out.append(tuple(cyc))
        return out

    @classmethod
    def identity(cls, vertices: Iterable) -> "SimplicialAutomorphism":
        return cls({v: v for v in vertices})

    @classmethod
    def from_cycles(cls, vertices: Iterable, *cycles: Iterable) -> "SimplicialAutomorphism":
        mapping = {v: v for v in vertices}
        for cyc in cycles:
            cyc = list(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                mapping[a] = b
        return cls(mapping)


def check_automorphism(t: SurfaceTriangulation, f: SimplicialAutomorphism) -> None:
    if not t.simplicial:
        raise ValueError("automorphisms are vertex maps and need a simplicial surface")
    require_valid(t)
    domain = set(f.vertex_map)
    missing = t.vertices - domain
    if missing:
        raise NotAnAutomorphism(f"map undefined on vertices {sorted_labels(missing)}")
    if domain != t.vertices:
        extra = domain - t.vertices
        raise NotAnAutomorphism(f"map defined on non-vertices {sorted_labels(extra)}")
    if set(f.vertex_map.values()) != t.vertices:
        raise NotAnAutomorphism("map is not a bijection on vertices")
    faces = {frozenset(tri) for tri in t.triangles}
    for tri in t.triangles:
        if f.image(tri) not in faces:
            raise NotAnAutomorphism(
                f"image of triangle {sorted_labels(tri)} is not a triangle", triangle=tri
            )


def automorphism_order(t: SurfaceTriangulation, f: SimplicialAutomorphism) -> int:
    check_automorphism(t, f)
    return math.lcm(*(len(c) for c in f.cycles()))


@dataclass(frozen=True)
class FixedPointReport:
    free: bool
    witness: frozenset | None = None

    def __bool__(self) -> bool:
        return self.free


def _sorted_simplices(simplices) -> list[frozenset]:
    return sorted(simplices, key=lambda s: [label_key(v) for v in sorted_labels(s)])


def is_fixed_point_free(t: SurfaceTriangulation, f: SimplicialAutomorphism) -> FixedPointReport:
    """No vertex, edge or triangle is carried onto itself (setwise) by ``f``."""
    check_automorphism(t, f)
    vertices = [frozenset((v,)) for v in t.vertices]
    edges = list(t.edges.values())
    faces = [frozenset(tri) for tri in t.triangles]
    for group in (vertices, edges, faces):
        for s in _sorted_simplices(group):
            if f.image(s) == s:
                return FixedPointReport(False, s)
    return FixedPointReport(True)


def subdivide_automorphism(t: SurfaceTriangulation, f: SimplicialAutomorphism) -> SimplicialAutomorphism:
    """The automorphism induced by ``f`` on ``barycentric_subdivide_surface(t)``."""
    check_automorphism(t, f)
    simplices = [frozenset((v,)) for v in t.vertices]
    simplices += list(t.edges.values())
    simplices += [frozenset(tri) for tri in t.triangles]
    return SimplicialAutomorphism({s: f.image(s) for s in simplices})


def _extend_flag(t: SurfaceTriangulation, faces: set, image: tuple) -> dict | None:
    """Grow ``triangles[0] -> image`` across edges; None if it is not an automorphism."""
    mapping = dict(zip(t.triangles[0], image))
    stack, done = [0], {0}
    while stack:
        i = stack.pop()
        tri = t.triangles[i]
        if frozenset(mapping[v] for v in tri) not in faces:
            return None
        for k in range(3):
            key = t.side_keys(i)[k]
            target = frozenset(mapping[v] for v in key)
            uses = t.edge_uses[key]
            target_uses = t.edge_uses.get(target, ())
            if len(uses) != len(target_uses):
                return None
            for j, m in uses:
                if j == i:
                    continue
                # the image of the far corner is the far corner of the other triangle on the image edge
                img_i = frozenset(mapping[v] for v in tri)
                (far,) = [t.triangles[j2][m2] for j2, m2 in target_uses if frozenset(t.triangles[j2]) != img_i]
                w = t.triangles[j][m]
                if mapping.setdefault(w, far) != far:
                    return None
                if j not in done:
                    done.add(j)
                    stack.append(j)
    if len(mapping) != len(t.vertices) or len(set(mapping.values())) != len(mapping):
        return None
    return mapping


def enumerate_automorphisms(t: SurfaceTriangulation) -> list[SimplicialAutomorphism]:
    """All simplicial automorphisms of a simplicial surface.

    On a connected surface an automorphism is fixed by the image of one
    ordered triangle, so the candidates are the 6 orderings of every
    triangle, each extended across edges.  Disconnected surfaces go through
    networkx's VF2 matcher on the vertex/triangle incidence graph.
    """
    require_valid(t)
    if not t.simplicial:
        raise ValueError("automorphisms need a simplicial surface")
    if len(_components(t)) == 1:
        faces = {frozenset(tri) for tri in t.triangles}
        out = []
        for tri in t.triangles:
            for image in permutations(tri):
                mapping = _extend_flag(t, faces, image)
                if mapping is not None:
                    out.append(SimplicialAutomorphism(mapping))
        return out
    g = nx.Graph()
    for v in t.vertices:
        g.add_node(("v", v), kind="v")
    for i, tri in enumerate(t.triangles):
        g.add_node(("t", i), kind="t")
        for v in tri:
            g.add_edge(("t", i), ("v", v))
    matcher = isomorphism.GraphMatcher(g, g, node_match=lambda a, b: a["kind"] == b["kind"])
    out = []
    for iso in matcher.isomorphisms_iter():
        out.append(SimplicialAutomorphism({v: iso[("v", v)][1] for v in t.vertices}))
    return out


def relabel_surface(t: SurfaceTriangulation, relabel: Mapping) -> SurfaceTriangulation:
    triangles = [tuple(relabel[v] for v in tri) for tri in t.triangles]
    return SurfaceTriangulation(triangles, t.sides, t.allow_disconnected)
