"""
Constructors of prism complexes.

``prismify`` turns a tetrahedral triangulation into a (never special) prism
complex through its barycentric subdivision.  ``mapping_torus`` and
``involution_bundle`` build special complexes from a triangulated surface
and simplicial monodromy data.
"""

from __future__ import annotations

from typing import NamedTuple

from ._labels import sorted_labels
from .manifold3 import Chain, Triangulation3, barycentric_subdivide3, require_valid3, subdivision_chain
from .prism import BOTTOM, TOP, ComplexBuilder, PrismComplex, face_corners
from .surface import (
    SimplicialAutomorphism,
    SurfaceTriangulation,
    automorphism_order,
    check_automorphism,
    is_fixed_point_free,
    require_valid,
)


class BuildError(ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class LayerLabel(NamedTuple):
    triangle: tuple
    layer: int


# Subdivided tetrahedron [centre(T), centre(F), centre(e), v] -> prism with
#   corner 0: centre(T) below, v above
#   corner 1: x(F) below, centre(F) above
#   corner 2: x(e) below, centre(e) above
# Face opposite local vertex k of the simplex becomes these prism faces.
_SIMPLEX_FACE_TO_PRISM = {
    3: (BOTTOM, ("v", 0)),  # [centre(T), centre(F), centre(e)] is split along x(F)-x(e)
    2: (("v", 2),),         # [centre(T), centre(F), v]
    1: (("v", 1),),         # [centre(T), centre(e), v]
    0: (TOP,),              # [centre(F), centre(e), v] lies on the 2-skeleton
}


def prismify(t: Triangulation3) -> PrismComplex:
    """Prism complex structure on the manifold triangulated by ``t``.

    Prism ``n`` comes from simplex ``n`` of the barycentric subdivision and is
    labelled by its chain (tetrahedron, face, edge, vertex).  Its bottom
    triangle is ``[centre(T), x(F), x(e)]`` and its top triangle is
    ``[centre(F), centre(e), v]``.
    """
    require_valid3(t)
    beta = barycentric_subdivide3(t)
    out = ComplexBuilder(beta.size)
    for n in range(beta.size):
        out.labels[n] = subdivision_chain(n)
    for i, k, j, k2, p in beta.pairs():
        # every gluing of the subdivision matches simplex vertices role for role
        assert k == k2 and p == (0, 1, 2)
        for face in _SIMPLEX_FACE_TO_PRISM[k]:
            out.glue(i, face, j, face, tuple(range(len(face_corners(face)))))
    return out.build()


def _corner_perm(src: list, dst: list) -> tuple:
    """Bijection sending entry ``k`` of ``src`` to the position of the same label in ``dst``."""
    return tuple(dst.index(x) for x in src)


def _prism_labels(tri: tuple, face) -> list:
    return [(tri[c], level) for c, level in face_corners(face)]


def _layer(t: SurfaceTriangulation) -> tuple[ComplexBuilder, dict]:
    """One prism per triangle with vertical faces glued along interior edges."""
    out = ComplexBuilder(len(t.triangles))
    index = {}
    for i, tri in enumerate(t.triangles):
        out.labels[i] = LayerLabel(tri, 0)
        index[frozenset(tri)] = i
    for key in sorted(t.edge_uses, key=lambda e: sorted(t.edge_uses[e])):
        uses = t.edge_uses[key]
        if len(uses) != 2:
            continue
        (i, k), (j, m) = sorted(uses)
        fi, fj = ("v", k), ("v", m)
        perm = _corner_perm(_prism_labels(t.triangles[i], fi), _prism_labels(t.triangles[j], fj))
        out.glue(i, fi, j, fj, perm)
    return out, index


def _horizontal_perm(t: SurfaceTriangulation, i: int, j: int, f: SimplicialAutomorphism) -> tuple:
    src = [f(v) for v in t.triangles[i]]
    return _corner_perm(src, list(t.triangles[j]))


def mapping_torus(t: SurfaceTriangulation, f: SimplicialAutomorphism) -> PrismComplex:
    """The prism complex of ``t x I`` with ``(x, 1)`` glued to ``(f(x), 0)``.

    The top of the prism over triangle ``T`` is glued to the bottom of the
    prism over ``f(T)``, corner ``k`` going to the corner carrying ``f`` of
    vertex ``k``.
    """
    if not t.simplicial:
        raise BuildError("mapping_torus needs a simplicial surface")
    check_automorphism(t, f)
    out, index = _layer(t)
    for i, tri in enumerate(t.triangles):
        j = index[f.image(tri)]
        out.glue(i, TOP, j, BOTTOM, _horizontal_perm(t, i, j, f))
    return out.build()


def _check_involution(t: SurfaceTriangulation, psi: SimplicialAutomorphism, name: str) -> None:
    fp = is_fixed_point_free(t, psi)
    if not fp.free:
        raise BuildError(f"{name} leaves simplex {sorted_labels(fp.witness)} invariant", fp.witness)
    order = automorphism_order(t, psi)
    if order != 2:
        raise BuildError(f"{name} is not an involution (order {order})")


def involution_bundle(
    t: SurfaceTriangulation, psi0: SimplicialAutomorphism, psi1: SimplicialAutomorphism
) -> PrismComplex:
    """``t x I`` with ``(x, 0) ~ (psi0(x), 0)`` and ``(x, 1) ~ (psi1(x), 1)``."""
    if not t.simplicial:
        raise BuildError("involution_bundle needs a simplicial surface")
    require_valid(t)
    if t.boundary_edges():
        raise BuildError("involution_bundle needs a closed surface")
    _check_involution(t, psi0, "psi0")
    _check_involution(t, psi1, "psi1")
    out, index = _layer(t)
    for face, psi in ((BOTTOM, psi0), (TOP, psi1)):
        for i, tri in enumerate(t.triangles):
            j = index[psi.image(tri)]
            if i < j:
                out.glue(i, face, j, face, _horizontal_perm(t, i, j, psi))
    return out.build()


__all__ = [
    "BuildError",
    "Chain",
    "LayerLabel",
    "involution_bundle",
    "mapping_torus",
    "prismify",
]
