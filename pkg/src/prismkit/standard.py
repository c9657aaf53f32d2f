"""
Small standard surfaces, maps and triangulations used by tests and examples.

Vertex labels are plain strings so everything here round-trips through the
text formats.
"""

from __future__ import annotations

from itertools import product

from .manifold3 import Triangulation3
from .surface import SimplicialAutomorphism, SurfaceTriangulation


def tetrahedron_boundary() -> SurfaceTriangulation:
    return SurfaceTriangulation([("a", "b", "c"), ("a", "b", "d"), ("a", "c", "d"), ("b", "c", "d")])


def octahedron_boundary() -> SurfaceTriangulation:
    triangles = [(f"{x}x", f"{y}y", f"{z}z") for x, y, z in product("+-", repeat=3)]
    return SurfaceTriangulation(triangles)


def octahedron_antipodal() -> SimplicialAutomorphism:
    flip = {"+": "-", "-": "+"}
    return SimplicialAutomorphism({f"{s}{ax}": f"{flip[s]}{ax}" for s in "+-" for ax in "xyz"})


def single_triangle() -> SurfaceTriangulation:
    return SurfaceTriangulation([("a", "b", "c")])


def two_triangles() -> SurfaceTriangulation:
    return SurfaceTriangulation([("a", "b", "c"), ("a", "b", "d")])


def _ring(m: int, prefix: str = "r") -> list[str]:
    return [f"{prefix}{i}" for i in range(m)]


def bipyramid(m: int) -> SurfaceTriangulation:
    """Sphere: a ring of ``m >= 3`` vertices coned to the poles ``n`` and ``s``."""
    if m < 3:
        raise ValueError(f"bipyramid needs m >= 3, got {m}")
    ring = _ring(m)
    return SurfaceTriangulation(
        [(pole, ring[i], ring[(i + 1) % m]) for pole in ("n", "s") for i in range(m)]
    )


def cone_disk(m: int) -> SurfaceTriangulation:
    if m < 3:
        raise ValueError(f"cone_disk needs m >= 3, got {m}")
    ring = _ring(m)
    return SurfaceTriangulation([("c", ring[i], ring[(i + 1) % m]) for i in range(m)])


def ring_rotation(t: SurfaceTriangulation, m: int, shift: int = 1, flip: bool = False) -> SimplicialAutomorphism:
    """Rotate (and optionally reflect) every ring ``r*``, ``a*``, ``b*`` of size ``m``.

    With ``flip`` on a bipyramid the poles are swapped too.
    """
    mapping = {}
    for v in t.vertices:
        if v[0] in "rab" and v[1:].isdigit():
            i = int(v[1:])
            j = (-i + shift) % m if flip and v[0] == "r" else (i + shift) % m
            mapping[v] = f"{v[0]}{j}"
        else:
            mapping[v] = v
    if flip and {"n", "s"} <= set(mapping):
        mapping["n"], mapping["s"] = "s", "n"
    return SimplicialAutomorphism(mapping)


def annulus(m: int) -> SurfaceTriangulation:
    if m < 3:
        raise ValueError(f"annulus needs m >= 3, got {m}")
    a, b = _ring(m, "a"), _ring(m, "b")
    triangles = []
    for i in range(m):
        j = (i + 1) % m
        triangles += [(a[i], a[j], b[i]), (a[j], b[j], b[i])]
    return SurfaceTriangulation(triangles)


def torus_grid(rows: int, cols: int) -> SurfaceTriangulation:
    """A ``rows x cols`` grid of squares, each cut by a diagonal, with opposite sides identified."""
    if rows < 3 or cols < 3:
        raise ValueError(f"torus_grid needs at least 3 rows and 3 columns, got {rows}x{cols}")

    def v(i, j):
        return f"{i % rows}.{j % cols}"

    triangles = []
    for i in range(rows):
        for j in range(cols):
            triangles += [(v(i, j), v(i + 1, j), v(i + 1, j + 1)), (v(i, j), v(i, j + 1), v(i + 1, j + 1))]
    return SurfaceTriangulation(triangles)


def torus_translation(rows: int, cols: int, di: int, dj: int) -> SimplicialAutomorphism:
    return SimplicialAutomorphism(
        {f"{i}.{j}": f"{(i + di) % rows}.{(j + dj) % cols}" for i in range(rows) for j in range(cols)}
    )


def mobius_band(m: int) -> SurfaceTriangulation:
    """Triangles ``{i, i+1, i+2}`` mod an odd ``m >= 5``."""
    if m < 5 or m % 2 == 0:
        raise ValueError(f"mobius_band needs an odd m >= 5, got {m}")
    return SurfaceTriangulation([(str(i), str((i + 1) % m), str((i + 2) % m)) for i in range(m)])


def mobius_shift(m: int, shift: int = 1, flip: bool = False) -> SimplicialAutomorphism:
    sign = -1 if flip else 1
    return SimplicialAutomorphism({str(i): str((sign * i + shift) % m) for i in range(m)})


def rp2_six() -> SurfaceTriangulation:
    """The six-vertex projective plane."""
    triangles = ["123", "134", "145", "156", "162", "235", "346", "452", "563", "624"]
    return SurfaceTriangulation([tuple(t) for t in triangles])


def one_tet() -> Triangulation3:
    return Triangulation3(1, {})


def two_tet_sphere() -> Triangulation3:
    """Two tetrahedra glued along all four faces by the identity: the 3-sphere."""
    return Triangulation3.from_pairs(2, [(0, f, 1, f, (0, 1, 2)) for f in range(4)])


def three_tet_ball() -> Triangulation3:
    """Three tetrahedra around a common edge, face 2 of each glued to face 3 of the next."""
    return Triangulation3.from_pairs(3, [(i, 2, (i + 1) % 3, 3, (0, 1, 2)) for i in range(3)])
