"""
Prism complexes.

A prism is a triangle times an interval.  Its corners are pairs
``(c, level)`` with triangle corner ``c`` in 0..2 and level 0 (bottom) or 1
(top).  Faces are

* ``("h", 0)`` and ``("h", 1)``: the bottom and top triangles, with corner
  ``k`` equal to ``(k, level)``;
* ``("v", q)``: the vertical quadrilateral over the triangle edge opposite
  corner ``q``.  With ``a, b = (q + 1) % 3, (q + 2) % 3`` its corners, in
  cyclic order, are ``(a, 0), (b, 0), (b, 1), (a, 1)``, so quad edges 0-1 and
  2-3 are horizontal and 1-2, 3-0 are vertical.

A gluing ``(i, F) -> (j, G, p)`` sends corner ``k`` of face ``F`` of prism
``i`` to corner ``p[k]`` of face ``G`` of prism ``j``; both directions are
stored.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Mapping

from networkx.utils import UnionFind

from .manifold3 import invert_perm, is_perm
from .report import InvalidInput, ValidationReport

BOTTOM = ("h", 0)
TOP = ("h", 1)
FACES = (BOTTOM, TOP, ("v", 0), ("v", 1), ("v", 2))
HORIZONTAL = "horizontal"
VERTICAL = "vertical"


def face_corners(face) -> tuple:
    kind, x = face
    if kind == "h":
        return tuple((k, x) for k in range(3))
    a, b = (x + 1) % 3, (x + 2) % 3
    return ((a, 0), (b, 0), (b, 1), (a, 1))


def face_edges(face) -> list[frozenset]:
    cs = face_corners(face)
    return [frozenset((cs[k], cs[(k + 1) % len(cs)])) for k in range(len(cs))]


def edge_kind(edge: frozenset) -> str:
    (c1, l1), (c2, l2) = sorted(edge)
    return HORIZONTAL if l1 == l2 else VERTICAL


PRISM_EDGES = tuple(
    sorted({e for f in FACES for e in face_edges(f)}, key=lambda e: (edge_kind(e) != HORIZONTAL, sorted(e)))
)
EDGE_FACES = {e: tuple(f for f in FACES if e in face_edges(f)) for e in PRISM_EDGES}


def horizontal_edge(level: int, q: int) -> frozenset:
    """The edge at ``level`` opposite triangle corner ``q``."""
    return frozenset((((q + 1) % 3, level), ((q + 2) % 3, level)))


def vertical_edge(c: int) -> frozenset:
    return frozenset(((c, 0), (c, 1)))


def _dihedral4() -> set[tuple]:
    out = set()
    for r in range(4):
        out.add(tuple((k + r) % 4 for k in range(4)))
        out.add(tuple((r - k) % 4 for k in range(4)))
    return out


QUAD_SYMMETRIES = frozenset(_dihedral4())


@dataclass(frozen=True)
class PrismComplex:
    size: int
    gluings: Mapping = field(default_factory=dict, hash=False)
    labels: tuple | None = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        table = {}
        for (i, f), (j, g, p) in dict(self.gluings).items():
            table[(i, tuple(f))] = (j, tuple(g), tuple(p))
        object.__setattr__(self, "gluings", table)

    def corner_map(self, prism: int, face) -> tuple[int, dict]:
        """Target prism and the induced map on prism corners across ``face``."""
        j, g, p = self.gluings[(prism, face)]
        src, dst = face_corners(face), face_corners(g)
        return j, {src[k]: dst[p[k]] for k in range(len(src))}

    def pairs(self) -> list[tuple]:
        return [
            (i, f, j, g, p)
            for (i, f), (j, g, p) in sorted(self.gluings.items())
            if (i, f) <= (j, g)
        ]


class ComplexBuilder:
    """Mutable accumulator of prism gluings."""

    def __init__(self, size: int):
        self.size = size
        self.table: dict = {}
        self.labels: list = [None] * size

    def glue(self, i: int, f, j: int, g, p) -> None:
        p = tuple(p)
        for slot in ((i, f), (j, g)):
            if slot in self.table:
                raise ValueError(f"face slot {slot} glued twice")
        self.table[(i, f)] = (j, g, p)
        self.table[(j, g)] = (i, f, invert_perm(p))

    def build(self) -> PrismComplex:
        labels = tuple(self.labels) if any(x is not None for x in self.labels) else None
        return PrismComplex(self.size, self.table, labels)


@dataclass(frozen=True)
class EdgeClass:
    index: int
    slots: tuple  # sorted (prism, edge) pairs
    kind: str
    incidence: int
    on_boundary: bool

    @property
    def representative(self):
        return self.slots[0]


def slot_key(slot) -> tuple:
    prism, edge = slot
    return (prism, sorted(edge))


def _check_gluings(c: PrismComplex, report: ValidationReport) -> None:
    for (i, f), (j, g, p) in sorted(c.gluings.items()):
        if not (0 <= i < c.size and 0 <= j < c.size) or f not in FACES or g not in FACES:
            report.add("bad index", ((i, f), (j, g)))
            continue
        if f[0] != g[0]:
            report.add("shape mismatch", (i, f), f"{f} glued to {g}")
            continue
        n = 3 if f[0] == "h" else 4
        if not is_perm(p, n):
            report.add("corner map not a bijection", (i, f), f"got {p}")
            continue
        if (i, f) == (j, g):
            report.add("self-glued face", (i, f))
            continue
        if n == 4:
            if p not in QUAD_SYMMETRIES:
                report.add("not a combinatorial isomorphism", (i, f), f"quad map {p}")
                continue
            # quad edges 0-1 and 2-3 are horizontal and must stay horizontal
            if {p[0], p[1]} not in ({0, 1}, {2, 3}):
                report.add("vertical edge sent to horizontal", (i, f), f"quad map {p}")
                continue
        back = c.gluings.get((j, g))
        if back is None or back[:2] != (i, f) or tuple(back[2]) != invert_perm(p):
            report.add("not involutive", (i, f), f"({i},{f})->({j},{g}) but ({j},{g})->{back}")


def _classes(c: PrismComplex) -> tuple[list[EdgeClass], UnionFind]:
    edges = UnionFind((i, e) for i in range(c.size) for e in PRISM_EDGES)
    corners = UnionFind((i, (k, lv)) for i in range(c.size) for k in range(3) for lv in range(2))
    for (i, f) in c.gluings:
        j, cmap = c.corner_map(i, f)
        for x, y in cmap.items():
            corners.union((i, x), (j, y))
        for e in face_edges(f):
            edges.union((i, e), (j, frozenset(cmap[x] for x in e)))
    result = []
    groups = sorted((sorted(s, key=slot_key) for s in edges.to_sets()), key=lambda s: slot_key(s[0]))
    for n, slots in enumerate(groups):
        kinds = {edge_kind(e) for _, e in slots}
        boundary = any((i, f) not in c.gluings for i, e in slots for f in EDGE_FACES[e])
        kind = kinds.pop() if len(kinds) == 1 else "mixed"
        result.append(EdgeClass(n, tuple(slots), kind, len(slots), boundary))
    return result, corners


def validate_prism_complex(c: PrismComplex) -> ValidationReport:
    report = ValidationReport()
    if c.size < 1:
        report.add("empty complex", None)
        return report
    _check_gluings(c, report)
    if not report.ok:
        return report
    classes, _ = _classes(c)
    for ec in classes:
        if ec.kind == "mixed":
            report.add("mixed edge class", ec.representative, "horizontal and vertical edges identified")
    report.details["edge_classes"] = classes
    return report


def require_valid_complex(c: PrismComplex) -> ValidationReport:
    report = validate_prism_complex(c)
    if not report.ok:
        raise InvalidInput("prism complex", report)
    return report


def edge_classes(c: PrismComplex) -> list[EdgeClass]:
    return require_valid_complex(c).details["edge_classes"]


def vertex_classes(c: PrismComplex) -> dict:
    """Map (prism, corner) -> vertex class index, indices in order of first corner."""
    require_valid_complex(c)
    _, corners = _classes(c)
    groups = sorted((sorted(s) for s in corners.to_sets()), key=lambda s: s[0])
    return {slot: n for n, group in enumerate(groups) for slot in group}


@dataclass(frozen=True)
class Failure:
    condition: str
    where: Any
    incidence: int | None = None

    def __str__(self) -> str:
        text = f"{self.condition} at {self.where}"
        return text if self.incidence is None else f"{text} (incidence {self.incidence})"


@dataclass(frozen=True)
class SpecialCertificate:
    special: bool
    failures: tuple = ()

    @property
    def witness(self) -> Failure | None:
        return self.failures[0] if self.failures else None

    def __bool__(self) -> bool:
        return self.special


def is_special(c: PrismComplex) -> SpecialCertificate:
    """Interior horizontal edges in 4 prisms, boundary ones in 2, no free horizontal face.

    Incidence counts prism edge slots, so a prism meeting an edge twice
    contributes twice.  Failures are listed by condition, then by
    incidence, then by representative slot; the first one is the witness.
    """
    classes = edge_classes(c)
    interior, boundary = [], []
    for ec in classes:
        if ec.kind != HORIZONTAL:
            continue
        if not ec.on_boundary and ec.incidence != 4:
            interior.append(Failure("interior horizontal edge", ec.representative, ec.incidence))
        elif ec.on_boundary and ec.incidence != 2:
            boundary.append(Failure("boundary horizontal edge", ec.representative, ec.incidence))
    order = lambda f: (f.incidence, slot_key(f.where))
    free = [
        Failure("unglued horizontal face", (i, f))
        for i in range(c.size)
        for f in (BOTTOM, TOP)
        if (i, f) not in c.gluings
    ]
    failures = tuple(sorted(interior, key=order) + sorted(boundary, key=order) + free)
    return SpecialCertificate(not failures, failures)


@dataclass(frozen=True)
class ComplexStats:
    prisms: int
    horizontal_faces_glued: int
    horizontal_faces_unglued: int
    vertical_faces_glued: int
    vertical_faces_unglued: int
    edge_class_histogram: dict  # (kind, "interior" | "boundary", incidence) -> count
    boundary_present: bool


def complex_stats(c: PrismComplex) -> ComplexStats:
    classes = edge_classes(c)
    hist = Counter((ec.kind, "boundary" if ec.on_boundary else "interior", ec.incidence) for ec in classes)
    slots = [(i, f) for i in range(c.size) for f in FACES]
    hg = sum(1 for i, f in slots if f[0] == "h" and (i, f) in c.gluings)
    vg = sum(1 for i, f in slots if f[0] == "v" and (i, f) in c.gluings)
    return ComplexStats(
        prisms=c.size,
        horizontal_faces_glued=hg,
        horizontal_faces_unglued=2 * c.size - hg,
        vertical_faces_glued=vg,
        vertical_faces_unglued=3 * c.size - vg,
        edge_class_histogram=dict(sorted(hist.items())),
        boundary_present=len(c.gluings) < 5 * c.size,
    )
