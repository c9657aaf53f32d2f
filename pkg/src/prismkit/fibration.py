"""
The circle fibration carried by a special prism complex.

Each prism is foliated by its vertical intervals.  Crossing a horizontal
face carries a vertical edge of one prism to a vertical edge of the prism
on the other side, so walking "through" prisms traces the circle fibres.
The same walk at the level of whole prisms gives the prism circuits, whose
return maps decide between fibred solid tori and solid Klein bottles.
"""

from __future__ import annotations

from dataclasses import dataclass

from networkx.utils import UnionFind

from .prism import (
    HORIZONTAL,
    SpecialCertificate,
    PrismComplex,
    edge_classes,
    horizontal_edge,
    is_special,
    vertical_edge,
    vertex_classes,
)
from .surface import SurfaceStats, SurfaceTriangulation, split_components, surface_stats, validate_surface


class NotSpecial(ValueError):
    def __init__(self, certificate: SpecialCertificate):
        super().__init__(f"complex is not special: {certificate.witness}")
        self.certificate = certificate


class FibrationError(RuntimeError):
    """The walks of a special complex did not close up consistently."""


@dataclass(frozen=True)
class VertexFiber:
    edge_classes: tuple  # vertical edge class indices, in walking order
    vertex_classes: tuple  # vertex class at the end of each vertical edge

    @property
    def length(self) -> int:
        return len(self.edge_classes)


@dataclass(frozen=True)
class PrismCircuit:
    prisms: tuple
    return_map: tuple  # permutation of triangle corners after one turn


@dataclass(frozen=True)
class CircuitClass:
    circuit: tuple
    return_map: tuple
    topology: str  # "solid_torus" | "solid_klein_bottle"
    return_order: int


@dataclass(frozen=True)
class Fibration:
    complex: PrismComplex
    vertex_fibers: tuple
    prism_circuits: tuple
    horizontal_surface: SurfaceTriangulation
    n: int

    def fiber_lengths(self) -> list[int]:
        return sorted(f.length for f in self.vertex_fibers)


def _cross(c: PrismComplex, prism: int, level: int) -> tuple[int, int, dict]:
    """Leave ``prism`` through its horizontal face at ``level``.

    Returns the prism entered, the level of the face entered through and the
    map on triangle corners.
    """
    j, g, p = c.gluings[(prism, ("h", level))]
    return j, g[1], {k: p[k] for k in range(3)}


def _perm_order(p: tuple) -> int:
    order, q = 1, p
    while q != (0, 1, 2):
        q = tuple(p[x] for x in q)
        order += 1
    return order


def _is_rotation(p: tuple) -> bool:
    inversions = sum(1 for a in range(3) for b in range(a + 1, 3) if p[a] > p[b])
    return inversions % 2 == 0


def _vertex_fibers(c: PrismComplex, eclass: dict, vclass: dict) -> list[VertexFiber]:
    # a walk state is (prism, corner, level of the face we leave through)
    def step(state):
        prism, corner, level = state
        j, entered, cmap = _cross(c, prism, level)
        return j, cmap[corner], 1 - entered

    cycles = []
    seen = set()
    for prism in range(c.size):
        for corner in range(3):
            for level in (1, 0):
                start = (prism, corner, level)
                if start in seen:
                    continue
                cycle = [start]
                s = step(start)
                while s != start:
                    if len(cycle) > 6 * c.size:
                        raise FibrationError("fibre walk does not close")
                    cycle.append(s)
                    s = step(s)
                seen.update(cycle)
                cycles.append(cycle)

    uf = UnionFind()
    for cycle in cycles:
        classes = [eclass[(p, vertical_edge(k))] for p, k, _ in cycle]
        uf.union(*classes)

    fibers = {}
    for cycle in cycles:
        seq = [eclass[(p, vertical_edge(k))] for p, k, _ in cycle]
        ends = [vclass[(p, (k, lv))] for p, k, lv in cycle]
        lap = len(dict.fromkeys(seq))
        if len(seq) % lap or any(seq[i] != seq[i % lap] for i in range(len(seq))):
            raise FibrationError(f"fibre through vertical edge class {seq[0]} is not embedded")
        root = uf[seq[0]]
        fiber = VertexFiber(tuple(seq[:lap]), tuple(ends[:lap]))
        known = fibers.setdefault(root, fiber)
        if set(known.edge_classes) != set(fiber.edge_classes):
            raise FibrationError(f"walks through vertical edge class {seq[0]} disagree")
    return sorted(fibers.values(), key=lambda f: min(f.edge_classes))


def _circuits(c: PrismComplex) -> list[PrismCircuit]:
    out = []
    seen = set()
    for prism in range(c.size):
        if prism in seen:
            continue
        level = 1
        composite = {k: k for k in range(3)}
        current = prism
        members = []
        while True:
            members.append(current)
            j, entered, cmap = _cross(c, current, level)
            composite = {k: cmap[composite[k]] for k in range(3)}
            current, level = j, 1 - entered
            if (current, level) == (prism, 1):
                break
            if len(members) > c.size:
                raise FibrationError(f"prism circuit through {prism} does not close")
        if len(set(members)) != len(members):
            raise FibrationError(f"prism circuit through {prism} revisits a prism")
        seen.update(members)
        out.append(PrismCircuit(tuple(members), tuple(composite[k] for k in range(3))))
    return out


def classify_circuits(fb: Fibration) -> list[CircuitClass]:
    out = []
    for circ in fb.prism_circuits:
        topology = "solid_torus" if _is_rotation(circ.return_map) else "solid_klein_bottle"
        out.append(CircuitClass(circ.prisms, circ.return_map, topology, _perm_order(circ.return_map)))
    return out


def _horizontal_surface(c: PrismComplex, eclass: dict, vclass: dict) -> SurfaceTriangulation:
    triangles, sides = [], []
    for prism in range(c.size):
        for level in (0, 1):
            j, g, _ = c.gluings[(prism, ("h", level))]
            if (j, g[1]) < (prism, level):
                continue
            triangles.append(tuple(f"v{vclass[(prism, (k, level))]}" for k in range(3)))
            sides.append(tuple(f"e{eclass[(prism, horizontal_edge(level, k))]}" for k in range(3)))
    return SurfaceTriangulation(triangles, sides, allow_disconnected=True)


def extract_fibration(c: PrismComplex) -> Fibration:
    """Vertex fibres, prism circuits and horizontal surface of a special complex.

    ``n`` is the number of times a regular fibre meets the horizontal
    surface.  A generic vertical interval of a prism on a circuit of length
    ``L`` with return map of order ``r`` closes after ``L * r`` crossings, so
    ``n`` is that common value; every vertex fibre length must divide it.
    """
    cert = is_special(c)
    if not cert.special:
        raise NotSpecial(cert)
    classes = edge_classes(c)
    eclass = {slot: ec.index for ec in classes for slot in ec.slots}
    vclass = vertex_classes(c)

    fibers = _vertex_fibers(c, eclass, vclass)
    circuits = _circuits(c)
    counts = {len(ci.prisms) * _perm_order(ci.return_map) for ci in circuits}
    if len(counts) != 1:
        raise FibrationError(f"regular fibres meet the horizontal surface {sorted(counts)} times")
    (n,) = counts
    for fiber in fibers:
        if n % fiber.length:
            raise FibrationError(f"fibre of length {fiber.length} does not divide n={n}")

    surface = _horizontal_surface(c, eclass, vclass)
    report = validate_surface(surface)
    if not report.ok:
        raise FibrationError(f"horizontal faces do not form a surface: {report}")
    boundary_classes = {ec.index for ec in classes if ec.on_boundary and ec.kind == HORIZONTAL}
    for key in surface.boundary_edges():
        if int(key[1:]) not in boundary_classes:
            raise FibrationError(f"boundary edge {key} of the horizontal surface is interior in the complex")
    return Fibration(c, tuple(fibers), tuple(circuits), surface, n)


@dataclass(frozen=True)
class HorizontalSurface:
    surface: SurfaceTriangulation
    stats: SurfaceStats
    component_stats: tuple  # SurfaceStats per connected component


def horizontal_surface(fb: Fibration) -> HorizontalSurface:
    s = fb.horizontal_surface
    parts = tuple(surface_stats(part) for part in split_components(s))
    return HorizontalSurface(s, surface_stats(s), parts)


def max_fiber_length(fb: Fibration) -> int:
    return max(f.length for f in fb.vertex_fibers)
