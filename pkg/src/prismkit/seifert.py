"""
Exact Seifert-side bookkeeping and discrete horizontal pieces.

Points of the fibre circle are encoded as residues modulo ``2n``: residue
``r`` stands for ``exp(i r pi / n)``.  The ``n`` evenly spaced points
``exp(i (2m + 1) pi / n)`` are then the odd residues, reflection
``z -> conj(z)`` is ``r -> -r`` and the antipodal map ``z -> -z`` is
``r -> r + n``.  Everything below is integer or ``Fraction`` arithmetic.
"""

from __future__ import annotations

import math
from functools import cached_property
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

EPSILONS = frozenset({"o", "o1", "o2", "n", "n1", "n2", "n3", "n4"})
ORIENTABLE_BASE = frozenset({"o", "o1", "o2"})


@dataclass(frozen=True)
class SeifertParams:
    """Normalized parameter set ``{b; (eps, g, (t, k)); (h | k); ((p, q), ...)}``."""

    b: int = 0
    epsilon: str = "o1"
    g: int = 0
    t: int = 0
    k: int = 0
    h_list: tuple = ()
    k_list: tuple = ()
    pairs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "h_list", tuple(self.h_list))
        object.__setattr__(self, "k_list", tuple(self.k_list))
        object.__setattr__(self, "pairs", tuple(tuple(pq) for pq in self.pairs))
        if self.epsilon not in EPSILONS:
            raise ValueError(f"epsilon must be one of {sorted(EPSILONS)}, got {self.epsilon!r}")
        if self.g < 0:
            raise ValueError(f"genus must be non-negative, got {self.g}")
        if self.t < 0 or not 0 <= self.k <= self.t:
            raise ValueError(f"need 0 <= k <= t, got t={self.t}, k={self.k}")
        for name, values in (("h", self.h_list), ("kk", self.k_list)):
            if any(x < 0 for x in values):
                raise ValueError(f"{name} entries must be non-negative, got {values}")
        for p, q in self.pairs:
            if p < 2 or not 0 < q < p or math.gcd(p, q) != 1:
                raise ValueError(f"pair ({p},{q}) must satisfy p >= 2, 0 < q < p, gcd(p, q) = 1")

    @property
    def orientable_base(self) -> bool:
        return self.epsilon in ORIENTABLE_BASE

    @property
    def m_plus(self) -> int:
        return len(self.h_list)

    @property
    def m_minus(self) -> int:
        return len(self.k_list)

    @property
    def closed(self) -> bool:
        return self.m_plus + self.m_minus == 0

    @property
    def se_nonempty(self) -> bool:
        # caps S^1 x N / S^1 x~ N add tori and Klein bottles, each I x N an annulus
        return self.t > 0 or any(h > 0 for h in self.h_list) or any(x > 0 for x in self.k_list)


def euler_number(s: SeifertParams) -> Fraction:
    if not s.closed:
        raise ValueError("Euler number defined for closed fibrations only")
    return sum((Fraction(q, p) for p, q in s.pairs), Fraction(s.b))


@dataclass(frozen=True)
class HorizontalDecision:
    exists: bool
    reason: str
    euler: Fraction | None = None

    def __bool__(self) -> bool:
        return self.exists


def decide_horizontal(s: SeifertParams) -> HorizontalDecision:
    """Does the fibred space with parameters ``s`` contain a horizontal surface?"""
    if not s.closed:
        return HorizontalDecision(True, "boundary")
    if s.se_nonempty:
        return HorizontalDecision(True, "SE nonempty")
    e = euler_number(s)
    return HorizontalDecision(e == 0, "e(M)=0" if e == 0 else "e(M)≠0", e)


def horizontal_multiplicity(s: SeifertParams) -> int:
    """``2 * p_1 * ... * p_r`` (the extra pair ``(1, b)`` contributes 1)."""
    return 2 * math.prod(p for p, _ in s.pairs)


@dataclass(frozen=True)
class ResidueSet:
    modulus: int
    members: frozenset

    def __post_init__(self):
        if self.modulus < 2 or self.modulus % 2:
            raise ValueError(f"modulus must be 2n for a positive n, got {self.modulus}")
        bad = [r for r in self.members if not 0 <= r < self.modulus]
        if bad:
            raise ValueError(f"residues {sorted(bad)} out of range mod {self.modulus}")
        object.__setattr__(self, "members", frozenset(self.members))

    @property
    def n(self) -> int:
        return self.modulus // 2

    def reflect(self) -> "ResidueSet":
        return ResidueSet(self.modulus, {(-r) % self.modulus for r in self.members})

    def antipode(self) -> "ResidueSet":
        return ResidueSet(self.modulus, {(r + self.n) % self.modulus for r in self.members})

    def rotate(self, shift: int) -> "ResidueSet":
        return ResidueSet(self.modulus, {(r + shift) % self.modulus for r in self.members})


def evenly_spaced(n: int) -> ResidueSet:
    """The ``n`` points ``exp(i (2m + 1) pi / n)`` as odd residues mod ``2n``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return ResidueSet(2 * n, frozenset(range(1, 2 * n, 2)))


def pn_closure_check(n: int) -> dict:
    pn = evenly_spaced(n)
    return {"rho_closed": pn.reflect() == pn, "omega_closed": pn.antipode() == pn}


@dataclass(frozen=True)
class CurvePoint:
    segment: str  # "alpha" | "beta"
    step: int
    residue: int


@dataclass(frozen=True)
class CurveSystem:
    """Curves of slope ``q/p`` on a discretized torus.

    The base circle is cut into the arc alpha, sampled at steps ``0..2kq``
    (step 0 sits on the longitude, step ``2kq`` on the point ``z0``), and the
    arc beta, sampled once.  Over beta every strand keeps its residue; over
    alpha it gains one residue per step.
    """

    n: int
    p: int
    q: int
    k: int
    components: tuple  # each a tuple of CurvePoint, in order along the curve
    meets_longitude: int
    meets_meridian: int

    @property
    def slope(self) -> Fraction:
        return Fraction(self.meets_meridian, self.meets_longitude)

    def points_at(self, segment: str, step: int) -> list[tuple[int, int]]:
        """(component index, residue) pairs over one base position."""
        return [
            (ci, pt.residue)
            for ci, comp in enumerate(self.components)
            for pt in comp
            if (pt.segment, pt.step) == (segment, step)
        ]

    def base_positions(self) -> list[tuple[str, int]]:
        return [("alpha", j) for j in range(2 * self.k * self.q + 1)] + [("beta", 0)]


def build_slope_curves(p: int, q: int, k: int) -> CurveSystem:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if not 0 < q < p:
        raise ValueError(f"need 0 < q < p, got p={p}, q={q}")
    if math.gcd(p, q) != 1:
        raise ValueError(f"p and q must be coprime, got gcd({p},{q}) = {math.gcd(p, q)}")
    n = k * p
    if n % 2:
        raise ValueError(f"n = kp must be even, got {n}")
    mod = 2 * n
    steps = 2 * k * q
    remaining = set(range(1, mod, 2))
    components = []
    while remaining:
        start = min(remaining)
        r = start
        comp = []
        while True:
            remaining.discard(r)
            comp.extend(CurvePoint("alpha", j, (r + j) % mod) for j in range(steps + 1))
            r = (r + steps) % mod
            comp.append(CurvePoint("beta", 0, r))
            if r == start:
                break
        components.append(tuple(comp))
    # the longitude is the fibre at alpha step 0, the meridian the residue-0 section
    on_longitude = sum(1 for comp in components for pt in comp if pt.segment == "alpha" and pt.step == 0)
    on_meridian = sum(1 for comp in components for pt in comp if pt.residue == 0)
    return CurveSystem(n, p, q, k, tuple(components), on_longitude, on_meridian)


def _check_residues(path: Sequence[int], n: int) -> None:
    if n < 1 or n % 2:
        raise ValueError(f"n must be a positive even number, got {n}")
    bad = [r for r in path if not 0 <= r < 2 * n]
    if bad:
        raise ValueError(f"residues {bad} out of range mod {2 * n}")


@dataclass(frozen=True)
class DiscreteBandSurface:
    """A horizontal surface in a discretized fibred band ``B x N``.

    Grid points are ``(s, t, residue)``: ``s`` is the base position, ``t`` is
    0 on the boundary of the Mobius band ``N`` and 1 on its core, where the
    residues ``r`` and ``r + n`` are the same point.  Core points are stored
    with the smaller of the two residues.
    """

    kind: str  # "IxN" | "S1xN" | "S1x~N"
    n: int
    cells: tuple  # quads of grid points
    boundary_trace: tuple  # per base position, the set of residues at t = 0
    classification: str | None = None
    boundary_components: int | None = None

    @property
    def modulus(self) -> int:
        return 2 * self.n

    @cached_property
    def points(self) -> frozenset:
        return frozenset(pt for cell in self.cells for pt in cell)

    def meets_fiber(self, s: int, t: int) -> frozenset:
        return frozenset(r for (s2, t2, r) in self.points if (s2, t2) == (s, t))

    def is_disjoint(self, other: "DiscreteBandSurface") -> bool:
        return not (self.points & other.points)


def _core(r: int, n: int) -> int:
    return min(r % (2 * n), (r + n) % (2 * n))


def _rectangle_cells(gamma: Sequence[int], n: int, offset: int = 0) -> list[tuple]:
    mod = 2 * n
    cells = []
    for s in range(len(gamma) - 1):
        a, b = gamma[s], gamma[s + 1]
        for shift in (0, n):
            ra, rb = (a + shift) % mod, (b + shift) % mod
            cells.append(
                (
                    (offset + s, 0, ra),
                    (offset + s + 1, 0, rb),
                    (offset + s + 1, 1, _core(rb, n)),
                    (offset + s, 1, _core(ra, n)),
                )
            )
    return cells


def extension_rectangle(gamma: Sequence[int], n: int) -> DiscreteBandSurface:
    """Horizontal rectangle in ``I x N`` whose trace on the boundary annulus is
    the arc ``gamma`` together with its antipodal copy."""
    gamma = list(gamma)
    _check_residues(gamma, n)
    if not gamma:
        raise ValueError("gamma must have at least one point")
    mod = 2 * n
    if len(gamma) == 1:
        cells = [((0, 0, r), (0, 1, _core(r, n))) for r in (gamma[0], (gamma[0] + n) % mod)]
    else:
        cells = _rectangle_cells(gamma, n)
    trace = tuple(frozenset({r, (r + n) % mod}) for r in gamma)
    return DiscreteBandSurface("IxN", n, tuple(cells), trace, "disk", 1)


def extension_surface(lam: Sequence[int], n: int, twisted: bool = False, laps: int = 1) -> DiscreteBandSurface:
    """Horizontal annulus or Mobius strip in ``S^1 x N`` (or ``S^1 x~ N`` when twisted).

    ``lam`` lists the residues of a closed curve on the boundary, sampled at
    ``len(lam) - 1`` steps that wind ``laps`` times around the base circle.
    Entry ``j * B`` (``B`` the number of base positions) starts lap ``j`` in the
    coordinates of the cut-open band; the last entry ends the last lap, so
    it must equal ``lam[0]`` (untwisted) or ``-lam[0]`` (twisted) before the
    end gluing is applied.
    """
    lam = list(lam)
    _check_residues(lam, n)
    mod = 2 * n
    steps = len(lam) - 1
    if steps < 1 or laps < 1 or steps % laps:
        raise ValueError(f"path of {steps} steps cannot wind {laps} times")
    base = steps // laps

    def glue(r):  # end of the band -> start of the band
        return (-r) % mod if twisted else r % mod

    if glue(lam[-1]) != lam[0]:
        want = (-lam[0]) % mod if twisted else lam[0]
        raise ValueError(f"curve does not close: last residue {lam[-1]}, expected {want}")

    # arc j runs over base positions 0..base; its end is stored in start coordinates
    arcs = []
    for j in range(laps):
        arc = lam[j * base:(j + 1) * base]
        nxt = lam[(j + 1) * base] if j + 1 < laps else lam[0]
        arcs.append(arc + [nxt])
    points = {}
    for j, arc in enumerate(arcs):
        for s in range(base):
            if (s, arc[s]) in points:
                raise ValueError(f"curve is not simple: residue {arc[s]} repeats at base position {s}")
            points[(s, arc[s])] = j
    curve = set(points)
    mirror = {(s, (r + n) % mod) for s, r in curve}
    if curve & mirror and curve != mirror:
        raise ValueError("curve meets its antipodal copy without being equal to it")

    # one rectangle per arc, except that an arc and its antipodal arc share one
    rect_of = {}
    rects = []
    for j, arc in enumerate(arcs):
        if j in rect_of:
            continue
        rect_of[j] = len(rects)
        partner = points.get((0, (arc[0] + n) % mod))
        if partner is not None and partner != j:
            rect_of[partner] = len(rects)
        rects.append(arc)

    cells = []
    for arc in rects:
        cells.extend(_rectangle_cells(arc, n))
    kind = "S1x~N" if twisted else "S1xN"
    trace = tuple(frozenset({r for (s2, r) in curve | mirror if s2 == s}) for s in range(base))
    classification, boundary = _band_topology(rects, n)
    # identify s = base with s = 0
    cells = [tuple(_wrap(pt, base) for pt in cell) for cell in cells]
    return DiscreteBandSurface(kind, n, tuple(cells), trace, classification, boundary)


def _wrap(pt, base):
    # arcs already end in start coordinates, so only the base position moves
    s, t, r = pt
    return (0, t, r) if s == base else pt


def _band_topology(rects: list, n: int) -> tuple[str, int]:
    """Assemble the rectangles along the end gluing and read off the topology.

    Each rectangle has two long sides, the sheet through ``gamma`` (+1) and
    the antipodal sheet (-1).  The end of a side, already in start
    coordinates, is the start of some rectangle's + or - side; the surface is a Mobius strip when
    going once around the chain of rectangles swaps the two sides.
    """
    mod = 2 * n
    start = {}
    for i, arc in enumerate(rects):
        start[arc[0]] = (i, 1)
        start[(arc[0] + n) % mod] = (i, -1)

    def follow(i, side):
        end = rects[i][-1] if side == 1 else (rects[i][-1] + n) % mod
        return start[end]

    # boundary circles: cycles of the side permutation
    seen = set()
    circles = 0
    for node in sorted(start.values()):
        if node in seen:
            continue
        circles += 1
        x = node
        while x not in seen:
            seen.add(x)
            x = follow(*x)
    # orientation: parity of side swaps around the chain of rectangles
    flips = 0
    i = 0
    visited = 0
    while True:
        j, side2 = follow(i, 1)
        flips += side2 != 1
        visited += 1
        i = j
        if i == 0:
            break
    if visited != len(rects):
        raise ValueError("band rectangles do not form a single chain")
    return ("mobius" if flips % 2 else "annulus"), circles
