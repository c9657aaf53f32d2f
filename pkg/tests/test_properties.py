import random
from fractions import Fraction
from math import gcd

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SURFACE_FAMILY, random_surface_map, surface_and_automorphisms
from prismkit import io
from prismkit.builders import mapping_torus
from prismkit.fibration import extract_fibration, horizontal_surface
from prismkit.prism import complex_stats, is_special
from prismkit.seifert import (
    SeifertParams,
    build_slope_curves,
    decide_horizontal,
    euler_number,
    extension_rectangle,
)
from prismkit.surface import (
    SimplicialAutomorphism,
    automorphism_order,
    barycentric_subdivide_surface,
    relabel_surface,
    subdivide_automorphism,
    surface_stats,
)

seeds = st.integers(min_value=0, max_value=2**32 - 1)
family_names = st.sampled_from([name for name, _ in SURFACE_FAMILY])


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_mapping_torus_fibration_law(seed):
    name, t, f = random_surface_map(random.Random(seed))
    fb = extract_fibration(mapping_torus(t, f))
    assert fb.fiber_lengths() == sorted(len(c) for c in f.cycles())
    assert fb.n == automorphism_order(t, f)
    # the horizontal surface is a copy of the fibre surface
    assert horizontal_surface(fb).stats == surface_stats(t)


@settings(max_examples=25, deadline=None)
@given(family_names, seeds)
def test_subdivision_commutes_with_mapping_torus(name, seed):
    t, autos = surface_and_automorphisms(name)
    f = random.Random(seed).choice(autos)
    sub = barycentric_subdivide_surface(t)
    g = subdivide_automorphism(t, f)
    assert automorphism_order(sub, g) == automorphism_order(t, f)
    assert extract_fibration(mapping_torus(sub, g)).n == extract_fibration(mapping_torus(t, f)).n
    assert surface_stats(sub) == surface_stats(t)


@settings(max_examples=30, deadline=None)
@given(family_names, seeds)
def test_stats_ignore_vertex_names(name, seed):
    t, autos = surface_and_automorphisms(name)
    f = random.Random(seed).choice(autos)
    renamed = {v: f"w{n}" for n, v in enumerate(sorted(t.vertices, key=str, reverse=True))}
    t2 = relabel_surface(t, renamed)
    f2 = SimplicialAutomorphism({renamed[v]: renamed[w] for v, w in f.vertex_map.items()})
    c1, c2 = mapping_torus(t, f), mapping_torus(t2, f2)
    assert complex_stats(c1) == complex_stats(c2)
    assert is_special(c1).special and is_special(c2).special


pairs = st.lists(
    st.tuples(st.integers(2, 30), st.integers(1, 29)).filter(lambda pq: pq[1] < pq[0] and gcd(*pq) == 1),
    max_size=5,
)


@given(st.integers(-20, 20), pairs)
def test_euler_number_is_exact_and_decides(b, pqs):
    s = SeifertParams(b=b, pairs=tuple(pqs))
    e = euler_number(s)
    assert e == b + sum(Fraction(q, p) for p, q in pqs)
    lcm = 1
    for p, _ in pqs:
        lcm = lcm * p // gcd(lcm, p)
    assert lcm % e.denominator == 0
    for db in (-1, 0, 1):
        shifted = SeifertParams(b=b + db, pairs=tuple(pqs))
        assert decide_horizontal(shifted).exists == (euler_number(shifted) == 0)


@given(pairs, st.integers(0, 3), st.booleans())
def test_params_round_trip(pqs, t, boundary):
    s = SeifertParams(b=-3, epsilon="n1", g=2, t=t, k=min(t, 1), h_list=(1, 0) if boundary else (), pairs=tuple(pqs))
    assert io.parse_params(io.format_params(s)) == s


@given(st.integers(2, 12), st.integers(1, 11), st.integers(1, 5))
def test_slope_curves(p, q, k):
    if not (q < p and gcd(p, q) == 1 and k * p % 2 == 0):
        return
    cs = build_slope_curves(p, q, k)
    # each component crosses the longitude p times
    for comp in cs.components:
        assert sum(1 for pt in comp if (pt.segment, pt.step) == ("alpha", 0)) == p
    assert cs.slope == Fraction(q, p)


@st.composite
def arc_pairs(draw):
    n = 2 * draw(st.integers(1, 6))
    length = draw(st.integers(1, 8))
    mod = 2 * n
    gamma = [draw(st.integers(0, mod - 1))]
    for _ in range(length - 1):
        gamma.append((gamma[-1] + draw(st.sampled_from((-1, 0, 1)))) % mod)
    other = [draw(st.integers(0, mod - 1)) for _ in range(length)]
    return n, gamma, other


@given(arc_pairs())
def test_rectangle_disjointness_law(data):
    n, gamma, other = data
    a, b = extension_rectangle(gamma, n), extension_rectangle(other, n)
    separate = all(o not in (g, (g + n) % (2 * n)) for g, o in zip(gamma, other))
    assert a.is_disjoint(b) == separate
    for s, g in enumerate(gamma):
        assert a.meets_fiber(s, 0) == {g, (g + n) % (2 * n)}
