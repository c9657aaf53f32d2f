import pytest

from prismkit import standard
from prismkit.builders import involution_bundle, mapping_torus, prismify
from prismkit.fibration import NotSpecial, classify_circuits, extract_fibration, horizontal_surface, max_fiber_length
from prismkit.surface import SimplicialAutomorphism, automorphism_order


def test_identity_mapping_torus():
    t = standard.tetrahedron_boundary()
    fb = extract_fibration(mapping_torus(t, SimplicialAutomorphism.identity(t.vertices)))
    assert fb.fiber_lengths() == [1, 1, 1, 1]
    assert fb.n == 1
    assert all(c.topology == "solid_torus" for c in classify_circuits(fb))
    hs = horizontal_surface(fb)
    assert hs.stats.euler_characteristic == 2 and hs.stats.components == 1


def test_rotation_of_tetrahedron():
    t = standard.tetrahedron_boundary()
    fb = extract_fibration(mapping_torus(t, SimplicialAutomorphism.from_cycles(t.vertices, "bcd")))
    assert fb.fiber_lengths() == [1, 3]
    assert fb.n == 3
    circuits = classify_circuits(fb)
    assert sorted(len(c.circuit) for c in circuits) == [1, 3]
    # the triangle bcd is rotated onto itself
    (fixed,) = [c for c in circuits if len(c.circuit) == 1]
    assert fixed.return_order == 3 and fixed.topology == "solid_torus"


def test_reflection_gives_solid_klein_bottle():
    t = standard.single_triangle()
    f = SimplicialAutomorphism.from_cycles(t.vertices, "bc")
    fb = extract_fibration(mapping_torus(t, f))
    (circuit,) = classify_circuits(fb)
    assert circuit.topology == "solid_klein_bottle"
    assert circuit.return_order == 2
    assert fb.fiber_lengths() == [1, 2] and fb.n == 2


def test_n_can_exceed_longest_fibre():
    # poles swapped and ring rotated: orbits of lengths 2 and 3, order 6
    t = standard.bipyramid(3)
    f = SimplicialAutomorphism({"n": "s", "s": "n", "r0": "r1", "r1": "r2", "r2": "r0"})
    assert automorphism_order(t, f) == 6
    fb = extract_fibration(mapping_torus(t, f))
    assert fb.fiber_lengths() == [2, 3]
    assert max_fiber_length(fb) == 3
    assert fb.n == 6


def test_fibres_of_torus_translation():
    t = standard.torus_grid(3, 4)
    f = standard.torus_translation(3, 4, 0, 2)
    fb = extract_fibration(mapping_torus(t, f))
    assert fb.fiber_lengths() == [2] * 6
    assert fb.n == 2


def test_involution_bundle_fibration():
    t = standard.octahedron_boundary()
    psi = standard.octahedron_antipodal()
    fb = extract_fibration(involution_bundle(t, psi, psi))
    assert fb.n == 2 and fb.fiber_lengths() == [2, 2, 2]
    parts = horizontal_surface(fb).component_stats
    assert [(p.euler_characteristic, p.orientable) for p in parts] == [(1, False), (1, False)]


def test_torus_involution_bundle_law():
    t = standard.torus_grid(4, 4)
    psi0 = standard.torus_translation(4, 4, 2, 0)
    psi1 = standard.torus_translation(4, 4, 0, 2)
    fb = extract_fibration(involution_bundle(t, psi0, psi1))
    assert fb.n % 2 == 0
    assert psi0.compose(psi1).power(fb.n // 2).is_identity()
    parts = horizontal_surface(fb).component_stats
    assert [(p.euler_characteristic, p.orientable) for p in parts] == [(0, True), (0, True)]


def test_surface_with_boundary():
    t = standard.annulus(5)
    fb = extract_fibration(mapping_torus(t, standard.ring_rotation(t, 5)))
    assert fb.n == 5
    assert fb.fiber_lengths() == [5, 5]
    assert horizontal_surface(fb).stats.boundary_components == 2


def test_non_special_input():
    with pytest.raises(NotSpecial) as err:
        extract_fibration(prismify(standard.one_tet()))
    assert err.value.certificate.witness.incidence == 2


def test_one_prism_with_transposition():
    from prismkit.prism import BOTTOM, TOP, ComplexBuilder

    b = ComplexBuilder(1)
    b.glue(0, TOP, 0, BOTTOM, (0, 2, 1))
    fb = extract_fibration(b.build())
    (circuit,) = classify_circuits(fb)
    assert circuit.topology == "solid_klein_bottle" and circuit.return_map == (0, 2, 1)
    assert fb.n == 2 and fb.fiber_lengths() == [1, 2]
    hs = horizontal_surface(fb)
    assert (hs.stats.euler_characteristic, hs.stats.boundary_components) == (1, 1)
