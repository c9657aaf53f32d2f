import pytest

from prismkit import standard
from prismkit.report import InvalidInput
from prismkit.surface import (
    NotAnAutomorphism,
    SimplicialAutomorphism,
    SurfaceTriangulation,
    automorphism_order,
    barycentric_subdivide_surface,
    check_automorphism,
    enumerate_automorphisms,
    is_fixed_point_free,
    relabel_surface,
    split_components,
    subdivide_automorphism,
    surface_stats,
    validate_surface,
)


@pytest.mark.parametrize(
    "surface, chi, orientable, boundary",
    [
        (standard.tetrahedron_boundary(), 2, True, 0),
        (standard.octahedron_boundary(), 2, True, 0),
        (standard.single_triangle(), 1, True, 1),
        (standard.two_triangles(), 1, True, 1),
        (standard.annulus(5), 0, True, 2),
        (standard.torus_grid(3, 4), 0, True, 0),
        (standard.mobius_band(7), 0, False, 1),
        (standard.rp2_six(), 1, False, 0),
        (standard.bipyramid(6), 2, True, 0),
        (standard.cone_disk(5), 1, True, 1),
    ],
)
def test_stats_of_standard_surfaces(surface, chi, orientable, boundary):
    assert validate_surface(surface).ok
    s = surface_stats(surface)
    assert (s.euler_characteristic, s.orientable, s.boundary_components, s.components) == (chi, orientable, boundary, 1)


def test_overfull_edge_is_reported():
    t = SurfaceTriangulation([("a", "b", "c"), ("a", "b", "d"), ("a", "b", "e")])
    assert "overfull edge" in validate_surface(t).kinds()


def test_degenerate_and_duplicate_triangles():
    assert "degenerate triangle" in validate_surface(SurfaceTriangulation([("a", "a", "b")])).kinds()
    dup = SurfaceTriangulation([("a", "b", "c"), ("c", "b", "a")])
    assert "duplicate triangle" in validate_surface(dup).kinds()


def test_pinched_vertex_has_bad_link():
    # two triangles meeting only at vertex a
    t = SurfaceTriangulation([("a", "b", "c"), ("a", "d", "e")])
    report = validate_surface(t)
    assert "bad vertex link" in report.kinds()


def test_disconnected_needs_permission():
    tris = [("a", "b", "c"), ("d", "e", "f")]
    assert "disconnected" in validate_surface(SurfaceTriangulation(tris)).kinds()
    t = SurfaceTriangulation(tris, allow_disconnected=True)
    assert validate_surface(t).ok
    assert [len(p.triangles) for p in split_components(t)] == [1, 1]


def test_require_valid_raises_with_report():
    with pytest.raises(InvalidInput) as err:
        surface_stats(SurfaceTriangulation([("a", "a", "b")]))
    assert not err.value.report.ok


def test_generalized_projective_plane():
    # octahedron mod antipodal map: 4 triangles on 3 vertices, 6 edges
    tris = [("x", "y", "z")] * 4
    sides = [("ea", "eb", "ec"), ("ea", "eB", "eC"), ("eA", "eb", "eC"), ("eA", "eB", "ec")]
    t = SurfaceTriangulation(tris, sides)
    assert validate_surface(t).ok
    s = surface_stats(t)
    assert (s.euler_characteristic, s.orientable, s.boundary_components) == (1, False, 0)


def test_inconsistent_edge_in_generalized_mode():
    t = SurfaceTriangulation([("a", "b", "c"), ("a", "b", "d")], [("e1", "e2", "e3"), ("e1", "e4", "e5")])
    assert "inconsistent edge" in validate_surface(t).kinds()


@pytest.mark.parametrize(
    "surface",
    [standard.tetrahedron_boundary(), standard.mobius_band(5), standard.annulus(3), standard.rp2_six()],
)
def test_subdivision_preserves_invariants(surface):
    sub = barycentric_subdivide_surface(surface)
    assert len(sub.triangles) == 6 * len(surface.triangles)
    assert validate_surface(sub).ok
    assert surface_stats(sub) == surface_stats(surface)


def test_subdivision_of_generalized_surface_is_simplicial():
    sides = [("ea", "eb", "ec"), ("ea", "eB", "eC"), ("eA", "eb", "eC"), ("eA", "eB", "ec")]
    t = SurfaceTriangulation([("x", "y", "z")] * 4, sides)
    sub = barycentric_subdivide_surface(t)
    assert sub.simplicial
    assert surface_stats(sub).euler_characteristic == 1


def test_subdivided_automorphism_is_automorphism():
    t = standard.octahedron_boundary()
    f = standard.octahedron_antipodal()
    sub = barycentric_subdivide_surface(t)
    g = subdivide_automorphism(t, f)
    check_automorphism(sub, g)
    assert automorphism_order(sub, g) == 2
    assert is_fixed_point_free(sub, g).free


def test_automorphism_algebra():
    t = standard.tetrahedron_boundary()
    f = SimplicialAutomorphism.from_cycles(t.vertices, "abc")
    assert automorphism_order(t, f) == 3
    assert f.power(3).is_identity()
    assert f.compose(f.inverse()).is_identity()
    assert f.cycles() == [("a", "b", "c"), ("d",)]


def test_not_an_automorphism():
    t = standard.two_triangles()  # abc, abd
    with pytest.raises(NotAnAutomorphism) as err:
        check_automorphism(t, SimplicialAutomorphism.from_cycles(t.vertices, "ac"))
    assert err.value.triangle is not None
    with pytest.raises(NotAnAutomorphism):
        check_automorphism(t, SimplicialAutomorphism({"a": "a"}))


def test_fixed_point_witnesses():
    t = standard.tetrahedron_boundary()
    fp = is_fixed_point_free(t, SimplicialAutomorphism.identity(t.vertices))
    assert not fp.free and fp.witness == frozenset({"a"})
    fp = is_fixed_point_free(t, SimplicialAutomorphism.from_cycles(t.vertices, "ab", "cd"))
    assert not fp.free and fp.witness == frozenset({"a", "b"})
    assert is_fixed_point_free(standard.octahedron_boundary(), standard.octahedron_antipodal()).free


@pytest.mark.parametrize(
    "surface, count",
    [
        (standard.tetrahedron_boundary(), 24),
        (standard.octahedron_boundary(), 48),
        (standard.rp2_six(), 60),
        (standard.bipyramid(5), 20),
        (standard.annulus(4), 16),
        (standard.single_triangle(), 6),
        (standard.torus_grid(3, 5), 30),
    ],
)
def test_automorphism_counts(surface, count):
    autos = enumerate_automorphisms(surface)
    assert len(autos) == count
    for f in autos:
        check_automorphism(surface, f)


def test_automorphisms_of_disconnected_surface():
    t = SurfaceTriangulation([("a", "b", "c"), ("d", "e", "f")], allow_disconnected=True)
    # each triangle has 6 symmetries, and the two may be swapped
    assert len(enumerate_automorphisms(t)) == 72


def test_relabel_keeps_stats():
    t = standard.mobius_band(5)
    r = relabel_surface(t, {v: f"x{v}" for v in t.vertices})
    assert surface_stats(r) == surface_stats(t)
