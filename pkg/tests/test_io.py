import pytest

from prismkit import io, standard
from prismkit.builders import involution_bundle, mapping_torus, prismify
from prismkit.prism import complex_stats, is_special
from prismkit.seifert import SeifertParams
from prismkit.surface import SimplicialAutomorphism, barycentric_subdivide_surface, surface_stats


def test_surface_round_trip():
    for t in (standard.rp2_six(), standard.torus_grid(3, 3), barycentric_subdivide_surface(standard.single_triangle())):
        back = io.parse_surface(io.format_surface(t))
        assert surface_stats(back) == surface_stats(t)
        assert len(back.triangles) == len(t.triangles)


def test_generalized_surface_lines():
    text = "triangle x y z a b c\ntriangle x y z a B C\ntriangle x y z A b C\ntriangle x y z A B c\n"
    t = io.parse_surface(text)
    assert not t.simplicial
    assert surface_stats(t).euler_characteristic == 1
    assert io.format_surface(t) == text


def test_surface_errors():
    with pytest.raises(io.FormatError, match="s.txt:2"):
        io.parse_surface("triangle a b c\ntriangle a b\n", "s.txt")
    with pytest.raises(io.FormatError, match="no triangles"):
        io.parse_surface("# nothing\n")
    with pytest.raises(io.FormatError, match="mixes"):
        io.parse_surface("triangle a b c\ntriangle a b d e f g\n")


def test_comments_and_blank_lines():
    t = io.parse_surface("# a disk\n\ntriangle a b c   # the only one\n")
    assert t.triangles == (("a", "b", "c"),)


def test_map_parsing():
    f = io.parse_map("map a b\nmap b a\n")
    assert f.vertex_map == {"a": "b", "b": "a"}
    full = io.complete_map(f, standard.tetrahedron_boundary())
    assert full.vertex_map["c"] == "c"
    assert io.parse_map(io.format_map(full)).vertex_map == full.vertex_map
    with pytest.raises(io.FormatError, match="twice"):
        io.parse_map("map a b\nmap a c\n")
    with pytest.raises(io.FormatError, match="bijection"):
        io.parse_map("map a b\n")


def test_tri3_round_trip():
    for t in (standard.one_tet(), standard.two_tet_sphere(), standard.three_tet_ball()):
        back = io.parse_tri3(io.format_tri3(t))
        assert back.size == t.size and back.gluings == t.gluings


def test_tri3_single_direction_is_completed():
    t = io.parse_tri3("tet 0\ntet 1\nglue 0 3 1 3 0 2 1\n")
    assert t.gluings[(1, 3)] == (0, 3, (0, 2, 1))


def test_tri3_errors():
    with pytest.raises(io.FormatError, match="t:3"):
        io.parse_tri3("tet 0\ntet 1\nglue 0 3 1 x 0 1 2\n", "t")
    with pytest.raises(io.FormatError, match="numbered"):
        io.parse_tri3("tet 0\ntet 2\n")
    with pytest.raises(io.FormatError, match="glued twice"):
        io.parse_tri3("tet 0\ntet 1\nglue 0 3 1 3 0 1 2\nglue 0 3 1 2 0 1 2\n")


def test_prism_round_trip_keeps_stats_and_certificates():
    t = standard.tetrahedron_boundary()
    octa = standard.octahedron_boundary()
    anti = standard.octahedron_antipodal()
    for c in (
        prismify(standard.three_tet_ball()),
        mapping_torus(t, SimplicialAutomorphism.from_cycles(t.vertices, "abc")),
        involution_bundle(octa, anti, anti),
    ):
        back = io.parse_prism(io.format_prism(c))
        assert back.gluings == c.gluings
        assert complex_stats(back) == complex_stats(c)
        assert is_special(back) == is_special(c)


def test_prism_errors():
    with pytest.raises(io.FormatError, match="bot"):
        io.parse_prism("prism 0\nprism 1\nglueh 0 up 1 bot 0 1 2\n")
    with pytest.raises(io.FormatError, match="0, 1, 2"):
        io.parse_prism("prism 0\nprism 1\ngluev 0 3 1 0 0 1 2 3\n")
    with pytest.raises(io.FormatError, match="no prisms"):
        io.parse_prism("")


def test_params():
    s = io.parse_params("b=-1; epsilon=o1; g=0; t=0,k=0; h=; kk=; pairs=(2,1),(3,1),(5,1)\n")
    assert s == SeifertParams(b=-1, pairs=((2, 1), (3, 1), (5, 1)))
    s = io.parse_params("b=2; epsilon=n2; g=3; t=2,k=1; h=0,1; kk=4; pairs=")
    assert (s.t, s.k, s.h_list, s.k_list, s.pairs) == (2, 1, (0, 1), (4,), ())
    assert io.parse_params(io.format_params(s)) == s


@pytest.mark.parametrize(
    "text, message",
    [
        ("b=x", "integer"),
        ("b=1; colour=red", "unknown"),
        ("pairs=(2,1),(3", "pairs"),
        ("pairs=(4,2)", "gcd"),
        ("b=1; b=2", "twice"),
    ],
)
def test_params_errors(text, message):
    with pytest.raises(io.FormatError, match=message):
        io.parse_params(text, "p.txt")
