import random
from functools import lru_cache

import pytest

from prismkit import standard
from prismkit.surface import enumerate_automorphisms

# (name, builder) pairs; every surface has at most 30 triangles
SURFACE_FAMILY = [
    ("tetrahedron", standard.tetrahedron_boundary),
    ("octahedron", standard.octahedron_boundary),
    ("triangle", standard.single_triangle),
    ("two_triangles", standard.two_triangles),
    ("rp2", standard.rp2_six),
    *[(f"bipyramid{m}", lambda m=m: standard.bipyramid(m)) for m in range(3, 16)],
    *[(f"cone{m}", lambda m=m: standard.cone_disk(m)) for m in range(3, 31, 3)],
    *[(f"annulus{m}", lambda m=m: standard.annulus(m)) for m in range(3, 16)],
    *[(f"torus3x{c}", lambda c=c: standard.torus_grid(3, c)) for c in (3, 4, 5)],
    *[(f"mobius{m}", lambda m=m: standard.mobius_band(m)) for m in range(5, 30, 2)],
]


@lru_cache(maxsize=None)
def surface_and_automorphisms(name):
    t = dict(SURFACE_FAMILY)[name]()
    return t, tuple(enumerate_automorphisms(t))


def random_surface_map(rng: random.Random):
    name, _ = rng.choice(SURFACE_FAMILY)
    t, autos = surface_and_automorphisms(name)
    return name, t, rng.choice(autos)


@pytest.fixture
def rng():
    return random.Random(20261015)
