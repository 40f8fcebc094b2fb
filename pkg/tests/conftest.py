from itertools import combinations, product

import pytest

from fankit import SimplicialComplex, desingularize_barnette
from fankit.barnette import barnette_fan
from fankit.polytopality import Realization


@pytest.fixture(scope="session")
def delta():
    """The embedded singular fan over the Barnette sphere."""
    return barnette_fan()


@pytest.fixture(scope="session")
def refined_with_steps():
    return desingularize_barnette()


@pytest.fixture(scope="session")
def refined(refined_with_steps):
    """The desingularized fan (18 rays, 55 maximal cones)."""
    return refined_with_steps[0]


@pytest.fixture(scope="session")
def simplex_boundary():
    """Boundary complex of the 4-simplex on 0, e1..e4, plus its realization."""
    verts = {
        "v0": (0, 0, 0, 0),
        "v1": (1, 0, 0, 0),
        "v2": (0, 1, 0, 0),
        "v3": (0, 0, 1, 0),
        "v4": (0, 0, 0, 1),
    }
    complex_ = SimplicialComplex.from_label_facets(
        [list(f) for f in combinations(sorted(verts), 4)]
    )
    return complex_, Realization.from_entries(verts)


@pytest.fixture(scope="session")
def cross_polytope_boundary():
    """Boundary complex of the 4-dimensional cross-polytope on +-e1..e4."""
    coords = {}
    for i in range(4):
        plus, minus = [0] * 4, [0] * 4
        plus[i], minus[i] = 1, -1
        coords[f"p{i}"] = tuple(plus)
        coords[f"n{i}"] = tuple(minus)
    facets = [
        [f"{s}{i}" for i, s in enumerate(signs)] for signs in product("pn", repeat=4)
    ]
    complex_ = SimplicialComplex.from_label_facets(facets)
    return complex_, Realization.from_entries(coords)
