"""Embedded dataset: the Barnette-sphere fan and its desingularization recipe.

The Barnette sphere is the classical non-polytopal simplicial 3-sphere on 8
vertices and 19 facets.  This module ships an exact realization of it as a
complete simplicial fan in Z^4 (rays e1..e4, d1..d4; one 4-cone per facet),
together with the ten subdivision points c1..c10 that resolve its five
singular cones, and the reference values the test suite and CLI cross-check
against: the expected cone determinants, the expected desingularized cone
table with determinant signs, and the lattice-point classification counts
for the box of radius 40.
"""

from __future__ import annotations

from fractions import Fraction

from .fan import Fan

AMBIENT_DIM = 4

#: Rays of the Barnette fan.  e1..e4 are the standard basis.
RAY_VECTORS: tuple[tuple[str, tuple[int, int, int, int]], ...] = (
    ("e1", (1, 0, 0, 0)),
    ("e2", (0, 1, 0, 0)),
    ("e3", (0, 0, 1, 0)),
    ("e4", (0, 0, 0, 1)),
    ("d1", (-1, 0, -2, 1)),
    ("d2", (-2, -1, 0, 1)),
    ("d3", (0, -2, -1, 1)),
    ("d4", (1, 0, 1, -1)),
)

#: The 19 maximal cones, in the standard sigma_1..sigma_19 order.  Ray order
#: inside each cone is significant: determinants are reported in this order.
#: sigma18 is d1 d2 d3 e4 (determinant -9); the variant d1 d2 e3 d4 seen in
#: some renderings of this fan is inconsistent with both the determinant
#: table and the subdivision cones produced from sigma18 below.
CONES: tuple[tuple[str, str, str, str], ...] = (
    ("e1", "e2", "e3", "e4"),
    ("d1", "e2", "e3", "e4"),
    ("e1", "d2", "e3", "e4"),
    ("e1", "e2", "d3", "e4"),
    ("e1", "e2", "e3", "d4"),
    ("d1", "d2", "e3", "e4"),
    ("e1", "d2", "d3", "e4"),
    ("d1", "e2", "d3", "e4"),
    ("e1", "d2", "e3", "d3"),
    ("e1", "e2", "d3", "d1"),
    ("d1", "e2", "e3", "d2"),
    ("e1", "e2", "d1", "d4"),
    ("e1", "d3", "e3", "d4"),
    ("d2", "e2", "e3", "d4"),
    ("e1", "d1", "d3", "d4"),
    ("d1", "e2", "d2", "d4"),
    ("d3", "d2", "e3", "d4"),
    ("d1", "d2", "d3", "e4"),
    ("d1", "d2", "d3", "d4"),
)

#: Conventional names aligned with CONES.
CONE_NAMES: tuple[str, ...] = tuple(f"sigma{i + 1}" for i in range(len(CONES)))

#: Expected determinant of each cone, in CONES order and listed ray order.
EXPECTED_CONE_DETERMINANTS: tuple[int, ...] = (
    1, -1, -1, -1, -1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 2, 1, 3, -9, 3,
)

#: Barycentric recipes of the subdivision points over earlier rays.  Each
#: vector below is the exact integer value of the recipe; the test suite
#: recomputes them from these coefficients.
BARYCENTRIC_RECIPES: dict[str, tuple[tuple[str, Fraction], ...]] = {
    "c1": (("e1", Fraction(1, 2)), ("d3", Fraction(1, 2)), ("d4", Fraction(1, 2))),
    "c2": (
        ("d3", Fraction(1, 3)),
        ("d2", Fraction(1, 3)),
        ("e3", Fraction(2, 3)),
        ("d4", Fraction(2, 3)),
    ),
    "c3": (("d3", Fraction(1, 2)), ("d2", Fraction(1, 2)), ("c2", Fraction(1, 2))),
    "c4": (("d1", Fraction(1, 3)), ("d2", Fraction(1, 3)), ("d3", Fraction(1, 3))),
    "c5": (
        ("c4", Fraction(1, 3)),
        ("d2", Fraction(1, 3)),
        ("d3", Fraction(2, 3)),
        ("e4", Fraction(2, 3)),
    ),
    "c6": (("c4", Fraction(1, 2)), ("d2", Fraction(1, 2)), ("c5", Fraction(1, 2))),
    "c7": (
        ("d1", Fraction(2, 3)),
        ("c4", Fraction(1, 3)),
        ("d3", Fraction(1, 3)),
        ("e4", Fraction(2, 3)),
    ),
    "c8": (("c7", Fraction(1, 2)), ("c4", Fraction(1, 2)), ("d3", Fraction(1, 2))),
    "c9": (
        ("d1", Fraction(1, 3)),
        ("d2", Fraction(2, 3)),
        ("c4", Fraction(1, 3)),
        ("e4", Fraction(2, 3)),
    ),
    "c10": (("d1", Fraction(1, 2)), ("c9", Fraction(1, 2)), ("c4", Fraction(1, 2))),
}

#: Subdivision points, all primitive.
SUBDIVISION_POINTS: dict[str, tuple[int, int, int, int]] = {
    "c1": (1, -1, 0, 0),
    "c2": (0, -1, 1, 0),
    "c3": (-1, -2, 0, 1),
    "c4": (-1, -1, -1, 1),
    "c5": (-1, -2, -1, 2),
    "c6": (-2, -2, -1, 2),
    "c7": (-1, -1, -2, 2),
    "c8": (-1, -2, -2, 2),
    "c9": (-2, -1, -1, 2),
    "c10": (-2, -1, -2, 2),
}

#: Order in which the ten stellar subdivisions are applied.  c5/c7/c9 must
#: precede c6/c8/c10 (each of the latter subdivides cones created by the
#: former); the c4 step replaces sigma18 and sigma19 together because both
#: contain the face d1 d2 d3.
SUBDIVISION_SEQUENCE: tuple[str, ...] = (
    "c1", "c2", "c3", "c4", "c5", "c7", "c9", "c6", "c8", "c10",
)

#: The 41 cones expected to replace the five singular cones, with the sign
#: of the determinant taken in the listed ray order.
EXPECTED_REFINED_CONES: tuple[tuple[tuple[str, str, str, str], int], ...] = (
    (("c1", "d3", "e3", "d4"), +1),
    (("e1", "c1", "e3", "d4"), +1),
    (("e1", "d3", "e3", "c1"), +1),
    (("c1", "d1", "d3", "d4"), +1),
    (("e1", "d1", "c1", "d4"), +1),
    (("e1", "d1", "d3", "c1"), +1),
    (("c2", "d2", "e3", "d4"), +1),
    (("d3", "c2", "e3", "d4"), +1),
    (("c3", "d2", "c2", "d4"), +1),
    (("d3", "c3", "c2", "d4"), +1),
    (("d3", "d2", "c3", "d4"), +1),
    (("c3", "d2", "e3", "c2"), +1),
    (("d3", "c3", "e3", "c2"), +1),
    (("d3", "d2", "e3", "c3"), +1),
    (("c5", "d2", "d3", "e4"), -1),
    (("c4", "c5", "d3", "e4"), -1),
    (("c6", "d2", "c5", "e4"), -1),
    (("c4", "c6", "c5", "e4"), -1),
    (("c4", "d2", "c6", "e4"), -1),
    (("c6", "d2", "d3", "c5"), -1),
    (("c4", "c6", "d3", "c5"), -1),
    (("c4", "d2", "d3", "c6"), -1),
    (("c8", "c4", "d3", "e4"), -1),
    (("c7", "c8", "d3", "e4"), -1),
    (("c7", "c4", "c8", "e4"), -1),
    (("d1", "c7", "d3", "e4"), -1),
    (("d1", "c4", "c7", "e4"), -1),
    (("d1", "c8", "d3", "c7"), -1),
    (("d1", "c4", "c8", "c7"), -1),
    (("d1", "c4", "d3", "c8"), -1),
    (("c9", "d2", "c4", "e4"), -1),
    (("c10", "c9", "c4", "e4"), -1),
    (("d1", "c10", "c4", "e4"), -1),
    (("d1", "c9", "c10", "e4"), -1),
    (("d1", "d2", "c9", "e4"), -1),
    (("c10", "d2", "c4", "c9"), -1),
    (("d1", "d2", "c10", "c9"), -1),
    (("d1", "d2", "c4", "c10"), -1),
    (("c4", "d2", "d3", "d4"), +1),
    (("d1", "c4", "d3", "d4"), +1),
    (("d1", "d2", "c4", "d4"), +1),
)

#: Names of the five singular cones the pipeline removes.
SINGULAR_CONE_NAMES: tuple[str, ...] = ("sigma13", "sigma15", "sigma17", "sigma18", "sigma19")

#: Reference lattice-point classification for the desingularization input fan
#: over the box [-40, 40]^4, keyed by the dimension of the minimal face:
#: 4 = interior of a maximal cone, 3 = relative interior of a shared facet,
#: 2 / 1 = relative interior of a shared 2-face / 1-face, 0 = the origin.
REFERENCE_SCAN_COUNTS_BOUND_40: dict[int, int] = {
    4: 41_315_292,
    3: 1_696_978,
    2: 34_190,
    1: 260,
    0: 1,
}
REFERENCE_SCAN_BOUND = 40

#: Six 3-simplices recorded alongside this dataset for the star of the edge
#: e1 d3 in the desingularized complex.  The entry d1 e2 e3 e4 does not
#: contain the edge, so the recorded list cannot equal the computed star;
#: the obstruction checker computes the true star and reports the difference
#: from this record instead of trusting it.
RECORDED_EDGE_STAR: tuple[frozenset[str], ...] = (
    frozenset({"e1", "d2", "e3", "d3"}),
    frozenset({"e1", "d3", "e3", "c1"}),
    frozenset({"e1", "d1", "d3", "c1"}),
    frozenset({"e1", "e2", "d3", "d1"}),
    frozenset({"d1", "e2", "e3", "e4"}),
    frozenset({"e1", "d2", "d3", "e4"}),
)

#: The edge whose star/link the obstruction facts are about.
OBSTRUCTION_EDGE: tuple[str, str] = ("e1", "d3")

#: Expected link of that edge: a hexagon, given as its consecutive edges.
EXPECTED_EDGE_LINK_CYCLE: tuple[tuple[str, str], ...] = (
    ("d2", "e3"),
    ("e3", "c1"),
    ("c1", "d1"),
    ("d1", "e2"),
    ("e2", "e4"),
    ("e4", "d2"),
)

#: The two facets whose shared triangle the obstruction facts check.
OBSTRUCTION_FACET_A = frozenset({"d1", "e2", "e3", "e4"})
OBSTRUCTION_FACET_B = frozenset({"d1", "d2", "e3", "e4"})
OBSTRUCTION_SHARED_TRIANGLE = frozenset({"d1", "e3", "e4"})
OBSTRUCTION_OUTSIDE_VERTEX = "c1"

#: First cone selected when growing the fan family from the desingularized
#: fan: the smooth cone d1 e2 d2 d4, subdivided at the sum of its rays.
FAMILY_FIRST_CONE: tuple[str, str, str, str] = ("d1", "e2", "d2", "d4")


def barnette_fan() -> Fan:
    """Fresh Fan instance of the embedded Barnette-sphere fan."""
    return Fan.from_labels(AMBIENT_DIM, RAY_VECTORS, CONES)
