import random
from fractions import Fraction

import pytest

import oracles
from fankit.barnette import CONES, EXPECTED_CONE_DETERMINANTS, RAY_VECTORS, SUBDIVISION_POINTS
from fankit.errors import DimensionMismatch, SingularBasis, ZeroVector
from fankit.linalg import (
    adjugate_rows,
    cone_inequalities,
    determinant,
    dot,
    facet_normal,
    make_primitive,
    solve_coefficients,
)

RAYS = dict(RAY_VECTORS)


def cone_columns(labels):
    return [RAYS[l] for l in labels]


def test_determinants_match_the_embedded_table():
    for labels, expected in zip(CONES, EXPECTED_CONE_DETERMINANTS):
        assert determinant(cone_columns(labels)) == expected


def test_determinant_of_subdivided_cone_is_unimodular():
    cols = [SUBDIVISION_POINTS["c1"], RAYS["d3"], RAYS["e3"], RAYS["d4"]]
    assert determinant(cols) == 1


def test_determinant_agrees_with_permutation_expansion():
    rng = random.Random(20240811)
    for _ in range(60):
        n = rng.choice((2, 3, 4))
        cols = [tuple(rng.randint(-9, 9) for _ in range(n)) for _ in range(n)]
        assert determinant(cols) == oracles.determinant_by_permutations(cols)


def test_determinant_is_alternating():
    rng = random.Random(7)
    for _ in range(40):
        cols = [tuple(rng.randint(-20, 20) for _ in range(4)) for _ in range(4)]
        i, j = rng.sample(range(4), 2)
        swapped = list(cols)
        swapped[i], swapped[j] = swapped[j], swapped[i]
        assert determinant(swapped) == -determinant(cols)


def test_determinant_rejects_non_square():
    with pytest.raises(DimensionMismatch):
        determinant([(1, 0), (0, 1), (1, 1)])


def test_solve_identity_basis():
    basis = cone_columns(("e1", "e2", "e3", "e4"))
    assert solve_coefficients(basis, (1, 1, 1, 1)) == (1, 1, 1, 1)


def test_solve_recovers_barycentric_recipes():
    basis = cone_columns(("e1", "d3", "e3", "d4"))
    assert solve_coefficients(basis, SUBDIVISION_POINTS["c1"]) == (
        Fraction(1, 2),
        Fraction(1, 2),
        Fraction(0),
        Fraction(1, 2),
    )
    basis = cone_columns(("d1", "d2", "d3", "d4"))
    assert solve_coefficients(basis, SUBDIVISION_POINTS["c4"]) == (
        Fraction(1, 3),
        Fraction(1, 3),
        Fraction(1, 3),
        Fraction(0),
    )


def test_solve_reconstructs_on_all_cone_bases():
    rng = random.Random(11)
    for labels in CONES:
        cols = cone_columns(labels)
        p = tuple(rng.randint(-50, 50) for _ in range(4))
        lams = solve_coefficients(cols, p)
        rebuilt = tuple(
            sum(lam * col[i] for lam, col in zip(lams, cols)) for i in range(4)
        )
        assert rebuilt == tuple(Fraction(x) for x in p)
        assert lams == oracles.solve_by_gauss(cols, p)


def test_solve_singular_basis():
    with pytest.raises(SingularBasis):
        solve_coefficients([(1, 0), (2, 0)], (1, 1))


def test_make_primitive():
    assert make_primitive((2, -2, 0, 0)) == (1, -1, 0, 0)
    assert make_primitive(RAYS["d1"]) == RAYS["d1"]
    summed = tuple(
        a + b + c + d
        for a, b, c, d in zip(RAYS["d1"], RAYS["e2"], RAYS["d2"], RAYS["d4"])
    )
    assert summed == (-2, 0, -1, 1)
    assert make_primitive(summed) == summed


def test_make_primitive_is_idempotent():
    rng = random.Random(3)
    for _ in range(50):
        v = tuple(rng.randint(-40, 40) for _ in range(4))
        if all(x == 0 for x in v):
            continue
        once = make_primitive(v)
        assert make_primitive(once) == once


def test_make_primitive_rejects_zero():
    with pytest.raises(ZeroVector):
        make_primitive((0, 0, 0, 0))


def test_adjugate_rows_are_cramer_numerators():
    cols = cone_columns(("d1", "d2", "d3", "e4"))
    rows = adjugate_rows(cols)
    p = (7, -3, 2, 5)
    for j, row in enumerate(rows):
        replaced = list(cols)
        replaced[j] = p
        assert dot(row, p) == determinant(replaced)


def test_cone_inequalities_sign_convention():
    for labels in CONES:
        cols = cone_columns(labels)
        rows = cone_inequalities(cols)
        d = determinant(cols)
        # each generator satisfies its own inequality with value |det|
        for j, col in enumerate(cols):
            values = [dot(row, col) for row in rows]
            assert values[j] == abs(d)
            assert all(v == 0 for k, v in enumerate(values) if k != j)


def test_facet_normal_orthogonal_and_nonzero():
    vectors = [RAYS["d1"], RAYS["e3"], RAYS["e4"]]
    normal = facet_normal(vectors)
    assert any(x != 0 for x in normal)
    assert all(dot(normal, v) == 0 for v in vectors)


def test_facet_normal_zero_for_dependent_vectors():
    assert facet_normal([(1, 0, 0, 0), (2, 0, 0, 0), (0, 0, 1, 0)]) == (0, 0, 0, 0)
