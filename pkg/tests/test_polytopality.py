import random
from fractions import Fraction

import pytest

import oracles
from fankit.complexes import SimplicialComplex, underlying_complex
from fankit.errors import DegenerateFacet, DimensionMismatch, MissingCoordinates
from fankit.polytopality import Realization, certify_realization, convex_position


def unimodular_affine_map(rng, dim):
    """Random integer unimodular matrix (by row operations) plus a translation."""
    m = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    for _ in range(12):
        i, j = rng.sample(range(dim), 2)
        factor = rng.randint(-2, 2)
        m[i] = [a + factor * b for a, b in zip(m[i], m[j])]
    shift = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(dim)]

    def apply(v):
        return tuple(
            sum(m[i][j] * v[j] for j in range(dim)) + shift[i] for i in range(dim)
        )

    return apply


def transformed(realization, mapping):
    return Realization({label: mapping(vec) for label, vec in realization.coords.items()})


def test_simplex_boundary_passes(simplex_boundary):
    complex_, realization = simplex_boundary
    report = certify_realization(complex_, realization)
    assert report.passed
    assert report.facets_checked == 5
    assert report.first_violation is None


def test_cross_polytope_boundary_passes(cross_polytope_boundary):
    complex_, realization = cross_polytope_boundary
    report = certify_realization(complex_, realization)
    assert report.passed
    assert report.facets_checked == 16
    # C(8, 4) - 16 = 54 non-facet quadruples must be checked unsupported
    assert report.non_facets_checked == 54


def test_passing_certificates_survive_the_independent_recheck(
    simplex_boundary, cross_polytope_boundary
):
    for complex_, realization in (simplex_boundary, cross_polytope_boundary):
        ok, facet = oracles.hyperplane_side_recheck(complex_, realization)
        assert ok, facet


def test_refined_complex_with_ray_coordinates_is_rejected(refined):
    complex_ = underlying_complex(refined)
    realization = Realization.from_entries(
        {ray.label: ray.vector for ray in refined.rays}
    )
    report = certify_realization(complex_, realization)
    assert not report.passed
    violation = report.first_violation
    assert violation is not None
    assert violation.facet  # a concrete named facet
    assert "hyperplane" in violation.reason


def test_missing_coordinates(simplex_boundary):
    complex_, realization = simplex_boundary
    partial = Realization({k: v for k, v in realization.coords.items() if k != "v0"})
    with pytest.raises(MissingCoordinates):
        certify_realization(complex_, partial)


def test_degenerate_facet(simplex_boundary):
    complex_, _ = simplex_boundary
    # place v3 inside the affine span of v0 v1 v2: facets through them collapse
    coords = {
        "v0": (0, 0, 0, 0),
        "v1": (1, 0, 0, 0),
        "v2": (0, 1, 0, 0),
        "v3": (1, 1, 0, 0),
        "v4": (0, 0, 0, 1),
    }
    with pytest.raises(DegenerateFacet):
        certify_realization(complex_, Realization.from_entries(coords))


def test_dimension_mismatch(simplex_boundary):
    complex_, _ = simplex_boundary
    coords = {v: (0, 0, 0) for v in complex_.vertex_labels}
    with pytest.raises(DimensionMismatch):
        certify_realization(complex_, Realization.from_entries(coords))


def test_affine_invariance_of_passing_certificates(
    simplex_boundary, cross_polytope_boundary
):
    rng = random.Random(20240811)
    for complex_, realization in (simplex_boundary, cross_polytope_boundary):
        for _ in range(3):
            mapping = unimodular_affine_map(rng, 4)
            moved = transformed(realization, mapping)
            assert certify_realization(complex_, moved).passed


def test_square_complex_fails_on_a_nonconvex_quadrilateral():
    square = SimplicialComplex.from_label_facets(
        [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]]
    )
    convex = Realization.from_entries(
        {"a": (0, 0), "b": (1, 0), "c": (1, 1), "d": (0, 1)}
    )
    assert certify_realization(square, convex).passed
    dented = Realization.from_entries(
        {"a": (0, 0), "b": (1, 0), "c": (1, 1), "d": (Fraction(3, 4), Fraction(1, 4))}
    )
    report = certify_realization(square, dented)
    assert not report.passed


# --- convex position ----------------------------------------------------------

def test_cube_vertices_are_all_in_convex_position():
    points = [
        tuple(Fraction(b) for b in (x, y, z, w))
        for x in (0, 1) for y in (0, 1) for z in (0, 1) for w in (0, 1)
    ]
    assert convex_position(points) == [True] * 16


def test_centroid_is_not_in_convex_position():
    points = [
        (0, 0, 0, 0),
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
    ]
    centroid = tuple(Fraction(1, 5) for _ in range(4))
    frac_points = [tuple(Fraction(x) for x in p) for p in points]
    flags = convex_position(frac_points + [centroid])
    assert flags == [True] * 5 + [False]


def test_convex_position_of_the_refined_fan_rays(refined):
    points = [tuple(Fraction(x) for x in ray.vector) for ray in refined.rays]
    flags = convex_position(points)
    by_label = {ray.label: flag for ray, flag in zip(refined.rays, flags)}
    # c4 = (d1 + d2 + d3) / 3 is inside the hull of the other rays
    assert by_label == {
        label: label != "c4" for label in by_label
    }


def test_convex_position_needs_enough_points():
    with pytest.raises(ValueError):
        convex_position([(Fraction(0), Fraction(0))])


def test_passing_realizations_have_all_vertices_in_convex_position(
    simplex_boundary, cross_polytope_boundary
):
    for complex_, realization in (simplex_boundary, cross_polytope_boundary):
        assert certify_realization(complex_, realization).passed
        points = [realization.coords[v] for v in complex_.vertex_labels]
        assert all(convex_position(points))
