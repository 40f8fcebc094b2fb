from fractions import Fraction

import pytest

from fankit.barnette import CONES, EXPECTED_CONE_DETERMINANTS, SUBDIVISION_POINTS
from fankit.errors import (
    DimensionMismatch,
    NonGenericWitness,
    NotContained,
    UnpairedFacet,
)
from fankit.fan import (
    Fan,
    coefficients,
    cone_meets_open_orthant,
    contains,
    default_witness,
    facet_pairing,
    is_generic_witness,
    minimal_face,
    open_orthant_certificate,
    opposite_sides,
    smoothness_report,
    verify_completeness,
)

SIGMA = {f"sigma{i + 1}": i for i in range(19)}


def labels_of(fan, indices):
    return {fan.rays[i].label for i in indices}


# --- construction -----------------------------------------------------------

def test_rejects_non_primitive_ray():
    with pytest.raises(ValueError, match="primitive"):
        Fan.from_labels(2, [("a", (2, 0)), ("b", (0, 1))], [("a", "b")])


def test_rejects_duplicate_labels_and_vectors():
    with pytest.raises(ValueError):
        Fan.from_labels(2, [("a", (1, 0)), ("a", (0, 1))], [("a", "a")])
    with pytest.raises(ValueError):
        Fan.from_labels(2, [("a", (1, 0)), ("b", (1, 0))], [("a", "b")])


def test_rejects_degenerate_cone():
    with pytest.raises(ValueError, match="degenerate"):
        Fan.from_labels(
            2, [("a", (1, 0)), ("b", (-1, 0))], [("a", "b")]
        )


def test_rejects_lower_dimensional_cone():
    with pytest.raises(ValueError, match="full-dimensional"):
        Fan.from_labels(2, [("a", (1, 0)), ("b", (0, 1))], [("a",)])


# --- membership -------------------------------------------------------------

def test_all_ones_is_interior_to_the_orthant_cone(delta):
    assert contains(delta, SIGMA["sigma1"], (1, 1, 1, 1), "interior")


def test_all_ones_is_outside_sigma2(delta):
    assert not contains(delta, SIGMA["sigma2"], (1, 1, 1, 1), "closed")


def test_c1_sits_on_a_three_face_of_sigma13(delta):
    c1 = SUBDIVISION_POINTS["c1"]
    assert contains(delta, SIGMA["sigma13"], c1, "closed")
    assert not contains(delta, SIGMA["sigma13"], c1, "interior")
    face = minimal_face(delta, SIGMA["sigma13"], c1)
    assert labels_of(delta, face) == {"e1", "d3", "d4"}


def test_minimal_face_of_an_interior_point(delta):
    face = minimal_face(delta, SIGMA["sigma1"], (1, 1, 1, 1))
    assert labels_of(delta, face) == {"e1", "e2", "e3", "e4"}
    c2 = SUBDIVISION_POINTS["c2"]
    face = minimal_face(delta, SIGMA["sigma17"], c2)
    assert labels_of(delta, face) == {"d3", "d2", "e3", "d4"}


def test_minimal_face_raises_outside(delta):
    with pytest.raises(NotContained):
        minimal_face(delta, SIGMA["sigma1"], (-1, 0, 0, 0))


def test_membership_dimension_check(delta):
    with pytest.raises(DimensionMismatch):
        contains(delta, 0, (1, 1, 1), "closed")


def test_coefficients_reconstruct(delta):
    point = (3, -2, 5, 1)
    lams = coefficients(delta, SIGMA["sigma18"], point)
    cols = delta.cone_vectors(SIGMA["sigma18"])
    rebuilt = tuple(sum(l * c[i] for l, c in zip(lams, cols)) for i in range(4))
    assert rebuilt == tuple(Fraction(x) for x in point)


# --- facet pairing ----------------------------------------------------------

def test_facet_pairing_counts(delta, refined):
    pairing = facet_pairing(delta)
    assert len(pairing) == 38
    assert all(len(v) == 2 for v in pairing.values())
    # ridge-facet incidence count: each 4-cone contributes 4 facets
    assert sum(len(v) for v in pairing.values()) == 4 * 19
    refined_pairing = facet_pairing(refined)
    assert len(refined_pairing) == 110
    assert sum(len(v) for v in refined_pairing.values()) == 4 * 55


def test_facet_d1_e3_e4_pairs_sigma2_and_sigma6(delta):
    facet = frozenset(delta.ray_index(l) for l in ("d1", "e3", "e4"))
    incidences = facet_pairing(delta)[facet]
    cones = {ci for ci, _ in incidences}
    assert cones == {SIGMA["sigma2"], SIGMA["sigma6"]}
    assert {delta.rays[r].label for _, r in incidences} == {"e2", "d2"}


def test_deleting_a_cone_unpairs_its_facets(delta):
    truncated = Fan(delta.ambient_dim, delta.rays, delta.max_cones[1:])
    with pytest.raises(UnpairedFacet) as err:
        facet_pairing(truncated)
    assert len(err.value.facets) == 4


def test_opposite_sides_on_a_paired_facet(delta):
    facet = frozenset(delta.ray_index(l) for l in ("d1", "e3", "e4"))
    assert opposite_sides(delta, facet, (SIGMA["sigma2"], SIGMA["sigma6"]))


def test_opposite_sides_false_for_a_doubled_cone(delta):
    doubled = Fan(delta.ambient_dim, delta.rays, delta.max_cones + (delta.max_cones[0],))
    facet = frozenset(delta.ray_index(l) for l in ("e1", "e2", "e3"))
    assert not opposite_sides(doubled, facet, (0, len(doubled.max_cones) - 1))


# --- completeness -----------------------------------------------------------

def test_barnette_fan_is_complete(delta):
    report = verify_completeness(delta, (1, 1, 1, 1))
    assert report.verdict
    assert report.facet_count == 38
    assert report.all_facets_paired and report.all_pairs_opposite
    assert report.witness_multiplicity == 1


def test_refined_fan_is_complete(refined):
    report = verify_completeness(refined, (1, 1, 1, 1))
    assert report.verdict
    assert report.facet_count == 110


def test_completeness_fails_without_sigma1(delta):
    truncated = Fan(delta.ambient_dim, delta.rays, delta.max_cones[1:])
    report = verify_completeness(truncated, (1, 1, 1, 1))
    assert not report.verdict
    assert not report.all_facets_paired
    assert report.witness_multiplicity == 0
    assert report.unpaired_facets


def test_non_generic_witness_rejected(delta):
    # e1 + e2 lies on the boundary of the positive-orthant cone
    with pytest.raises(NonGenericWitness):
        verify_completeness(delta, (1, 1, 0, 0))


def test_default_witness_falls_back_when_all_ones_is_non_generic(delta):
    # shear so that the image of (1, 1, 1, 0), a boundary point, is (1, 1, 1, 1)
    shear = lambda v: (v[0], v[1], v[2], v[3] + v[2])
    sheared = Fan.from_labels(
        4,
        [(r.label, shear(r.vector)) for r in delta.rays],
        [delta.cone_labels(i) for i in range(len(delta.max_cones))],
    )
    assert not is_generic_witness(sheared, (1, 1, 1, 1))
    witness = default_witness(sheared)
    assert witness != (1, 1, 1, 1)
    report = verify_completeness(sheared)
    assert report.verdict


# --- smoothness -------------------------------------------------------------

def test_smoothness_report_matches_the_table(delta):
    report = smoothness_report(delta)
    assert report.determinants == EXPECTED_CONE_DETERMINANTS
    assert not report.smooth
    singular = {CONES[i] for i in report.singular_cones}
    assert singular == {
        ("e1", "d3", "e3", "d4"),
        ("e1", "d1", "d3", "d4"),
        ("d3", "d2", "e3", "d4"),
        ("d1", "d2", "d3", "e4"),
        ("d1", "d2", "d3", "d4"),
    }
    singular_dets = {
        CONES[i]: report.determinants[i] for i in report.singular_cones
    }
    assert sorted(singular_dets.values()) == [-9, 2, 2, 3, 3]


def test_refined_fan_is_smooth(refined):
    report = smoothness_report(refined)
    assert report.smooth
    assert all(abs(d) == 1 for d in report.determinants)


def test_single_orthant_cone_fan_is_smooth():
    fan = Fan.from_labels(
        4,
        [(f"e{i}", tuple(1 if j == i else 0 for j in range(4))) for i in range(4)],
        [tuple(f"e{i}" for i in range(4))],
    )
    assert smoothness_report(fan).smooth


# --- open orthant -----------------------------------------------------------

def test_only_the_first_cone_meets_the_open_orthant(delta):
    flags = [cone_meets_open_orthant(delta, i) for i in range(19)]
    assert flags == [True] + [False] * 18


def test_open_orthant_certificate_is_sound(delta):
    lams = open_orthant_certificate(delta, SIGMA["sigma1"])
    assert lams is not None and all(x >= 0 for x in lams)
    cols = delta.cone_vectors(SIGMA["sigma1"])
    combo = [sum(l * c[i] for l, c in zip(lams, cols)) for i in range(4)]
    assert all(x > 0 for x in combo)
    assert open_orthant_certificate(delta, SIGMA["sigma18"]) is None
