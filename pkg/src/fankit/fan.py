"""Simplicial rational fans and their exact verification predicates.

A fan is stored as primitive integer ray vectors plus ordered maximal cones;
the ray order inside a cone is significant because determinant signs are
reported in that order.  Completeness is verified by the covering-degree
argument: every facet (ridge) of a maximal cone must be shared by exactly two
maximal cones lying on opposite sides of its hyperplane, and a generic
witness point must be interior to exactly one maximal cone.  Everything is
exact; there are no floating-point code paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    DegenerateFacet,
    DimensionMismatch,
    NonGenericWitness,
    NotContained,
    UnpairedFacet,
)
from .feasibility import Constraint, find_solution
from .linalg import (
    IntVec,
    RatVec,
    cone_inequalities,
    determinant,
    dot,
    facet_normal,
    make_primitive,
    solve_coefficients,
)


@dataclass(frozen=True)
class Ray:
    """A labeled primitive lattice direction."""

    label: str
    vector: IntVec


@dataclass(frozen=True)
class SimplicialCone:
    """Ordered ray indices spanning a simplicial cone; order fixes the determinant sign."""

    ray_indices: tuple[int, ...]


@dataclass(frozen=True)
class Fan:
    """A simplicial fan given by its rays and full-dimensional maximal cones.

    Construction validates that rays are primitive, nonzero and pairwise
    distinct (as labels and as vectors) and that every maximal cone is
    full-dimensional with linearly independent rays.  Because the cones are
    simplicial and identified by ray subsets, any two cones automatically
    intersect in a common abstract face; whether they also intersect
    geometrically only along it is what `verify_completeness` certifies.
    """

    ambient_dim: int
    rays: tuple[Ray, ...]
    max_cones: tuple[SimplicialCone, ...]

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        labels = [r.label for r in self.rays]
        if len(set(labels)) != len(labels):
            raise ValueError("ray labels are not unique")
        vectors = [r.vector for r in self.rays]
        if len(set(vectors)) != len(vectors):
            raise ValueError("ray vectors are not pairwise distinct")
        for r in self.rays:
            if len(r.vector) != self.ambient_dim:
                raise DimensionMismatch(f"ray {r.label} has dimension {len(r.vector)}")
            if r.vector != make_primitive(r.vector):
                raise ValueError(f"ray {r.label} is not primitive")
        for cone in self.max_cones:
            if len(cone.ray_indices) != self.ambient_dim:
                raise ValueError(f"cone {cone.ray_indices} is not full-dimensional")
            if len(set(cone.ray_indices)) != len(cone.ray_indices):
                raise ValueError(f"cone {cone.ray_indices} repeats a ray")
            if not all(0 <= i < len(self.rays) for i in cone.ray_indices):
                raise ValueError(f"cone {cone.ray_indices} references a missing ray")
        for i, d in enumerate(self.cone_determinants):
            if d == 0:
                raise ValueError(f"cone #{i} {self.cone_labels(i)} is degenerate")

    @classmethod
    def from_labels(
        cls,
        ambient_dim: int,
        rays: Iterable[tuple[str, Sequence[int]]] | Mapping[str, Sequence[int]],
        cones: Iterable[Sequence[str]],
    ) -> "Fan":
        """Build a fan from (label, vector) pairs and cones given as label tuples."""
        if isinstance(rays, Mapping):
            rays = rays.items()
        ray_objs = tuple(Ray(label, tuple(int(x) for x in vec)) for label, vec in rays)
        index = {r.label: i for i, r in enumerate(ray_objs)}
        cone_objs = []
        for labels in cones:
            try:
                cone_objs.append(SimplicialCone(tuple(index[l] for l in labels)))
            except KeyError as e:
                raise ValueError(f"cone references unknown ray label {e.args[0]!r}") from None
        return cls(ambient_dim, ray_objs, tuple(cone_objs))

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {r.label: i for i, r in enumerate(self.rays)}

    @cached_property
    def cone_determinants(self) -> tuple[int, ...]:
        return tuple(
            determinant([self.rays[i].vector for i in cone.ray_indices])
            for cone in self.max_cones
        )

    @cached_property
    def cone_normals(self) -> tuple[tuple[IntVec, ...], ...]:
        """Per cone, the integer facet inequalities from `cone_inequalities`."""
        return tuple(
            cone_inequalities([self.rays[i].vector for i in cone.ray_indices])
            for cone in self.max_cones
        )

    def ray_index(self, label: str) -> int:
        try:
            return self.label_index[label]
        except KeyError:
            raise ValueError(f"no ray labeled {label!r}") from None

    def ray_vector(self, label: str) -> IntVec:
        return self.rays[self.ray_index(label)].vector

    def cone_labels(self, cone_index: int) -> tuple[str, ...]:
        return tuple(self.rays[i].label for i in self.max_cones[cone_index].ray_indices)

    def cone_vectors(self, cone_index: int) -> tuple[IntVec, ...]:
        return tuple(self.rays[i].vector for i in self.max_cones[cone_index].ray_indices)

    def find_cone(self, labels: Iterable[str]) -> int | None:
        """Index of the maximal cone with exactly this ray-label set, if any."""
        want = frozenset(labels)
        for i in range(len(self.max_cones)):
            if frozenset(self.cone_labels(i)) == want:
                return i
        return None


@dataclass(frozen=True)
class CompletenessReport:
    """Outcome of the facet-pairing + covering-degree completeness check."""

    facet_count: int
    all_facets_paired: bool
    all_pairs_opposite: bool
    witness_multiplicity: int
    verdict: bool
    witness: IntVec
    unpaired_facets: tuple[tuple[str, ...], ...] = ()
    non_opposite_facets: tuple[tuple[str, ...], ...] = ()


@dataclass(frozen=True)
class SmoothnessReport:
    """Per-cone determinants (in listed ray order) and the overall flag."""

    determinants: tuple[int, ...]
    smooth: bool
    singular_cones: tuple[int, ...]


def coefficients(fan: Fan, cone_index: int, point: Sequence[int]) -> RatVec:
    """Exact expansion coefficients of ``point`` over the cone's rays."""
    if len(point) != fan.ambient_dim:
        raise DimensionMismatch(f"point has dimension {len(point)}, fan {fan.ambient_dim}")
    return solve_coefficients(fan.cone_vectors(cone_index), point)


def contains(fan: Fan, cone_index: int, point: Sequence[int], mode: str = "closed") -> bool:
    """Membership of a lattice point in a maximal cone.

    mode "closed" requires all expansion coefficients >= 0, "interior"
    requires all > 0.
    """
    if mode not in ("closed", "interior"):
        raise ValueError(f"unknown mode {mode!r}")
    if len(point) != fan.ambient_dim:
        raise DimensionMismatch(f"point has dimension {len(point)}, fan {fan.ambient_dim}")
    values = [dot(row, point) for row in fan.cone_normals[cone_index]]
    if mode == "closed":
        return all(v >= 0 for v in values)
    return all(v > 0 for v in values)


def minimal_face(fan: Fan, cone_index: int, point: Sequence[int]) -> frozenset[int]:
    """Ray indices of the unique face containing ``point`` in its relative interior.

    These are the rays with strictly positive expansion coefficient; raises
    NotContained when the point is outside the closed cone.
    """
    if len(point) != fan.ambient_dim:
        raise DimensionMismatch(f"point has dimension {len(point)}, fan {fan.ambient_dim}")
    cone = fan.max_cones[cone_index]
    values = [dot(row, point) for row in fan.cone_normals[cone_index]]
    if any(v < 0 for v in values):
        raise NotContained(f"point {tuple(point)} is not in cone #{cone_index}")
    return frozenset(i for i, v in zip(cone.ray_indices, values) if v > 0)


def facet_pairing(
    fan: Fan, strict: bool = True
) -> dict[frozenset[int], tuple[tuple[int, int], ...]]:
    """Map each facet (ray-index set of size n-1) to its incident maximal cones.

    Values are ``(cone_index, opposite_ray_index)`` pairs.  With strict=True
    (the default) raises UnpairedFacet if any facet is not shared by exactly
    two maximal cones; with strict=False the caller inspects the incidences.
    """
    incidences: dict[frozenset[int], list[tuple[int, int]]] = {}
    for ci, cone in enumerate(fan.max_cones):
        for ray in cone.ray_indices:
            facet = frozenset(cone.ray_indices) - {ray}
            incidences.setdefault(facet, []).append((ci, ray))
    result = {f: tuple(v) for f, v in incidences.items()}
    if strict:
        bad = [f for f, v in result.items() if len(v) != 2]
        if bad:
            raise UnpairedFacet(
                tuple(sorted(fan.rays[i].label for i in f)) for f in sorted(bad, key=sorted)
            )
    return result


def opposite_sides(
    fan: Fan, facet: frozenset[int], cone_pair: tuple[int, int]
) -> bool:
    """True iff the two cones lie strictly on opposite sides of the facet hyperplane.

    The test computes an exact integer normal to the facet's span and
    compares the signs of its products with the two opposite rays.
    """
    vectors = [fan.rays[i].vector for i in sorted(facet)]
    if len(vectors) != fan.ambient_dim - 1:
        raise ValueError(f"facet has {len(vectors)} rays, expected {fan.ambient_dim - 1}")
    normal = facet_normal(vectors)
    if all(x == 0 for x in normal):
        raise DegenerateFacet(f"facet rays {sorted(facet)} are linearly dependent")
    opposite = []
    for ci in cone_pair:
        extra = set(fan.max_cones[ci].ray_indices) - facet
        if len(extra) != 1:
            raise ValueError(f"facet is not a facet of cone #{ci}")
        opposite.append(fan.rays[extra.pop()].vector)
    s0, s1 = (dot(normal, v) for v in opposite)
    return s0 != 0 and s1 != 0 and (s0 > 0) != (s1 > 0)


def _interior_profile(fan: Fan, point: Sequence[int]) -> tuple[int, bool]:
    """(number of cones with point strictly interior, point on some cone boundary)."""
    multiplicity = 0
    on_boundary = False
    for normals in fan.cone_normals:
        values = [dot(row, point) for row in normals]
        if all(v > 0 for v in values):
            multiplicity += 1
        elif all(v >= 0 for v in values):
            on_boundary = True
    return multiplicity, on_boundary


def is_generic_witness(fan: Fan, point: Sequence[int]) -> bool:
    """A witness is generic when it lies on the boundary of no maximal cone.

    It may still lie on the extension of a facet hyperplane beyond the cone;
    that does not disturb the covering-degree count.
    """
    return not _interior_profile(fan, point)[1]


def default_witness(fan: Fan) -> IntVec:
    """First generic point on the moment curve (1, k, k^2, ...), k = 1, 2, ...

    k = 1 gives the all-ones point.  Each cone boundary lies in finitely many
    hyperplanes and each hyperplane meets the moment curve in fewer than
    ambient_dim values of k, so the search terminates quickly.
    """
    n = fan.ambient_dim
    max_tries = max(2 + len(fan.max_cones) * n * n, 16)
    for k in range(1, max_tries):
        w = tuple(k**i for i in range(n))
        if is_generic_witness(fan, w):
            return w
    raise NonGenericWitness("no generic witness found on the moment curve")


def verify_completeness(fan: Fan, witness: Sequence[int] | None = None) -> CompletenessReport:
    """Certify that the fan's maximal cones cover all of R^n exactly once.

    Criterion: every facet is shared by exactly two maximal cones, every such
    pair lies on opposite sides of the facet hyperplane, and a generic
    witness point is interior to exactly one maximal cone.  Together these
    force the covering degree to be 1 everywhere.
    """
    if witness is None:
        witness = default_witness(fan)
    else:
        witness = tuple(int(x) for x in witness)
        if len(witness) != fan.ambient_dim:
            raise DimensionMismatch(f"witness has dimension {len(witness)}")
        if not is_generic_witness(fan, witness):
            raise NonGenericWitness(f"witness {witness} lies on a maximal cone's boundary")

    pairing = facet_pairing(fan, strict=False)
    unpaired = sorted((f for f, inc in pairing.items() if len(inc) != 2), key=sorted)
    non_opposite = []
    for facet, incidences in pairing.items():
        if len(incidences) != 2:
            continue
        pair = (incidences[0][0], incidences[1][0])
        if not opposite_sides(fan, facet, pair):
            non_opposite.append(facet)
    non_opposite.sort(key=sorted)

    multiplicity, _ = _interior_profile(fan, witness)
    all_paired = not unpaired
    all_opposite = not non_opposite

    def label_sets(facets):
        return tuple(tuple(sorted(fan.rays[i].label for i in f)) for f in facets)

    return CompletenessReport(
        facet_count=len(pairing),
        all_facets_paired=all_paired,
        all_pairs_opposite=all_opposite,
        witness_multiplicity=multiplicity,
        verdict=all_paired and all_opposite and multiplicity == 1,
        witness=witness,
        unpaired_facets=label_sets(unpaired),
        non_opposite_facets=label_sets(non_opposite),
    )


def smoothness_report(fan: Fan) -> SmoothnessReport:
    """Determinant of each maximal cone in its listed ray order; smooth iff all are +-1."""
    dets = fan.cone_determinants
    singular = tuple(i for i, d in enumerate(dets) if abs(d) != 1)
    return SmoothnessReport(determinants=dets, smooth=not singular, singular_cones=singular)


def open_orthant_certificate(fan: Fan, cone_index: int) -> RatVec | None:
    """Nonnegative combination of the cone's rays with all coordinates positive.

    Returns exact rational coefficients when such a combination exists, else
    None.  Feasibility is decided by Fourier-Motzkin elimination on the
    coefficient variables.
    """
    vectors = fan.cone_vectors(cone_index)
    k = len(vectors)
    constraints = []
    for i in range(k):
        constraints.append(Constraint(tuple(1 if j == i else 0 for j in range(k)), False))
    for coord in range(fan.ambient_dim):
        constraints.append(Constraint(tuple(v[coord] for v in vectors), True))
    return find_solution(constraints, k)


def cone_meets_open_orthant(fan: Fan, cone_index: int) -> bool:
    """True iff the cone contains a point with all coordinates strictly positive."""
    return open_orthant_certificate(fan, cone_index) is not None
