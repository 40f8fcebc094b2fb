"""Positive-direction polytopality checking.

`certify_realization` verifies that given rational coordinates realize a
simplicial complex as the boundary complex of a simplicial convex polytope:
every facet must span a supporting hyperplane with all remaining vertices
strictly on one side, and no other vertex subset of facet size may span one.
A passing certificate proves the complex polytopal; a failing one only
rejects this particular coordinate assignment and proves nothing about the
complex.  All side tests are exact rational sign tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Mapping, Sequence

from .complexes import SimplicialComplex
from .errors import DegenerateFacet, DimensionMismatch, MissingCoordinates
from .feasibility import Constraint, find_solution
from .linalg import RatVec, facet_normal


@dataclass(frozen=True)
class Realization:
    """Candidate rational coordinates for the vertices of a complex."""

    coords: Mapping[str, RatVec]

    def __post_init__(self):
        dims = {len(v) for v in self.coords.values()}
        if len(dims) > 1:
            raise DimensionMismatch(f"mixed coordinate dimensions {sorted(dims)}")

    @classmethod
    def from_entries(cls, entries: Mapping[str, Sequence]) -> "Realization":
        return cls(
            {
                label: tuple(Fraction(x) for x in vec)
                for label, vec in entries.items()
            }
        )

    @property
    def dim(self) -> int:
        return len(next(iter(self.coords.values())))


@dataclass(frozen=True)
class FacetViolation:
    facet: tuple[str, ...]
    reason: str
    vertex: str | None = None


@dataclass(frozen=True)
class RealizationReport:
    """Outcome of the boundary-complex certificate.

    ``passed`` means this realization is a certified convex realization.
    ``first_violation`` carries a concrete witness on failure: either a
    facet whose hyperplane has a vertex on the wrong side (or on it), or a
    non-facet vertex subset that spans a supporting hyperplane.  The report
    deliberately says nothing about other realizations of the same complex.
    """

    passed: bool
    facets_checked: int
    non_facets_checked: int
    first_violation: FacetViolation | None


def _hyperplane(points: Sequence[RatVec]) -> tuple[tuple[Fraction, ...], Fraction] | None:
    """Affine hyperplane a.x == b through d points in dimension d.

    Lifts each point to (p, 1), rescales every lifted row by a positive
    integer (which only scales the normal), and takes the generalized cross
    product: the result (a, c) satisfies a.p + c == 0 for every input point,
    so b = -c.  Returns None when the points are affinely dependent.
    """
    d = len(points)
    lifted = []
    for p in points:
        row = tuple(p) + (Fraction(1),)
        scale = lcm(*(x.denominator for x in row))
        lifted.append(tuple(int(x * scale) for x in row))
    normal = facet_normal(lifted)
    a = tuple(Fraction(x) for x in normal[:d])
    b = -Fraction(normal[d])
    if all(x == 0 for x in a):
        return None
    return a, b


def certify_realization(c: SimplicialComplex, r: Realization) -> RealizationReport:
    """Exact boundary-complex certificate for a complex plus coordinates.

    Checks (a) every facet spans a hyperplane with all non-facet vertices
    strictly on one side, and (b) no other vertex subset of facet size does;
    together these say the complex is exactly the boundary complex of the
    simplicial polytope conv(vertices).  Raises DegenerateFacet when a facet's
    vertices are affinely dependent and MissingCoordinates when the
    realization does not cover all vertices.
    """
    missing = [v for v in c.vertex_labels if v not in r.coords]
    if missing:
        raise MissingCoordinates(f"realization lacks coordinates for {missing}")
    d = r.dim
    if c.dim + 1 != d:
        raise DimensionMismatch(
            f"facets of size {c.dim + 1} cannot span hyperplanes in dimension {d}"
        )

    facet_sets = set(c.facet_label_sets())
    coords = {v: r.coords[v] for v in c.vertex_labels}

    def side_profile(subset: frozenset[str]):
        plane = _hyperplane([coords[v] for v in sorted(subset)])
        if plane is None:
            return None
        a, b = plane
        pos = neg = zero_vertex = None
        for v in c.vertex_labels:
            if v in subset:
                continue
            s = sum(ai * xi for ai, xi in zip(a, coords[v])) - b
            if s > 0:
                pos = v if pos is None else pos
            elif s < 0:
                neg = v if neg is None else neg
            else:
                zero_vertex = v if zero_vertex is None else zero_vertex
        return pos, neg, zero_vertex

    for facet in sorted(facet_sets, key=sorted):
        profile = side_profile(facet)
        if profile is None:
            raise DegenerateFacet(f"facet {sorted(facet)} is affinely dependent")
        pos, neg, zero_vertex = profile
        if zero_vertex is not None:
            return RealizationReport(
                False,
                len(facet_sets),
                0,
                FacetViolation(tuple(sorted(facet)), "vertex on the facet hyperplane", zero_vertex),
            )
        if pos is not None and neg is not None:
            return RealizationReport(
                False,
                len(facet_sets),
                0,
                FacetViolation(
                    tuple(sorted(facet)), "vertices on both sides of the facet hyperplane", pos
                ),
            )

    # No vertex subset outside the complex may span a supporting hyperplane,
    # otherwise conv(vertices) has a facet the complex does not list.
    non_facets_checked = 0
    for subset in combinations(sorted(c.vertex_labels), d):
        fs = frozenset(subset)
        if fs in facet_sets:
            continue
        non_facets_checked += 1
        profile = side_profile(fs)
        if profile is None:
            continue
        pos, neg, zero_vertex = profile
        if zero_vertex is None and (pos is None or neg is None):
            return RealizationReport(
                False,
                len(facet_sets),
                non_facets_checked,
                FacetViolation(
                    tuple(sorted(fs)), "non-facet subset spans a supporting hyperplane", None
                ),
            )
    return RealizationReport(True, len(facet_sets), non_facets_checked, None)


def convex_position(points: Sequence[RatVec]) -> list[bool]:
    """Flag each point that is strictly separable from all the others.

    Separability of point i: some hyperplane a.x = b has a.p_i > b and
    a.p_j < b for every other j; decided exactly by Fourier-Motzkin in the
    homogeneous variables (a, b).  A flagged point is a vertex of the convex
    hull of the set.
    """
    if not points:
        return []
    d = len(points[0])
    if any(len(p) != d for p in points):
        raise DimensionMismatch("points have mixed dimensions")
    if len(points) < d + 1:
        raise ValueError(f"need at least {d + 1} points in dimension {d}")
    flags = []
    for i, p in enumerate(points):
        constraints = [Constraint(tuple(p) + (Fraction(-1),), True)]
        for j, q in enumerate(points):
            if j != i:
                constraints.append(
                    Constraint(tuple(-x for x in q) + (Fraction(1),), True)
                )
        flags.append(find_solution(constraints, d + 1) is not None)
    return flags
