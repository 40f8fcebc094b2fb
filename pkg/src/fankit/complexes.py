"""Abstract simplicial complexes derived from fans.

Star, link, suspension, stellar subdivision, f-vectors, and the
pseudomanifold sanity checks, plus the combinatorial fact checker used in
the non-polytopality argument for the desingularized Barnette complex.
Complexes are stored as vertex labels plus facets (index sets); all
operations are pure.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from . import barnette
from .errors import FaceNotPresent, MissingLabel
from .fan import Fan


@dataclass(frozen=True)
class SimplicialComplex:
    """A pure simplicial complex given by its facets.

    Invariants enforced at construction: all facets have the same size, no
    facet repeats, and every vertex appears in at least one facet.  (Equal
    size plus distinctness already rules out one facet containing another.)
    """

    vertex_labels: tuple[str, ...]
    facets: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(set(self.vertex_labels)) != len(self.vertex_labels):
            raise ValueError("vertex labels are not unique")
        if not self.facets:
            raise ValueError("a complex needs at least one facet")
        sizes = {len(f) for f in self.facets}
        if len(sizes) != 1:
            raise ValueError(f"facets of mixed sizes {sorted(sizes)}: complex is not pure")
        if len(set(self.facets)) != len(self.facets):
            raise ValueError("duplicate facets")
        used = set().union(*self.facets)
        if used != set(range(len(self.vertex_labels))):
            raise ValueError("every vertex must appear in some facet")

    @classmethod
    def from_label_facets(cls, facets: Iterable[Iterable[str]]) -> "SimplicialComplex":
        """Build a complex from facets given as label collections.

        Vertex order is first-appearance order, which keeps constructions
        deterministic.
        """
        facet_lists = [tuple(f) for f in facets]
        labels: list[str] = []
        index: dict[str, int] = {}
        for f in facet_lists:
            for v in f:
                if v not in index:
                    index[v] = len(labels)
                    labels.append(v)
        return cls(
            tuple(labels),
            tuple(frozenset(index[v] for v in f) for f in facet_lists),
        )

    @property
    def dim(self) -> int:
        return len(self.facets[0]) - 1

    def facet_label_sets(self) -> tuple[frozenset[str], ...]:
        return tuple(
            frozenset(self.vertex_labels[i] for i in f) for f in self.facets
        )

    def label_set(self, face: Iterable[int]) -> frozenset[str]:
        return frozenset(self.vertex_labels[i] for i in face)

    def face_indices(self, labels: Iterable[str]) -> frozenset[int]:
        index = {v: i for i, v in enumerate(self.vertex_labels)}
        missing = [v for v in labels if v not in index]
        if missing:
            raise MissingLabel(f"unknown vertex label(s) {missing}")
        return frozenset(index[v] for v in labels)

    def is_face(self, face: frozenset[int]) -> bool:
        return any(face <= f for f in self.facets)


def underlying_complex(fan: Fan) -> SimplicialComplex:
    """The abstract complex with the fan's rays as vertices and max cones as facets."""
    return SimplicialComplex(
        tuple(r.label for r in fan.rays),
        tuple(frozenset(c.ray_indices) for c in fan.max_cones),
    )


def star(c: SimplicialComplex, face_labels: Iterable[str]) -> SimplicialComplex:
    """Subcomplex generated by all facets containing the given face.

    The empty face yields the whole complex.  Raises FaceNotPresent when the
    labels do not form a simplex of the complex.
    """
    face = c.face_indices(face_labels)
    if face and not c.is_face(face):
        raise FaceNotPresent(f"{sorted(c.label_set(face))} is not a face")
    kept = [f for f in c.facets if face <= f]
    return SimplicialComplex.from_label_facets(
        [sorted(c.label_set(f)) for f in kept]
    )


def link(c: SimplicialComplex, face_labels: Iterable[str]) -> SimplicialComplex:
    """Faces of the star disjoint from the given face.

    For an edge of a simplicial 3-sphere the link is a cycle of edges.
    """
    face = c.face_indices(face_labels)
    if not face:
        raise FaceNotPresent("the link of the empty face is not defined here")
    if not c.is_face(face):
        raise FaceNotPresent(f"{sorted(c.label_set(face))} is not a face")
    return SimplicialComplex.from_label_facets(
        [sorted(c.label_set(f - face)) for f in c.facets if face <= f]
    )


def suspension(c: SimplicialComplex, north: str = "N", south: str = "S") -> SimplicialComplex:
    """Join the complex with two new apex vertices: facets double, dim rises by one."""
    if north in c.vertex_labels or south in c.vertex_labels:
        raise ValueError("pole labels collide with existing vertices")
    facets = [sorted(c.label_set(f)) for f in c.facets]
    return SimplicialComplex.from_label_facets(
        [f + [north] for f in facets] + [f + [south] for f in facets]
    )


def stellar_subdivide(
    c: SimplicialComplex, face_labels: Iterable[str], new_label: str
) -> SimplicialComplex:
    """Stellar subdivision of a complex at a face: combinatorial counterpart
    of subdividing a fan at a point interior to that face."""
    face = c.face_indices(face_labels)
    if not c.is_face(face):
        raise FaceNotPresent(f"{sorted(c.label_set(face))} is not a face")
    if new_label in c.vertex_labels:
        raise ValueError(f"vertex label {new_label!r} already in use")
    new_facets = []
    for f in c.facets:
        if not face <= f:
            new_facets.append(sorted(c.label_set(f)))
            continue
        for removed in sorted(face):
            replaced = sorted(c.label_set(f - {removed})) + [new_label]
            new_facets.append(replaced)
    return SimplicialComplex.from_label_facets(new_facets)


def f_vector(c: SimplicialComplex) -> tuple[int, ...]:
    """Exact face counts (f_0, ..., f_dim) by enumerating facet subsets."""
    faces: set[frozenset[int]] = set()
    for f in c.facets:
        members = sorted(f)
        for k in range(1, len(members) + 1):
            faces.update(frozenset(s) for s in combinations(members, k))
    counts = [0] * (c.dim + 1)
    for face in faces:
        counts[len(face) - 1] += 1
    return tuple(counts)


def euler_characteristic(c: SimplicialComplex) -> int:
    fv = f_vector(c)
    return sum((-1) ** i * n for i, n in enumerate(fv))


@dataclass(frozen=True)
class PseudomanifoldReport:
    """Necessary conditions for being a closed manifold-like sphere complex."""

    ridge_failures: tuple[tuple[tuple[str, ...], int], ...]
    connected: bool
    euler_characteristic: int
    expected_euler: int
    passed: bool


def pseudomanifold_check(c: SimplicialComplex) -> PseudomanifoldReport:
    """Ridge multiplicity 2, connected facet adjacency, and the sphere Euler count.

    These are necessary (not sufficient) conditions for the complex to be a
    simplicial sphere of its dimension; failures are reported, not raised.
    """
    ridge_count: Counter[frozenset[int]] = Counter()
    for f in c.facets:
        for v in f:
            ridge_count[f - {v}] += 1
    failures = tuple(
        (tuple(sorted(c.label_set(r))), n)
        for r, n in sorted(ridge_count.items(), key=lambda kv: sorted(kv[0]))
        if n != 2
    )

    # facet adjacency via shared ridges
    adjacency: dict[int, set[int]] = {i: set() for i in range(len(c.facets))}
    by_ridge: dict[frozenset[int], list[int]] = {}
    for i, f in enumerate(c.facets):
        for v in f:
            by_ridge.setdefault(f - {v}, []).append(i)
    for members in by_ridge.values():
        for a in members:
            for b in members:
                if a != b:
                    adjacency[a].add(b)
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = frontier.pop()
        for b in adjacency[nxt]:
            if b not in seen:
                seen.add(b)
                frontier.append(b)
    connected = len(seen) == len(c.facets)

    chi = euler_characteristic(c)
    expected = 1 + (-1) ** c.dim
    return PseudomanifoldReport(
        ridge_failures=failures,
        connected=connected,
        euler_characteristic=chi,
        expected_euler=expected,
        passed=not failures and connected and chi == expected,
    )


@dataclass(frozen=True)
class ObstructionFact:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ObstructionReport:
    """Combinatorial facts feeding the non-polytopality argument.

    The verdict only asserts these facts; non-polytopality itself is a
    statement about all possible realizations and is not decided here.
    """

    facts: tuple[ObstructionFact, ...]
    verdict: bool
    computed_star: tuple[tuple[str, ...], ...]
    recorded_star_mismatch: tuple[tuple[str, ...], ...]


def _fmt(faces: Iterable[Iterable[str]]) -> str:
    return "; ".join(",".join(f) for f in faces)


def verify_barnette_obstruction(c: SimplicialComplex) -> ObstructionReport:
    """Check the combinatorial facts behind the desingularized complex's
    non-polytopality argument.

    Facts: (1) the facets d1e2e3e4 and d1d2e3e4 are present and share exactly
    the triangle d1e3e4; (2) c1 is a vertex of neither; (3) the star of the
    edge e1d3 has exactly six facets (the computed star is reported together
    with its difference from the recorded six-simplex list, which contains
    one simplex not incident to the edge); (4) the link of e1d3 is the
    hexagon d2-e3-c1-d1-e2-e4.  Raises MissingLabel when the complex does
    not carry the expected vertex labels.
    """
    needed = {"e1", "d3", "c1"} | barnette.OBSTRUCTION_FACET_A | barnette.OBSTRUCTION_FACET_B
    missing = sorted(needed - set(c.vertex_labels))
    if missing:
        raise MissingLabel(f"complex lacks vertex label(s) {missing}")

    facet_sets = set(c.facet_label_sets())
    a, b = barnette.OBSTRUCTION_FACET_A, barnette.OBSTRUCTION_FACET_B
    shared_ok = (
        a in facet_sets
        and b in facet_sets
        and a & b == barnette.OBSTRUCTION_SHARED_TRIANGLE
    )
    fact1 = ObstructionFact(
        "facets-share-triangle",
        shared_ok,
        f"{sorted(a)} and {sorted(b)} share exactly {sorted(a & b)}",
    )

    outside = barnette.OBSTRUCTION_OUTSIDE_VERTEX
    fact2 = ObstructionFact(
        "c1-not-a-vertex-of-either",
        outside not in a | b,
        f"{outside!r} is {'not ' if outside not in a | b else ''}a vertex of the pair",
    )

    edge = barnette.OBSTRUCTION_EDGE
    star_facets = sorted(
        tuple(sorted(s)) for s in star(c, edge).facet_label_sets()
    )
    computed = tuple(star_facets)
    computed_sets = {frozenset(f) for f in computed}
    recorded_sets = set(barnette.RECORDED_EDGE_STAR)
    mismatch = tuple(
        tuple(sorted(f)) for f in sorted(computed_sets ^ recorded_sets, key=sorted)
    )
    fact3 = ObstructionFact(
        "edge-star-has-six-facets",
        len(computed) == 6,
        f"computed star has {len(computed)} facets"
        + (f"; differs from the recorded list in: {_fmt(mismatch)}" if mismatch else ""),
    )

    link_complex = link(c, edge)
    link_edges = {frozenset(f) for f in link_complex.facet_label_sets()}
    expected_edges = {frozenset(e) for e in barnette.EXPECTED_EDGE_LINK_CYCLE}
    degree = Counter(v for e in link_edges for v in e)
    is_cycle = (
        link_edges == expected_edges
        and all(n == 2 for n in degree.values())
        and pseudomanifold_check(link_complex).connected
    )
    fact4 = ObstructionFact(
        "edge-link-is-the-expected-hexagon",
        is_cycle,
        f"link edges: {_fmt(sorted(tuple(sorted(e)) for e in link_edges))}",
    )

    facts = (fact1, fact2, fact3, fact4)
    return ObstructionReport(
        facts=facts,
        verdict=all(f.passed for f in facts),
        computed_star=computed,
        recorded_star_mismatch=mismatch,
    )
