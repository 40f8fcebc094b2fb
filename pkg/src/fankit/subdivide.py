"""Stellar subdivision of fans, the Barnette desingularization pipeline,
fan suspension, and the generator for the infinite fan family.

All operations return new Fan values; nothing is mutated.  Stellar
subdivision at a point p replaces, for the minimal face F containing p in
its relative interior, every maximal cone containing F: a cone F u G turns
into the cones (F minus one ray) u {p} u G.  The new ray takes the removed
ray's position inside each produced cone, which keeps determinant signs
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import barnette
from .errors import OutsideSupport, PointIsRay
from .fan import (
    Fan,
    Ray,
    SimplicialCone,
    contains,
    minimal_face,
    smoothness_report,
    verify_completeness,
)
from .linalg import IntVec, make_primitive, vec_add


@dataclass(frozen=True)
class SubdivisionStep:
    """Record of one stellar subdivision: what was added, removed, produced."""

    new_ray_label: str
    new_ray: IntVec
    affected_cones: tuple[tuple[str, ...], ...]
    produced_cones: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if not self.affected_cones or len(self.produced_cones) % len(self.affected_cones):
            raise ValueError("produced cone count must be a multiple of the affected count")


def stellar_subdivide(fan: Fan, point: Sequence[int], label: str) -> tuple[Fan, SubdivisionStep]:
    """Subdivide the fan at (the primitive representative of) ``point``.

    Every maximal cone containing the minimal face F of the point is
    replaced by len(F) cones in which the new ray substitutes one ray of F;
    produced cones are spliced in at the replaced cone's position, so the
    cone order stays deterministic.  Raises PointIsRay when the point lies
    on an existing ray and OutsideSupport when no maximal cone contains it.
    """
    p = make_primitive(tuple(int(x) for x in point))
    if label in fan.label_index:
        raise ValueError(f"ray label {label!r} already in use")
    for ray in fan.rays:
        if ray.vector == p:
            raise PointIsRay(f"{p} is the existing ray {ray.label!r}")

    face = None
    for ci in range(len(fan.max_cones)):
        if contains(fan, ci, p, "closed"):
            face = minimal_face(fan, ci, p)
            break
    if face is None:
        raise OutsideSupport(f"{p} is in no maximal cone")
    # A 1-dimensional minimal face would mean p is a ray multiple, which the
    # primitive check above already rejected.
    assert len(face) >= 2

    new_ray_index = len(fan.rays)
    new_cones: list[SimplicialCone] = []
    affected: list[tuple[str, ...]] = []
    produced: list[tuple[str, ...]] = []
    for ci, cone in enumerate(fan.max_cones):
        if not face <= set(cone.ray_indices):
            new_cones.append(cone)
            continue
        affected.append(fan.cone_labels(ci))
        for removed in cone.ray_indices:
            if removed not in face:
                continue
            indices = tuple(
                new_ray_index if i == removed else i for i in cone.ray_indices
            )
            new_cones.append(SimplicialCone(indices))
            produced.append(
                tuple(label if i == new_ray_index else fan.rays[i].label for i in indices)
            )

    refined = Fan(
        ambient_dim=fan.ambient_dim,
        rays=fan.rays + (Ray(label, p),),
        max_cones=tuple(new_cones),
    )
    step = SubdivisionStep(
        new_ray_label=label,
        new_ray=p,
        affected_cones=tuple(affected),
        produced_cones=tuple(produced),
    )
    return refined, step


def desingularize_barnette() -> tuple[Fan, list[SubdivisionStep]]:
    """Resolve the Barnette fan's five singular cones by ten stellar subdivisions.

    Applies the embedded subdivision points in their fixed order and returns
    the refined fan (18 rays, 55 maximal cones, all determinants +-1)
    together with the step log.  The pipeline re-derives the refined fan
    every time; only the inputs and the expected outcomes are shipped.
    """
    fan = barnette.barnette_fan()
    steps = []
    for label in barnette.SUBDIVISION_SEQUENCE:
        fan, step = stellar_subdivide(fan, barnette.SUBDIVISION_POINTS[label], label)
        steps.append(step)
    assert len(fan.rays) == 18 and len(fan.max_cones) == 55
    assert smoothness_report(fan).smooth
    assert verify_completeness(fan).verdict
    return fan, steps


def refines(fine: Fan, coarse: Fan) -> bool:
    """True iff every maximal cone of ``fine`` lies inside some maximal cone of ``coarse``.

    Containment is closed containment of all the fine cone's rays.  Both
    fans should already be verified complete; on complete fans this is the
    standard refinement relation.
    """
    if fine.ambient_dim != coarse.ambient_dim:
        return False
    for ci in range(len(fine.max_cones)):
        vectors = fine.cone_vectors(ci)
        if not any(
            all(contains(coarse, cj, v, "closed") for v in vectors)
            for cj in range(len(coarse.max_cones))
        ):
            return False
    return True


def suspend_fan(fan: Fan, north: str = "N", south: str = "S") -> Fan:
    """Complete fan in dimension n+1 whose underlying complex is the suspension.

    Old rays are embedded with last coordinate 0; two poles +-(0,..,0,1) are
    appended; every maximal cone splits into a north and a south copy.  The
    suspension of a complete fan is complete, and it is smooth iff the input
    is (each new determinant equals an old one up to sign).
    """
    for name in (north, south):
        if name in fan.label_index:
            raise ValueError(f"pole label {name!r} collides with an existing ray")
    rays = [Ray(r.label, r.vector + (0,)) for r in fan.rays]
    n_idx, s_idx = len(rays), len(rays) + 1
    pole = tuple([0] * fan.ambient_dim)
    rays.append(Ray(north, pole + (1,)))
    rays.append(Ray(south, pole + (-1,)))
    cones = []
    for cone in fan.max_cones:
        cones.append(SimplicialCone(cone.ray_indices + (n_idx,)))
    for cone in fan.max_cones:
        cones.append(SimplicialCone(cone.ray_indices + (s_idx,)))
    return Fan(fan.ambient_dim + 1, tuple(rays), tuple(cones))


def _family_candidates(fan: Fan) -> list[tuple[tuple[str, ...], int]]:
    """Smooth maximal cones ordered by their sorted ray labels."""
    dets = fan.cone_determinants
    out = [
        (tuple(sorted(fan.cone_labels(ci))), ci)
        for ci in range(len(fan.max_cones))
        if abs(dets[ci]) == 1
    ]
    out.sort()
    return out


def generate_family(
    base: Fan,
    count: int,
    label_prefix: str = "g",
    first_cone: Sequence[str] | None = None,
) -> list[Fan]:
    """Grow ``count`` successive smooth complete fans by barycentric subdivision
    of one maximal cone per step.

    Each step subdivides a smooth maximal cone at the sum of its rays, which
    adds exactly 3 maximal cones in dimension 4 (one new ray, the cone is
    replaced by ambient_dim cones) and keeps all determinants at +-1.  The
    first selected cone defaults to the embedded choice d1 e2 d2 d4 when the
    base fan has it; otherwise, and for all later steps, the candidate with
    the lexicographically smallest sorted ray-label tuple is selected,
    skipping cones whose ray sum coincides with an existing ray.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    if first_cone is None and base.find_cone(barnette.FAMILY_FIRST_CONE) is not None:
        first_cone = barnette.FAMILY_FIRST_CONE

    fans = []
    fan = base
    for step in range(count):
        chosen = None
        if step == 0 and first_cone is not None:
            ci = fan.find_cone(first_cone)
            if ci is None:
                raise ValueError(f"first cone {tuple(first_cone)} is not in the base fan")
            if abs(fan.cone_determinants[ci]) != 1:
                raise ValueError(f"first cone {tuple(first_cone)} is not smooth")
            chosen = ci
            point = _ray_sum(fan, ci)
        else:
            for _, ci in _family_candidates(fan):
                point = _ray_sum(fan, ci)
                if all(r.vector != make_primitive(point) for r in fan.rays):
                    chosen = ci
                    break
            if chosen is None:
                raise ValueError("no subdividable smooth cone found")
        fan, _ = stellar_subdivide(fan, point, f"{label_prefix}{step + 1}")
        fans.append(fan)
    return fans


def _ray_sum(fan: Fan, cone_index: int) -> IntVec:
    total = tuple([0] * fan.ambient_dim)
    for v in fan.cone_vectors(cone_index):
        total = vec_add(total, v)
    return total
