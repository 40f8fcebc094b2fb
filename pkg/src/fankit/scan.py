"""Exact classification of box lattice points against a complete fan.

Every lattice point of [-bound, bound]^n falls in the relative interior of
exactly one face of a complete fan; the scanner counts points by that face's
dimension (n: interior of a maximal cone, n-1: shared facet, ..., 0: the
origin) and can collect the dimension-1 points, which are exactly the ray
multiples.  Membership tests use precomputed integer facet inequalities, so
a point costs at most n sign tests per cone and no rational arithmetic.

Three interchangeable backends produce identical counts:

* "compiled"  - Cython kernel (fankit._scancore), used when importable and
                when every dot product provably fits in 64 bits;
* "numpy"     - vectorized int64 fallback, same 64-bit precondition;
* "python"    - pure arbitrary-precision loops, always safe, slow.

Work is partitioned by first coordinate into contiguous slabs merged by
addition, so results are independent of the worker count.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from itertools import product
from multiprocessing import get_context

import numpy as np

from .errors import DimensionMismatch
from .fan import Fan
from .linalg import IntVec, dot

try:
    from . import _scancore
except ImportError:  # compiled kernel is optional
    _scancore = None

COMPILED_KERNEL_AVAILABLE = _scancore is not None

#: Environment variable consulted for the default worker count.
WORKERS_ENV_VAR = "FANKIT_WORKERS"

_WITNESS_CAP = 16


class PointClass(enum.Enum):
    """Classification of a lattice point by its minimal face's dimension."""

    INTERIOR_OF_CONE = "interior_of_cone"
    REL_INT_FACET = "rel_int_facet"
    REL_INT_2FACE = "rel_int_2face"
    REL_INT_1FACE = "rel_int_1face"
    ORIGIN = "origin"
    NOT_COVERED = "not_covered"

    @classmethod
    def from_face_dim(cls, face_dim: int | None, ambient_dim: int) -> "PointClass":
        if face_dim is None:
            return cls.NOT_COVERED
        if face_dim == ambient_dim:
            return cls.INTERIOR_OF_CONE
        if face_dim == ambient_dim - 1:
            return cls.REL_INT_FACET
        if face_dim in (0, 1, 2):
            return (cls.ORIGIN, cls.REL_INT_1FACE, cls.REL_INT_2FACE)[face_dim]
        raise ValueError(
            f"face dimension {face_dim} has no named class in ambient dimension {ambient_dim}"
        )


@dataclass
class ScanReport:
    """Exact box-classification counts plus optional point collections."""

    bound: int
    ambient_dim: int
    counts_by_dim: dict[int, int]
    not_covered: int
    one_face_points: tuple[IntVec, ...] | None
    not_covered_witnesses: tuple[IntVec, ...]
    backend: str
    workers: int

    @property
    def total(self) -> int:
        return (2 * self.bound + 1) ** self.ambient_dim

    @property
    def sum_matches(self) -> bool:
        """The conservation check: all categories together exhaust the box."""
        return sum(self.counts_by_dim.values()) + self.not_covered == self.total

    @property
    def counts(self) -> dict[PointClass, int]:
        """Counts keyed by the named classes (defined for ambient dimension 4)."""
        out = {
            PointClass.from_face_dim(dim, self.ambient_dim): n
            for dim, n in sorted(self.counts_by_dim.items(), reverse=True)
        }
        out[PointClass.NOT_COVERED] = self.not_covered
        return out


def classify_point(fan: Fan, point) -> PointClass:
    """Classify one lattice point, with the full fan-consistency cross-check.

    Examines every maximal cone (no early exit): all containing cones must
    agree on the minimal face, and the number of containing cones must equal
    the number of maximal cones having that face -- both fail loudly when
    the input is not actually a fan.
    """
    point = tuple(int(x) for x in point)
    if len(point) != fan.ambient_dim:
        raise DimensionMismatch(f"point has dimension {len(point)}, fan {fan.ambient_dim}")
    containing = []
    face = None
    for ci, cone in enumerate(fan.max_cones):
        values = [dot(row, point) for row in fan.cone_normals[ci]]
        if all(v >= 0 for v in values):
            containing.append(ci)
            this_face = frozenset(
                i for i, v in zip(cone.ray_indices, values) if v > 0
            )
            if face is None:
                face = this_face
            else:
                assert this_face == face, "containing cones disagree on the minimal face"
    if not containing:
        return PointClass.NOT_COVERED
    with_face = [
        ci for ci, cone in enumerate(fan.max_cones) if face <= set(cone.ray_indices)
    ]
    assert len(with_face) == len(containing), "minimal face incidence mismatch"
    return PointClass.from_face_dim(len(face), fan.ambient_dim)


def _normals_array(fan: Fan) -> np.ndarray:
    return np.array(fan.cone_normals, dtype=np.int64)


def _fits_int64(fan: Fan, bound: int) -> bool:
    biggest = max(abs(x) for rows in fan.cone_normals for row in rows for x in row)
    return biggest * bound * fan.ambient_dim < 2**62


def _resolve_backend(requested: str, fan: Fan, bound: int) -> str:
    fits = _fits_int64(fan, bound)
    if requested == "auto":
        if COMPILED_KERNEL_AVAILABLE and fits:
            return "compiled"
        return "numpy" if fits else "python"
    if requested == "compiled":
        if not COMPILED_KERNEL_AVAILABLE:
            raise ValueError("compiled kernel is not available in this installation")
        if not fits:
            raise ValueError("inputs exceed the compiled kernel's 64-bit range")
        return requested
    if requested == "numpy":
        if not fits:
            raise ValueError("inputs exceed the numpy backend's 64-bit range")
        return requested
    if requested == "python":
        return requested
    raise ValueError(f"unknown backend {requested!r}")


def _scan_slab_python(normals, first_coord: int, bound: int, collect: bool, cap: int):
    dim = len(normals[0])
    counts = [0] * (dim + 2)
    one_face = []
    uncovered = []
    for rest in product(range(-bound, bound + 1), repeat=dim - 1):
        point = (first_coord, *rest)
        face_dim = None
        for rows in normals:
            zeros = 0
            for row in rows:
                acc = 0
                for a, x in zip(row, point):
                    acc += a * x
                if acc < 0:
                    break
                if acc == 0:
                    zeros += 1
            else:
                face_dim = dim - zeros
            if face_dim is not None:
                break
        if face_dim is None:
            counts[dim + 1] += 1
            if len(uncovered) < cap:
                uncovered.append(point)
        else:
            counts[face_dim] += 1
            if collect and face_dim == 1:
                one_face.append(point)
    return counts, one_face, uncovered


def _scan_slab_numpy(normals: np.ndarray, first_coord: int, bound: int, collect: bool, cap: int):
    n_cones, dim, _ = normals.shape
    axis = np.arange(-bound, bound + 1, dtype=np.int64)
    if dim == 1:
        points = np.array([[first_coord]], dtype=np.int64)
    else:
        grids = np.meshgrid(*([axis] * (dim - 1)), indexing="ij")
        points = np.empty((axis.size ** (dim - 1), dim), dtype=np.int64)
        points[:, 0] = first_coord
        for i, g in enumerate(grids):
            points[:, i + 1] = g.reshape(-1)
    counts = [0] * (dim + 2)
    one_face = []
    unclassified = np.ones(len(points), dtype=bool)
    for c in range(n_cones):
        values = points @ normals[c].T
        inside = (values >= 0).all(axis=1) & unclassified
        if not inside.any():
            continue
        zeros = (values[inside] == 0).sum(axis=1)
        face_dims = dim - zeros
        for k, n in zip(*np.unique(face_dims, return_counts=True)):
            counts[int(k)] += int(n)
        if collect:
            sel = points[inside][face_dims == 1]
            one_face.extend(tuple(int(x) for x in row) for row in sel)
        unclassified[inside] = False
    counts[dim + 1] = int(unclassified.sum())
    uncovered = [
        tuple(int(x) for x in row) for row in points[unclassified][:cap]
    ]
    return counts, one_face, uncovered


_worker_state: dict = {}


def _init_worker(normals_obj, normals_arr, bound, collect, backend):
    _worker_state["normals_obj"] = normals_obj
    _worker_state["normals_arr"] = normals_arr
    _worker_state["bound"] = bound
    _worker_state["collect"] = collect
    _worker_state["backend"] = backend


def _run_slab(first_coord: int):
    return _dispatch(
        _worker_state["backend"],
        _worker_state["normals_obj"],
        _worker_state["normals_arr"],
        first_coord,
        _worker_state["bound"],
        _worker_state["collect"],
    )


def _dispatch(backend, normals_obj, normals_arr, first_coord, bound, collect):
    if backend == "compiled":
        return _scancore.scan_slab(normals_arr, first_coord, bound, collect, _WITNESS_CAP)
    if backend == "numpy":
        return _scan_slab_numpy(normals_arr, first_coord, bound, collect, _WITNESS_CAP)
    return _scan_slab_python(normals_obj, first_coord, bound, collect, _WITNESS_CAP)


def default_workers() -> int:
    value = os.environ.get(WORKERS_ENV_VAR, "")
    if value.strip():
        workers = int(value)
        if workers < 1:
            raise ValueError(f"{WORKERS_ENV_VAR} must be >= 1")
        return workers
    return 1


def scan_box(
    fan: Fan,
    bound: int,
    collect_one_face: bool = False,
    workers: int | None = None,
    backend: str = "auto",
) -> ScanReport:
    """Classify every lattice point of [-bound, bound]^n against the fan.

    Deterministic for any worker count: slabs are merged by addition and the
    collected point lists are sorted.  ``workers=None`` consults the
    FANKIT_WORKERS environment variable and defaults to 1.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if workers is None:
        workers = default_workers()
    if workers < 1:
        raise ValueError("workers must be >= 1")
    chosen = _resolve_backend(backend, fan, bound)

    dim = fan.ambient_dim
    normals_obj = fan.cone_normals
    normals_arr = _normals_array(fan) if chosen in ("compiled", "numpy") else None
    slabs = list(range(-bound, bound + 1))

    if workers == 1:
        results = [
            _dispatch(chosen, normals_obj, normals_arr, x, bound, collect_one_face)
            for x in slabs
        ]
    else:
        ctx = get_context()
        with ctx.Pool(
            processes=min(workers, len(slabs)),
            initializer=_init_worker,
            initargs=(normals_obj, normals_arr, bound, collect_one_face, chosen),
        ) as pool:
            results = pool.map(_run_slab, slabs)

    counts = [0] * (dim + 2)
    one_face: list[IntVec] = []
    uncovered: list[IntVec] = []
    for slab_counts, slab_one_face, slab_uncovered in results:
        for i, n in enumerate(slab_counts):
            counts[i] += int(n)
        one_face.extend(slab_one_face)
        uncovered.extend(slab_uncovered)
    one_face.sort()
    uncovered.sort()
    return ScanReport(
        bound=bound,
        ambient_dim=dim,
        counts_by_dim={d: counts[d] for d in range(dim + 1)},
        not_covered=counts[dim + 1],
        one_face_points=tuple(one_face) if collect_one_face else None,
        not_covered_witnesses=tuple(uncovered[:_WITNESS_CAP]),
        backend=chosen,
        workers=workers,
    )
