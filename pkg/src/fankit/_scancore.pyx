# cython: boundscheck=False, wraparound=False, cdivision=True
"""Typed kernel for the lattice-point scan.

Classifies every lattice point of a box slab (fixed first coordinate)
against the precomputed integer facet-inequality matrices of a simplicial
fan, accumulating counts by the dimension of the point's minimal face.
The Python wrapper guarantees every dot product fits in 64 bits before
dispatching here.
"""

from libc.stdlib cimport free, malloc


def scan_slab(long long[:, :, ::1] normals, long long first_coord, long long bound,
              bint collect_one_face, int witness_cap):
    """Classify all box points whose first coordinate equals ``first_coord``.

    Returns (counts, one_face_points, not_covered_points) where counts[k]
    counts points with a k-dimensional minimal face for k <= dim and
    counts[dim + 1] counts points contained in no cone.
    """
    cdef Py_ssize_t n_cones = normals.shape[0]
    cdef Py_ssize_t dim = normals.shape[1]
    cdef Py_ssize_t c, j, k, pos
    cdef long long acc
    cdef int zeros, hit
    cdef unsigned long long total = 1, t
    cdef long long width = 2 * bound + 1

    for j in range(dim - 1):
        total *= <unsigned long long> width

    cdef long long* coords = <long long*> malloc(dim * sizeof(long long))
    cdef long long* counts = <long long*> malloc((dim + 2) * sizeof(long long))
    if coords == NULL or counts == NULL:
        free(coords)
        free(counts)
        raise MemoryError()

    one_face = []
    uncovered = []
    try:
        coords[0] = first_coord
        for j in range(1, dim):
            coords[j] = -bound
        for j in range(dim + 2):
            counts[j] = 0

        for t in range(total):
            hit = 0
            for c in range(n_cones):
                zeros = 0
                for j in range(dim):
                    acc = 0
                    for k in range(dim):
                        acc += normals[c, j, k] * coords[k]
                    if acc < 0:
                        break
                    elif acc == 0:
                        zeros += 1
                else:
                    hit = 1
                if hit:
                    counts[dim - zeros] += 1
                    if collect_one_face and dim - zeros == 1:
                        one_face.append(tuple(coords[j] for j in range(dim)))
                    break
            if not hit:
                counts[dim + 1] += 1
                if len(uncovered) < witness_cap:
                    uncovered.append(tuple(coords[j] for j in range(dim)))
            # odometer step over coordinates 1..dim-1
            pos = dim - 1
            while pos >= 1:
                if coords[pos] < bound:
                    coords[pos] += 1
                    break
                coords[pos] = -bound
                pos -= 1

        result = [counts[j] for j in range(dim + 2)]
    finally:
        free(coords)
        free(counts)
    return result, one_face, uncovered
