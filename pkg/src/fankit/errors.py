"""Exception types raised by the exact-geometry operations."""


class FankitError(Exception):
    """Base class for all library-specific errors."""


class ZeroVector(FankitError):
    """The zero vector has no primitive representative."""


class SingularBasis(FankitError):
    """Attempted to solve against a matrix with determinant zero."""


class DimensionMismatch(FankitError):
    """A point or vector has the wrong ambient dimension."""


class NotContained(FankitError):
    """The point is not in the closed cone, so it has no minimal face there."""


class UnpairedFacet(FankitError):
    """A facet of a maximal cone is shared by a number of cones other than two."""

    def __init__(self, facets):
        self.facets = tuple(facets)
        super().__init__(f"{len(self.facets)} facet(s) with incidence != 2")


class DegenerateFacet(FankitError):
    """Vectors expected to span a hyperplane are linearly dependent."""


class NonGenericWitness(FankitError):
    """The witness point lies on the boundary of some maximal cone."""


class PointIsRay(FankitError):
    """The subdivision point lies on an existing ray; subdividing would be a no-op."""


class OutsideSupport(FankitError):
    """The subdivision point is not contained in any maximal cone."""


class FaceNotPresent(FankitError):
    """The requested face is not a simplex of the complex."""


class MissingLabel(FankitError):
    """A vertex or ray label required by the operation is absent."""


class MissingCoordinates(FankitError):
    """A realization does not assign coordinates to every vertex."""


class ParseError(FankitError):
    """An input document is malformed."""
