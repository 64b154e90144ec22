"""Exception types shared across the package."""


class DivideError(ValueError):
    """Base class for all validation and computation errors."""


class DanglingHalfEdge(DivideError):
    """A half-edge id is missing from, or duplicated in, crossings/endpoints/edges."""


class NonQuadrivalent(DivideError):
    """A crossing record does not carry exactly four half-edges."""


class NonPlanar(DivideError):
    """The rotation system does not close up to a sphere (Euler check fails)."""


class InconsistentStrands(DivideError):
    """Strand-through pairing produced an inconsistent walk."""


class Disconnected(DivideError):
    """Operation requires a connected divide."""


class NotATriangle(DivideError):
    """Face is not an interior triangle with three distinct corner crossings."""


class BoundaryFace(DivideError):
    """Face touches the disk boundary and cannot host a type-III move."""


class NotAnEndpoint(DivideError):
    """Argument does not identify a boundary endpoint of an interval branch."""


class NotCoprime(DivideError):
    """Chebyshev / cabling parameters must be coprime."""


class CircleBranch(DivideError):
    """Cabling over a circle branch is not defined."""


class MultiBranch(DivideError):
    """Cabling base must have exactly one branch."""


class InvalidPuiseux(DivideError):
    """Puiseux pair data violates the admissibility constraints."""


class TangencyDetected(DivideError):
    """Numeric trace found a near-tangential approach below the separation threshold."""


class TriplePoint(DivideError):
    """Numeric trace found three strands meeting within tolerance."""


class IndexOutOfRange(DivideError):
    """Transvection word refers to a basis index outside the basis."""


class Inconclusive(DivideError):
    """Order search exceeded k_max without finding an order or a certificate."""


class LayoutDegenerate(DivideError):
    """Layout produced coincident vertices or stray intersections after retries."""
