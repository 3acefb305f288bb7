"""Exception hierarchy for geometric contract violations.

Every operation raises a subclass of :class:`InconicError` when its
preconditions fail; plain ``ValueError`` is reserved for malformed values
(non-finite coordinates, all-zero conics and the like).
"""


class InconicError(Exception):
    """Base class for all geometric errors raised by this package."""


class NotConvex(InconicError):
    """Vertices do not bound a strictly convex quadrilateral."""


class DegenerateQuad(InconicError):
    """Repeated vertices or zero-area vertex set."""


class ParallelogramUnsupported(InconicError):
    """Construction requested on a parallelogram (inscribed ellipse not unique)."""


class NotAnEllipse(InconicError):
    """Conic does not classify as a real nondegenerate ellipse."""


class SingularMap(InconicError):
    """Affine map is not invertible."""


class NotTangent(InconicError):
    """Line is not tangent to the conic."""


class DegeneratePoint(InconicError):
    """Point lies on the closed focal segment; no ellipse through it."""


class DegenerateTriangle(InconicError):
    """Collinear triangle vertices, or a center on a side line."""


class DegenerateFoci(InconicError):
    """Focal quadratic degenerates below degree two."""


class NotEllipse(InconicError):
    """Weight product is not positive; the tangent conic is not an ellipse."""


class AsymptoteContact(InconicError):
    """A pairwise weight sum vanishes: the contact point is at infinity."""


class CenterOffLocus(InconicError):
    """Requested center is not strictly inside the open center locus."""


class CenterOffChord(InconicError):
    """Requested center is not on the open chord of the center line."""


class DegenerateAtMidpoint(InconicError):
    """Requested center coincides with a diagonal midpoint."""


class TrapezoidForm(InconicError):
    """Normal form has a parallel side pair where the closed forms divide by zero."""


class NoRealEllipse(InconicError):
    """No real central conic tangent to the three lines has this center."""


class DegenerateConfiguration(InconicError):
    """Lines are not in general position (duplicates or three concurrent)."""


class CenterOffCentersLine(InconicError):
    """Requested center does not lie on the pencil's line of centers."""


class DegenerateMember(InconicError):
    """The pencil member for this center is a degenerate conic."""


class NumericalFailure(InconicError):
    """A verified post-condition failed numerically."""
