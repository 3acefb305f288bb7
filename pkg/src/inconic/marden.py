"""Foci of conics tangent to a triangle's side lines.

The zeros of t1/(z - z1) + t2/(z - z2) + t3/(z - z3) with t1 + t2 + t3 = 1
are the foci of a conic tangent to the three lines through the triangle's
sides; a positive weight product t1*t2*t3 makes it an ellipse, contacting
side zj-zk at the weighted average (tj*zk + tk*zj)/(tj + tk).  Points in the
plane are identified with complex numbers throughout.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import AsymptoteContact, DegenerateFoci, NotEllipse, NumericalFailure
from .geometry import (
    DEFAULT_TOL,
    EllipseGeo,
    Line,
    Point,
    Tolerances,
    ellipse_from_foci_point,
    tangency_residual,
    conic_from_ellipse,
)


@dataclass(frozen=True)
class TriangleZ:
    """Triangle given by three complex vertices; must not be collinear."""

    z1: complex
    z2: complex
    z3: complex

    def __post_init__(self):
        for z in (self.z1, self.z2, self.z3):
            if not cmath.isfinite(complex(z)):
                raise ValueError("triangle vertices must be finite")
        if abs(self.signed_area()) <= 1e-14 * max(1.0, self._scale() ** 2):
            raise ValueError("triangle vertices are collinear")

    def _scale(self) -> float:
        return max(abs(self.z1), abs(self.z2), abs(self.z3))

    def signed_area(self) -> float:
        u = self.z2 - self.z1
        v = self.z3 - self.z1
        return (u.real * v.imag - u.imag * v.real) / 2

    def side_lines(self) -> tuple[Line, Line, Line]:
        """Lines through sides (z2z3, z1z3, z1z2) — indexed opposite each vertex."""
        def line(p: complex, q: complex) -> Line:
            return Line.from_points(Point(p.real, p.imag), Point(q.real, q.imag))
        return (line(self.z2, self.z3), line(self.z1, self.z3), line(self.z1, self.z2))


@dataclass(frozen=True)
class WeightTriple:
    """Weights (t1, t2, t3) summing to 1; t3 is always stored as 1 - t1 - t2.

    No coercion is applied, so exact number types (fractions.Fraction)
    flow through product and validity checks unchanged.
    """

    t1: float
    t2: float
    t3: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "t3", 1 - self.t1 - self.t2)

    def as_tuple(self):
        return (self.t1, self.t2, self.t3)

    @property
    def product(self):
        return self.t1 * self.t2 * self.t3


def stable_quadratic_roots(root_sum: complex, root_product: complex) -> tuple[complex, complex]:
    """Roots of z^2 - root_sum*z + root_product without subtractive cancellation.

    The discriminant square root is sign-matched against the linear
    coefficient, and the second root is recovered from the product.
    """
    disc = root_sum * root_sum - 4 * root_product
    sq = cmath.sqrt(disc)
    if (root_sum.real * sq.real + root_sum.imag * sq.imag) < 0:
        sq = -sq
    r1 = (root_sum + sq) / 2
    if r1 == 0:
        return (0j, root_sum)
    return (r1, root_product / r1)


def _focal_polynomial(tri: TriangleZ, w: WeightTriple) -> tuple[complex, complex]:
    """(root sum, root product) of the monic numerator of the weighted
    partial-fraction sum over the triangle vertices."""
    z1, z2, z3 = complex(tri.z1), complex(tri.z2), complex(tri.z3)
    t1, t2, t3 = (complex(v) for v in w.as_tuple())
    root_sum = t1 * (z2 + z3) + t2 * (z1 + z3) + t3 * (z1 + z2)
    root_product = t1 * z2 * z3 + t2 * z1 * z3 + t3 * z1 * z2
    return root_sum, root_product


def foci_from_weights(tri: TriangleZ, w: WeightTriple) -> tuple[complex, complex]:
    """Both zeros of t1(z-z2)(z-z3) + t2(z-z1)(z-z3) + t3(z-z1)(z-z2).

    The weights sum to 1 by construction, so the numerator is monic of
    degree exactly 2; the zeros are returned as an unordered pair (sorted
    lexicographically for reproducibility).
    """
    lead = float(w.t1 + w.t2 + w.t3)
    if abs(lead - 1.0) > 1e-9:
        raise DegenerateFoci("weights do not sum to 1")
    root_sum, root_product = _focal_polynomial(tri, w)
    r1, r2 = stable_quadratic_roots(root_sum, root_product)
    if (r1.real, r1.imag) > (r2.real, r2.imag):
        r1, r2 = r2, r1
    return r1, r2


def marden_validity(w: WeightTriple) -> bool:
    """True iff t1*t2*t3 > 0 strictly, i.e. the tangent conic is an ellipse."""
    return w.product > 0


def tangent_points(tri: TriangleZ, w: WeightTriple,
                   tol: Tolerances = DEFAULT_TOL) -> tuple[complex, complex, complex]:
    """Contact points on the side lines, in order (side z2z3, z1z3, z1z2).

    Raises AsymptoteContact when some pairwise weight sum vanishes: the
    contact point escapes to infinity and the conic is tangent to that side
    line along an asymptote.
    """
    z1, z2, z3 = complex(tri.z1), complex(tri.z2), complex(tri.z3)
    t1, t2, t3 = (float(v) for v in w.as_tuple())
    pairs = ((t2, z3, t3, z2), (t1, z3, t3, z1), (t1, z2, t2, z1))
    out = []
    for ti, zj, tj, zi in pairs:
        denom = ti + tj
        if abs(denom) <= tol.tol_pair * (abs(ti) + abs(tj)) or denom == 0:
            raise AsymptoteContact("pairwise weight sum vanishes; contact at infinity")
        out.append((ti * zj + tj * zi) / denom)
    return tuple(out)


def marden_ellipse(tri: TriangleZ, w: WeightTriple,
                   tol: Tolerances = DEFAULT_TOL) -> EllipseGeo:
    """Ellipse with the partial-fraction zeros as foci, tangent to all three
    side lines of the triangle."""
    if not marden_validity(w):
        raise NotEllipse("weight product is not positive")
    f1, f2 = foci_from_weights(tri, w)
    contacts = tangent_points(tri, w, tol)
    ellipse = ellipse_from_foci_point(
        Point(f1.real, f1.imag), Point(f2.real, f2.imag),
        Point(contacts[0].real, contacts[0].imag), tol)
    conic = conic_from_ellipse(ellipse)
    for line in tri.side_lines():
        if tangency_residual(conic, line) >= tol.tol_tan:
            raise NumericalFailure("constructed ellipse misses a side-line tangency")
    return ellipse
