"""Planar primitives: points, homogeneous points, lines, affine maps, conics.

All types are immutable values and all operations are pure functions, so
everything here is safe to share between concurrent tasks.  Conics are kept
in a canonical homogeneous scale (unit Frobenius norm of the symmetric
matrix, first nonzero coefficient positive) so that equality and distance
between conics are well defined.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, fields
from enum import Enum

import numpy as np

from .errors import (
    DegeneratePoint,
    DegenerateQuad,
    NotAnEllipse,
    NotConvex,
    NotTangent,
    SingularMap,
)


@dataclass(frozen=True)
class Tolerances:
    """Numeric tolerances shared by all operations.

    A single record so the whole pipeline can be tightened or loosened at
    once (see the CLI's ``--tol`` flag and the INCONIC_TOL variable).
    """

    tol_det: float = 1e-12       # singularity threshold for linear maps
    tol_tan: float = 1e-8        # tangency residual acceptance
    tol_class: float = 1e-10     # conic classification thresholds
    tol_par: float = 1e-9        # parallelism of unit edge directions
    tol_pair: float = 1e-12      # vanishing pairwise weight sums
    tol_interval: float = 1e-9   # open-interval margin on locus parameters
    tol_on: float = 1e-9         # distance-to-locus acceptance
    tol_center: float = 1e-8     # center consistency in the dual pencil
    tol_infinity: float = 1e-10  # relative |w| below which a point is at infinity

    def replace(self, **kwargs) -> "Tolerances":
        values = {f.name: getattr(self, f.name) for f in fields(self)}
        values.update(kwargs)
        return Tolerances(**values)

    @classmethod
    def from_string(cls, text: str, base: "Tolerances | None" = None) -> "Tolerances":
        """Parse ``"name=value,name=value"`` overrides onto ``base``."""
        tol = base if base is not None else cls()
        text = text.strip()
        if not text:
            return tol
        known = {f.name for f in fields(cls)}
        overrides = {}
        for item in text.split(","):
            name, _, value = item.partition("=")
            name = name.strip()
            if name not in known or not value:
                raise ValueError(f"unknown tolerance setting {item!r}")
            overrides[name] = float(value)
        return tol.replace(**overrides)


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True)
class Point:
    """Affine plane point."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(float(self.x)) and math.isfinite(float(self.y))):
            raise ValueError("point components must be finite")

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def _cross(ox, oy, ax, ay, bx, by):
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


@dataclass(frozen=True)
class HomPoint:
    """Homogeneous point (x : y : w); w = 0 encodes a point at infinity."""

    x: float
    y: float
    w: float

    def __post_init__(self):
        if not all(math.isfinite(float(v)) for v in (self.x, self.y, self.w)):
            raise ValueError("homogeneous components must be finite")
        if self.x == 0 and self.y == 0 and self.w == 0:
            raise ValueError("homogeneous point cannot be the zero triple")

    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.w * self.w)

    def is_infinite(self, tol: Tolerances = DEFAULT_TOL) -> bool:
        return abs(self.w) <= tol.tol_infinity * self.norm()

    def dehomogenized(self, tol: Tolerances = DEFAULT_TOL) -> "HomPoint":
        """Scale to w = 1, or to a unit direction with w = 0 when at infinity."""
        if self.is_infinite(tol):
            n = math.hypot(self.x, self.y)
            x, y = self.x / n, self.y / n
            if x < 0 or (x == 0 and y < 0):
                x, y = -x, -y
            return HomPoint(x, y, 0.0)
        return HomPoint(self.x / self.w, self.y / self.w, 1.0)

    def to_point(self, tol: Tolerances = DEFAULT_TOL) -> Point:
        if self.is_infinite(tol):
            raise ValueError("cannot dehomogenize a point at infinity")
        return Point(self.x / self.w, self.y / self.w)


@dataclass(frozen=True)
class Line:
    """Oriented line a*x + b*y + c = 0, stored with a^2 + b^2 = 1.

    The sign is fixed so the first nonzero of (a, b) is positive, which makes
    the representation canonical; ``eval`` is then a signed distance.
    """

    a: float
    b: float
    c: float

    def __post_init__(self):
        n = math.hypot(self.a, self.b)
        if n == 0 or not math.isfinite(n) or not math.isfinite(float(self.c)):
            raise ValueError("line requires finite (a, b) != (0, 0)")
        a, b, c = self.a / n, self.b / n, self.c / n
        if a < 0 or (a == 0 and b < 0):
            a, b, c = -a, -b, -c
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @classmethod
    def from_points(cls, p: Point, q: Point) -> "Line":
        a = q.y - p.y
        b = p.x - q.x
        if a == 0 and b == 0:
            raise ValueError("cannot build a line through coincident points")
        return cls(a, b, -(a * p.x + b * p.y))

    def eval(self, p: Point) -> float:
        """Signed distance of p from the line."""
        return self.a * p.x + self.b * p.y + self.c

    def direction(self) -> tuple[float, float]:
        return (-self.b, self.a)

    def as_array(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c], dtype=float)


@dataclass(frozen=True)
class AffineMap:
    """Invertible planar affine map x -> M x + t."""

    m11: float
    m12: float
    m21: float
    m22: float
    tx: float = 0.0
    ty: float = 0.0

    def __post_init__(self):
        vals = (self.m11, self.m12, self.m21, self.m22, self.tx, self.ty)
        if not all(math.isfinite(float(v)) for v in vals):
            raise ValueError("affine map entries must be finite")
        if abs(self.det) <= DEFAULT_TOL.tol_det:
            raise SingularMap(f"linear part is singular (det={self.det:g})")

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls(1.0, 0.0, 0.0, 1.0, 0.0, 0.0)

    @property
    def det(self) -> float:
        return self.m11 * self.m22 - self.m12 * self.m21

    def apply_xy(self, x: float, y: float) -> tuple[float, float]:
        return (self.m11 * x + self.m12 * y + self.tx,
                self.m21 * x + self.m22 * y + self.ty)

    def apply(self, p: Point) -> Point:
        return Point(*self.apply_xy(p.x, p.y))

    def inverse(self) -> "AffineMap":
        d = self.det
        i11, i12 = self.m22 / d, -self.m12 / d
        i21, i22 = -self.m21 / d, self.m11 / d
        return AffineMap(i11, i12, i21, i22,
                         -(i11 * self.tx + i12 * self.ty),
                         -(i21 * self.tx + i22 * self.ty))

    def compose(self, inner: "AffineMap") -> "AffineMap":
        """self after inner (function composition)."""
        return AffineMap(
            self.m11 * inner.m11 + self.m12 * inner.m21,
            self.m11 * inner.m12 + self.m12 * inner.m22,
            self.m21 * inner.m11 + self.m22 * inner.m21,
            self.m21 * inner.m12 + self.m22 * inner.m22,
            self.m11 * inner.tx + self.m12 * inner.ty + self.tx,
            self.m21 * inner.tx + self.m22 * inner.ty + self.ty,
        )

    @property
    def matrix3(self) -> np.ndarray:
        return np.array([[self.m11, self.m12, self.tx],
                         [self.m21, self.m22, self.ty],
                         [0.0, 0.0, 1.0]])


class QuadKind(Enum):
    TRAPEZIUM = "trapezium"          # no parallel side pair
    TRAPEZOID = "trapezoid"          # exactly one parallel side pair
    PARALLELOGRAM = "parallelogram"  # both side pairs parallel


@dataclass(frozen=True)
class ConvexQuad:
    """Strictly convex quadrilateral, counterclockwise from the lexicographic
    smallest vertex (see :func:`validate_quad`)."""

    v0: Point
    v1: Point
    v2: Point
    v3: Point
    kind: QuadKind

    @property
    def vertices(self) -> tuple[Point, Point, Point, Point]:
        return (self.v0, self.v1, self.v2, self.v3)

    def side_lines(self) -> tuple[Line, Line, Line, Line]:
        """Lines through the sides, in order (v0v1, v1v2, v2v3, v3v0)."""
        v = self.vertices
        return tuple(Line.from_points(v[i], v[(i + 1) % 4]) for i in range(4))

    def contains_point(self, p: Point, slack: float = 0.0) -> bool:
        """Closed-quad test; positive slack admits near-boundary points."""
        v = self.vertices
        for i in range(4):
            a, b = v[i], v[(i + 1) % 4]
            if _cross(a.x, a.y, b.x, b.y, p.x, p.y) < -slack:
                return False
        return True


def _unit(dx: float, dy: float) -> tuple[float, float]:
    n = math.hypot(dx, dy)
    return dx / n, dy / n


def validate_quad(vertices, tol: Tolerances = DEFAULT_TOL) -> ConvexQuad:
    """Validate and canonicalize four vertices given in any cyclic order.

    Returns the quad reordered counterclockwise starting from the
    lexicographically smallest vertex, with its parallel-pair classification.
    Raises NotConvex when some vertex cross product is not strictly positive,
    DegenerateQuad for repeated vertices or an (almost) zero-area input.
    """
    pts = [v if isinstance(v, Point) else Point(v[0], v[1]) for v in vertices]
    if len(pts) != 4:
        raise ValueError("exactly four vertices required")
    scale = max(1.0, max(abs(p.x) for p in pts), max(abs(p.y) for p in pts))
    for i in range(4):
        for j in range(i + 1, 4):
            if math.hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y) <= 1e-12 * scale:
                raise DegenerateQuad(f"vertices {i} and {j} coincide")
    area2 = sum(pts[i].x * pts[(i + 1) % 4].y - pts[(i + 1) % 4].x * pts[i].y
                for i in range(4))
    if abs(area2) <= 1e-12 * scale * scale:
        raise DegenerateQuad("vertex set has (near) zero area")
    if area2 < 0:
        pts.reverse()
    start = min(range(4), key=lambda i: (pts[i].x, pts[i].y))
    pts = pts[start:] + pts[:start]

    dirs = [_unit(pts[(i + 1) % 4].x - pts[i].x, pts[(i + 1) % 4].y - pts[i].y)
            for i in range(4)]
    for i in range(4):
        dx0, dy0 = dirs[i - 1]
        dx1, dy1 = dirs[i]
        if dx0 * dy1 - dy0 * dx1 <= tol.tol_par:
            raise NotConvex(f"cross product at vertex {i} is not strictly positive")

    parallel_pairs = 0
    for i, j in ((0, 2), (1, 3)):
        if abs(dirs[i][0] * dirs[j][1] - dirs[i][1] * dirs[j][0]) <= tol.tol_par:
            parallel_pairs += 1
    kind = (QuadKind.TRAPEZIUM, QuadKind.TRAPEZOID, QuadKind.PARALLELOGRAM)[parallel_pairs]
    return ConvexQuad(pts[0], pts[1], pts[2], pts[3], kind)


# --------------------------------------------------------------------------
# Conics
# --------------------------------------------------------------------------

class ConicClass(Enum):
    REAL_ELLIPSE = "ellipse"
    HYPERBOLA = "hyperbola"
    PARABOLA = "parabola"
    DEGENERATE_LINES = "degenerate"
    IMAGINARY_ELLIPSE = "imaginary_ellipse"


def _canonical_six(a, b, c, d, e, f):
    coeffs = [float(v) for v in (a, b, c, d, e, f)]
    if not all(math.isfinite(v) for v in coeffs):
        raise ValueError("conic coefficients must be finite")
    a, b, c, d, e, f = coeffs
    # Frobenius norm of [[a, b/2, d/2], [b/2, c, e/2], [d/2, e/2, f]]
    norm = math.sqrt(a * a + c * c + f * f + (b * b + d * d + e * e) / 2)
    if norm == 0:
        raise ValueError("conic coefficients cannot all vanish")
    coeffs = [v / norm for v in coeffs]
    for v in coeffs:
        if abs(v) > 1e-12:
            if v < 0:
                coeffs = [-u for u in coeffs]
            break
    return coeffs


@dataclass(frozen=True)
class Conic:
    """Conic a x^2 + b xy + c y^2 + d x + e y + f = 0, canonically scaled."""

    a: float
    b: float
    c: float
    d: float
    e: float
    f: float

    def __post_init__(self):
        a, b, c, d, e, f = _canonical_six(self.a, self.b, self.c,
                                          self.d, self.e, self.f)
        for name, v in zip("abcdef", (a, b, c, d, e, f)):
            object.__setattr__(self, name, v)

    @classmethod
    def from_matrix(cls, m: np.ndarray) -> "Conic":
        m = (m + m.T) / 2
        return cls(m[0, 0], 2 * m[0, 1], m[1, 1], 2 * m[0, 2], 2 * m[1, 2], m[2, 2])

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b / 2, self.d / 2],
                         [self.b / 2, self.c, self.e / 2],
                         [self.d / 2, self.e / 2, self.f]])

    def evaluate(self, x: float, y: float) -> float:
        return (self.a * x * x + self.b * x * y + self.c * y * y
                + self.d * x + self.e * y + self.f)

    def coefficients(self) -> tuple[float, float, float, float, float, float]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def center(self, tol: Tolerances = DEFAULT_TOL) -> Point:
        """Solve grad = 0; raises SingularMap for central-less conics."""
        det = self.a * self.c - self.b * self.b / 4
        if abs(det) <= tol.tol_det:
            raise SingularMap("conic has no unique center")
        x = (-self.d / 2 * self.c + self.e / 2 * self.b / 2) / det
        y = (-self.e / 2 * self.a + self.d / 2 * self.b / 2) / det
        return Point(x, y)


def conic_distance(c1: Conic, c2: Conic) -> float:
    """Distance between canonical forms, invariant to the leading-sign flip."""
    u = np.array(c1.coefficients())
    v = np.array(c2.coefficients())
    w = np.array([1.0, 0.5, 1.0, 0.5, 0.5, 1.0])  # Frobenius weights
    return min(float(np.sqrt(w @ (u - v) ** 2)), float(np.sqrt(w @ (u + v) ** 2)))


def adjugate3(m: np.ndarray) -> np.ndarray:
    """Transposed cofactor matrix of a 3x3 matrix."""
    out = np.empty((3, 3))
    out[0, 0] = m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1]
    out[0, 1] = m[0, 2] * m[2, 1] - m[0, 1] * m[2, 2]
    out[0, 2] = m[0, 1] * m[1, 2] - m[0, 2] * m[1, 1]
    out[1, 0] = m[1, 2] * m[2, 0] - m[1, 0] * m[2, 2]
    out[1, 1] = m[0, 0] * m[2, 2] - m[0, 2] * m[2, 0]
    out[1, 2] = m[0, 2] * m[1, 0] - m[0, 0] * m[1, 2]
    out[2, 0] = m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0]
    out[2, 1] = m[0, 1] * m[2, 0] - m[0, 0] * m[2, 1]
    out[2, 2] = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    return out


def classify_conic(c: Conic, tol: Tolerances = DEFAULT_TOL) -> ConicClass:
    """Classify by the sign of b^2 - 4ac and rank tests (canonical scale).

    Central conics are ranked through det(M) = det33 * F(center), which
    stays accurate for eccentric conics far from the origin where the raw
    3x3 determinant cancels.
    """
    det33 = c.a * c.c - c.b * c.b / 4
    if abs(det33) <= tol.tol_class:
        det = float(np.linalg.det(c.matrix))
        if abs(det) <= tol.tol_class:
            return ConicClass.DEGENERATE_LINES
        return ConicClass.PARABOLA
    ctr = c.center(tol)
    value = c.evaluate(ctr.x, ctr.y)
    if abs(value) <= tol.tol_class:
        return ConicClass.DEGENERATE_LINES
    if det33 > 0:
        if value * (c.a + c.c) < 0:
            return ConicClass.REAL_ELLIPSE
        return ConicClass.IMAGINARY_ELLIPSE
    return ConicClass.HYPERBOLA


@dataclass(frozen=True)
class EllipseGeo:
    """Ellipse in metric form: center, semi-axes, major-axis angle, foci.

    angle lies in (-pi/2, pi/2]; foci are ordered lexicographically and are
    symmetric about the center with |f1 - f2| = 2 sqrt(a^2 - b^2).
    """

    center: Point
    semi_major: float
    semi_minor: float
    angle: float
    focus1: Point
    focus2: Point

    def __post_init__(self):
        if not (self.semi_major > 0 and self.semi_minor > 0):
            raise ValueError("semi-axes must be positive")
        if self.semi_major < self.semi_minor:
            raise ValueError("semi_major must be the larger axis")
        if not (-math.pi / 2 < self.angle <= math.pi / 2):
            raise ValueError("angle must lie in (-pi/2, pi/2]")

    @property
    def area(self) -> float:
        return math.pi * self.semi_major * self.semi_minor


def _norm_angle(theta: float) -> float:
    while theta <= -math.pi / 2:
        theta += math.pi
    while theta > math.pi / 2:
        theta -= math.pi
    return theta


def _ordered_foci(f1: Point, f2: Point) -> tuple[Point, Point]:
    if (f1.x, f1.y) <= (f2.x, f2.y):
        return f1, f2
    return f2, f1


def conic_from_ellipse(e: EllipseGeo) -> Conic:
    """Implicit form of the ellipse, canonically scaled."""
    ca, sa = math.cos(e.angle), math.sin(e.angle)
    # quadratic form u u^T / a^2 + v v^T / b^2 with u, v the axis directions
    q11 = ca * ca / e.semi_major**2 + sa * sa / e.semi_minor**2
    q22 = sa * sa / e.semi_major**2 + ca * ca / e.semi_minor**2
    q12 = ca * sa * (1 / e.semi_major**2 - 1 / e.semi_minor**2)
    cx, cy = e.center.x, e.center.y
    lin_x = -2 * (q11 * cx + q12 * cy)
    lin_y = -2 * (q12 * cx + q22 * cy)
    const = q11 * cx * cx + 2 * q12 * cx * cy + q22 * cy * cy - 1
    return Conic(q11, 2 * q12, q22, lin_x, lin_y, const)


def ellipse_from_conic(c: Conic, tol: Tolerances = DEFAULT_TOL) -> EllipseGeo:
    """Metric data of a real nondegenerate ellipse; inverse of
    conic_from_ellipse up to the canonical scale."""
    if classify_conic(c, tol) is not ConicClass.REAL_ELLIPSE:
        raise NotAnEllipse("conic does not classify as a real ellipse")
    block = c.matrix[:2, :2]
    center = c.center(tol)
    evals, evecs = np.linalg.eigh(block)
    # semi-axis^2 = -F(center)/eigenvalue; the canonical sign rule makes the
    # block positive definite and the center value negative for real ellipses
    axes = np.sqrt(-c.evaluate(center.x, center.y) / evals)
    # eigh sorts ascending, so index 0 carries the major axis
    semi_major, semi_minor = float(axes[0]), float(axes[1])
    if semi_major + 1e-15 < semi_minor:
        raise NotAnEllipse("inconsistent axis extraction")
    semi_minor = min(semi_minor, semi_major)
    if semi_major - semi_minor <= 1e-14 * semi_major:
        angle = 0.0
    else:
        angle = _norm_angle(math.atan2(float(evecs[1, 0]), float(evecs[0, 0])))
    cdist = math.sqrt(max(semi_major**2 - semi_minor**2, 0.0))
    ux, uy = math.cos(angle), math.sin(angle)
    f1 = Point(center.x - cdist * ux, center.y - cdist * uy)
    f2 = Point(center.x + cdist * ux, center.y + cdist * uy)
    f1, f2 = _ordered_foci(f1, f2)
    return EllipseGeo(center, semi_major, semi_minor, angle, f1, f2)


def transform_conic(c: Conic, t: AffineMap, tol: Tolerances = DEFAULT_TOL) -> Conic:
    """Conic whose zero set is the image of c's zero set under t."""
    if abs(t.det) <= tol.tol_det:
        raise SingularMap("cannot transform a conic by a singular map")
    hi = np.linalg.inv(t.matrix3)
    return Conic.from_matrix(hi.T @ c.matrix @ hi)


def transform_line(l: Line, t: AffineMap, tol: Tolerances = DEFAULT_TOL) -> Line:
    """Line through the image of l's points under t."""
    if abs(t.det) <= tol.tol_det:
        raise SingularMap("cannot transform a line by a singular map")
    a, b, c = np.linalg.inv(t.matrix3).T @ l.as_array()
    return Line(a, b, c)


def tangency_residual(c: Conic, l: Line) -> float:
    """|l^T adj(M) l| / ||adj(M)||; zero iff l is tangent to the conic
    (asymptotes of hyperbolas count as tangent at infinity)."""
    adj = adjugate3(c.matrix)
    v = l.as_array()
    return abs(float(v @ adj @ v)) / float(np.linalg.norm(adj))


def tangency_point(c: Conic, l: Line, tol: Tolerances = DEFAULT_TOL) -> HomPoint:
    """Contact point of a tangent line, as the pole of l; w = 0 at infinity."""
    if tangency_residual(c, l) >= tol.tol_tan:
        raise NotTangent("line is not tangent to the conic")
    p = adjugate3(c.matrix) @ l.as_array()
    return HomPoint(float(p[0]), float(p[1]), float(p[2])).dehomogenized(tol)


def ellipse_from_foci_point(f1: Point, f2: Point, p: Point,
                            tol: Tolerances = DEFAULT_TOL) -> EllipseGeo:
    """Ellipse with the given foci passing through p.

    The point determines the distance sum 2a; p on the closed focal segment
    leaves no ellipse and raises DegeneratePoint.  Coincident foci give a
    circle with angle 0 by convention.
    """
    d1 = math.hypot(p.x - f1.x, p.y - f1.y)
    d2 = math.hypot(p.x - f2.x, p.y - f2.y)
    a = (d1 + d2) / 2
    cdist = math.hypot(f2.x - f1.x, f2.y - f1.y) / 2
    if a - cdist <= 1e-12 * max(1.0, a):
        raise DegeneratePoint("point lies on the closed focal segment")
    b = math.sqrt(a * a - cdist * cdist)
    if cdist < tol.tol_det:
        angle = 0.0
    else:
        angle = _norm_angle(math.atan2(f2.y - f1.y, f2.x - f1.x))
    f1o, f2o = _ordered_foci(f1, f2)
    return EllipseGeo(midpoint(f1, f2), a, b, angle, f1o, f2o)
