"""Shared fixtures: deterministic random quadrilateral generators."""
import math

import numpy as np
import pytest

from inconic import AffineMap, ConvexQuad, Point, QuadKind, validate_quad


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def _pair_crosses(points):
    dirs = []
    for i in range(4):
        p, q = points[i], points[(i + 1) % 4]
        dx, dy = q[0] - p[0], q[1] - p[1]
        n = math.hypot(dx, dy)
        dirs.append((dx / n, dy / n))
    return [abs(dirs[i][0] * dirs[j][1] - dirs[i][1] * dirs[j][0])
            for i, j in ((0, 2), (1, 3))]


def random_convex_quad(rng) -> ConvexQuad:
    """Rejection-sample a strictly convex quadrilateral in [0, 10]^2."""
    while True:
        pts = rng.uniform(0.0, 10.0, size=(4, 2))
        center = pts.mean(axis=0)
        order = np.argsort(np.arctan2(pts[:, 1] - center[1], pts[:, 0] - center[0]))
        pts = [tuple(pts[i]) for i in order]
        try:
            return validate_quad(pts)
        except Exception:
            continue


def random_trapezium(rng, min_parallel=1e-3) -> ConvexQuad:
    """Convex quadrilateral with both opposite-side direction crosses above
    the margin (no nearly parallel sides)."""
    while True:
        q = random_convex_quad(rng)
        if q.kind is not QuadKind.TRAPEZIUM:
            continue
        if min(_pair_crosses([v.as_tuple() for v in q.vertices])) > min_parallel:
            return q


def random_affine(rng, allow_reflection=True) -> AffineMap:
    """Random well-conditioned invertible affine map."""
    while True:
        m = rng.uniform(-2.0, 2.0, size=4)
        det = m[0] * m[3] - m[1] * m[2]
        if abs(det) < 0.2:
            continue
        if not allow_reflection and det < 0:
            continue
        t = rng.uniform(-5.0, 5.0, size=2)
        return AffineMap(m[0], m[1], m[2], m[3], t[0], t[1])


def random_trapezoid(rng) -> ConvexQuad:
    """Exactly one parallel side pair: affine image of (0,0),(1,0),(s,1),(0,1)."""
    while True:
        s = rng.uniform(0.3, 3.0)
        if abs(s - 1) < 0.05:
            continue
        t_map = random_affine(rng)
        base = [(0.0, 0.0), (1.0, 0.0), (s, 1.0), (0.0, 1.0)]
        pts = [t_map.apply_xy(x, y) for x, y in base]
        q = validate_quad(pts)
        if q.kind is QuadKind.TRAPEZOID:
            return q


def transform_quad(q: ConvexQuad, t_map: AffineMap) -> ConvexQuad:
    return validate_quad([t_map.apply(v) for v in q.vertices])


def quad_s3t2() -> ConvexQuad:
    return validate_quad([(0, 0), (1, 0), (3, 2), (0, 1)])


def quad_s4t2() -> ConvexQuad:
    return validate_quad([(0, 0), (1, 0), (4, 2), (0, 1)])


def point_on_side_lines(q: ConvexQuad, p: Point, tol: float) -> bool:
    return any(abs(line.eval(p)) <= tol for line in q.side_lines())
