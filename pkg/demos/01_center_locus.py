"""Where can the center of an inscribed ellipse sit?

For a convex quadrilateral the answer is a segment: the open stretch
between the midpoints of the two diagonals.  Every interior point of that
segment carries exactly one inscribed ellipse; the endpoints carry none.
"""
import numpy as np

import inconic as ic

quad = ic.validate_quad([(0, 0), (1, 0), (3, 2), (0, 1)])
print(f"quadrilateral kind: {quad.kind.value}")

seg = ic.locus(quad)
print(f"diagonal midpoints: M1 = {seg.m1.as_tuple()}, M2 = {seg.m2.as_tuple()}")

nf = ic.normalize(quad)
print(f"affine normal form: vertices (0,0), (1,0), ({nf.s:g},{nf.t:g}), (0,1)")
line = ic.locus_line(nf)
print(f"center line in that frame: y = {line.slope:g} x + {line.intercept:g}, "
      f"abscissa range {line.interval}")

print("\nsweeping the open segment:")
for u in np.linspace(0.1, 0.9, 9):
    result = ic.inscribe_at_param(quad, float(u))
    e = result.ellipse
    worst = max(ic.tangency_residual(result.conic, l) for l in quad.side_lines())
    print(f"  u = {u:.2f}: center ({e.center.x:+.4f}, {e.center.y:+.4f}), "
          f"area {e.area:.5f}, worst tangency residual {worst:.1e}")

print("\nthe endpoints themselves are excluded:")
try:
    ic.inscribe_at_center(quad, seg.m1)
except ic.errors.CenterOffLocus as exc:
    print(f"  M1 rejected: {exc}")

print("\nand for a parallelogram the segment collapses to a point:")
square = ic.validate_quad([(0, 0), (1, 0), (1, 1), (0, 1)])
print(f"  unit square locus degenerate: {ic.locus(square).degenerate}")
