"""Beyond the diagonal midpoints: tangent hyperbolas.

The line through the diagonal midpoints cuts an open chord out of the
quadrilateral's interior.  Strictly between the midpoints the tangent
conic with that center is the inscribed ellipse; on the rest of the chord
it is a hyperbola, still tangent to all four side lines (an asymptote
counts as a tangent line touching at infinity, reported with w = 0).
"""
import numpy as np

import inconic as ic

quad = ic.validate_quad([(0, 0), (1, 0), (3, 2), (0, 1)])
ch = ic.chord_x(quad)
seg = ic.locus(quad)
print(f"chord through the interior: {ch.p_start.as_tuple()} to "
      f"{ch.p_end.as_tuple()}")
print(f"locus segment inside it:    {seg.m1.as_tuple()} to {seg.m2.as_tuple()}\n")

for u in np.linspace(0.06, 0.94, 12):
    center = ch.point_at(float(u))
    try:
        conic, cls, contacts = ic.tangent_conic_at_center(quad, center)
    except ic.errors.DegenerateAtMidpoint:
        print(f"  u = {u:.2f}: diagonal midpoint, no tangent conic")
        continue
    worst = max(ic.tangency_residual(conic, l) for l in quad.side_lines())
    infinite = sum(1 for c in contacts if c.w == 0)
    note = f", {infinite} contact(s) at infinity" if infinite else ""
    print(f"  u = {u:.2f}: center ({center.x:+.3f}, {center.y:+.3f})  "
          f"{cls.value:<9} worst residual {worst:.1e}{note}")
