"""The closed-form construction of the inscribed ellipse, step by step.

In the normalized frame the four side lines split into two triangles that
share the bottom and left sides.  Prescribing the center fixes a weight
triple on each triangle; the weighted partial-fraction numerators turn out
to be the *same* monic quadratic, so both tangent ellipses share their
foci, and they also share the contact point on the left side.  An ellipse
is determined by its foci and one point: the two ellipses are one, and it
is tangent to all four sides.
"""
import inconic as ic

quad = ic.validate_quad([(0, 0), (1, 0), (3, 2), (0, 1)])
nf = ic.normalize(quad)
s, t = nf.s, nf.t
h = 1.0
k = ic.locus_line(nf)(h)
print(f"normal form s = {s:g}, t = {t:g}; chosen center ({h:g}, {k:g})")

wt, ws = ic.weights_from_center(nf, h)
print(f"weights on the lower triangle: {tuple(round(v, 6) for v in wt.as_tuple())}"
      f"  (product {wt.product:g} > 0)")
print(f"weights on the upper triangle: {tuple(round(v, 6) for v in ws.as_tuple())}"
      f"  (product {ws.product:g} > 0)")

root_sum, root_product = ic.foci_quadratic(nf, h)
print(f"shared focal quadratic: z^2 - {root_sum}z + {root_product}")

f1, f2 = ic.stable_quadratic_roots(root_sum, root_product)
print(f"foci: {f1:.6f} and {f2:.6f}")

contact_y = (s - 2 * h) / (2 * h * (s - 1))
print(f"shared contact with the left side: (0, {contact_y:g})")

result = ic.inscribe_at_center(quad, ic.Point(h, k))
e = result.ellipse
print(f"\ninscribed ellipse: center ({e.center.x:g}, {e.center.y:g}), "
      f"semi-axes {e.semi_major:.6f} / {e.semi_minor:.6f}, "
      f"tilt {e.angle:.6f} rad")
print("contact points on the four sides:")
for hp, line in zip(result.tangencies, quad.side_lines()):
    print(f"  ({hp.x:+.6f}, {hp.y:+.6f})   residual "
          f"{ic.tangency_residual(result.conic, line):.1e}")
