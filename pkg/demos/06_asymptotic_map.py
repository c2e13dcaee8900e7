"""Map asymptotic surface invariants (kappa, chi) into the code-parameter
domain (delta, R), all in exact rational arithmetic, and emit a diagram.
"""

from fractions import Fraction

from surfcodes import asymptotic as am

# The affine maps phi_g send kappa = K^2 / #points and chi = chi(O) / #points
# to relative distance and rate.  The reference polygon and its image:
q, g = 2, 2
poly = am.polygon_image(q, g)
print(f"Reference polygon and image, q={q}, g={g}:")
for name in ("A1", "B1", "C1", "D1"):
    pt = poly[name]
    print(f"  {name} = ({pt.kappa}, {pt.chi})")
for name in ("A2", "B2", "C2", "D2"):
    cp = poly[name]
    print(f"  {name} = ({cp.delta}, {cp.r})")

# The chi = kappa/2 edge maps to the segment C2 D2; its slope, computed
# from the corners, is -(g^2-g+1)/(2g(q+1)).
c2, d2 = poly["C2"], poly["D2"]
print("slope of C2 D2:", (d2.r - c2.r) / (d2.delta - c2.delta))

# Outer constraints on the source domain and the classical bounds on the
# image domain, decided exactly.
pt = am.asym_point(Fraction(1, 9), Fraction(1, 18))
print("\nD1 corner membership:", am.domain_membership(q, pt))
cp = am.phi_g(q, g, pt)
print("image", (cp.delta, cp.r), "checks:", am.code_bound_checks(q, cp))

# Products of curves land at chi = kappa/8 but always on the wrong side of
# the square-root point-count floor, hence at delta < 0 under every phi_g.
out = am.product_curve_point(9, 3, 3, 8, 8)
print("\nproduct of genus-3 curves with 8 points each over F_9:",
      (out["pt"].kappa, out["pt"].chi), "above floor:", out["dv_floor_ok"])

# Emit a sampled diagram: CSV rows over a rectangle plus the exact corner
# rows, and an SVG of the image domain.
am.emit_diagram(2, 2, 12, "diagram_q2_g2.csv", "diagram_q2_g2.svg")
print("\nwrote diagram_q2_g2.csv and diagram_q2_g2.svg")
