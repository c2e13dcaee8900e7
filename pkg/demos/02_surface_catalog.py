"""Tour the surface catalog: intersection forms, canonical classes, the
Noether identity, and the positivity predicates that gate every bound.
"""

from surfcodes import surfaces as sf

catalog = [sf.projective_plane(), sf.quadric_p1xp1(),
           sf.hirzebruch(1), sf.hirzebruch(2),
           sf.curve_product(2, 2, 8, 8), sf.curve_product(3, 5, 12, 20)]

print(f"{'surface':>22}  {'K':>12}  {'K^2':>4}  {'chi(O)':>6}  "
      f"{'chi_et':>6}  12chi(O)=K^2+chi_et")
for s in catalog:
    k = s.canonical
    ksq = sf.intersect(k, k)
    print(f"{str(s)[13:-1]:>22}  {str(k.coords):>12}  {ksq:>4}  "
          f"{s.chi_o:>6}  {s.chi_et:>6}  {sf.noether_identity(s)}")

# The intersection product replaces the degree from the curve case.
q = sf.quadric_p1xp1()
h, v = q.divisor(1, 0), q.divisor(0, 1)
print("\nOn the quadric: H.H =", sf.intersect(h, h),
      " H.V =", sf.intersect(h, v))
s2 = sf.hirzebruch(2)
sec = s2.divisor(0, 1)
print("On Hirzebruch(2): S.S =", sf.intersect(sec, sec),
      "(the negative section)")

# Positivity flags per surface.  On Hirzebruch(e) the class uF + vS is very
# ample once u >= ev + 1 and only base point free on the boundary u = ev.
s1 = sf.hirzebruch(1)
for coords in ((2, 1), (1, 1), (3, 2)):
    flags = sf.ampleness_flags(s1, s1.divisor(*coords))
    print(f"Hirzebruch(1) {coords}: ample={flags.ample} "
          f"very_ample={flags.very_ample} bpf={flags.base_point_free}")

# The coherent-Euler-characteristic bound for section counts.
g = q.divisor(2, 3)
h_ample = q.divisor(1, 1)
print("\nSections of (2,3) on the quadric: >=",
      sf.riemann_roch_lower(q, g, h_ample), "(exactly (2+1)(3+1) = 12)")
