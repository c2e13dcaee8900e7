"""Compare the interpolating distance bound with the classical alternatives,
and lift a report along a totally split cover.
"""

import json

from surfcodes import bounds as bd
from surfcodes import surfaces as sf

# A full report on the quadric: interpolating and Aubry agree at degree
# (1,1) (the d = 1 case), and brute force shows both undershoot by 1.
quadric = sf.quadric_p1xp1()
rep = bd.parameter_report(quadric, quadric.divisor(1, 1), 3,
                          exact_budget=10 ** 6)
print("Quadric q=3 G=(1,1):")
print(json.dumps(rep.to_json_dict(), indent=2))

# On G = d*L the interpolating bound replaces Aubry's d^2 by a d: the gap
# is (q+1)(d^2-d)L^2.
print("\nDominance over the Aubry bound on the plane (q=3, L=line):")
p2 = sf.projective_plane()
ell = p2.divisor(1)
gamma = bd.universal_gamma(p2, ell, 3)
n = sf.point_count(p2, 3)
for d in range(1, 5):
    ours = bd.interpolating_bound(n, gamma, d * ell)
    aubry = bd.aubry_bound(n, 3, d * ell)
    print(f"  degree {d}: interpolating {ours}  aubry {aubry}  gap {ours - aubry}")

# Hansen's auxiliary-curve bound recovers the sharp quadric value from the
# q+1 lines of one ruling.
q = 3
n = (q + 1) ** 2
a, b = 1, 1
sharp = bd.hansen_curve_bound_uniform(n, a, q + 1, b, q + 1)
print(f"\nHansen curve bound with one ruling's lines: {sharp} "
      f"(= n - (q+1)(a+b) + ab)")

# Seshadri-style data is caller-supplied; with xi = q+1 on a very ample
# class the bound collapses to Aubry's.
d11 = quadric.divisor(1, 1)
print("Hansen S2 with xi=q+1:",
      bd.hansen_seshadri_bound(n, sf.intersect(d11, d11), xi=q + 1),
      "= Aubry:", bd.aubry_bound(n, q, d11))
print("Seshadri upper bound Gamma.G/n =",
      bd.seshadri_upper(sf.intersect(bd.universal_gamma(quadric, d11, q), d11), n))

# Lifting: along a degree-2 cover in which the point set splits totally,
# both n and Gamma.G double, so the relative bound is unchanged.
lifted = bd.lifted_bound(rep, 2)
print("\nLifted by degree 2: n =", lifted.n,
      " interpolating =", lifted.entry("interpolating").value)
print("Aubry after lifting:", lifted.entry("aubry").reason)
