"""Infinite totally-split 2-tower criterion on products of hyperelliptic
curves: point counts by character sums, Frobenius action on Jacobian
2-torsion, Kunneth invariant dimensions, and the exact-integer
Golod-Shafarevich check.

A hyperelliptic curve here is y^2 = f(t) over odd F_q, with f squarefree of
even degree 2g + 2 >= 6.  The 2-torsion of its Jacobian is modeled on the
roots of f: take the sum-zero subspace of F_2^{roots} modulo the all-ones
vector (dimension 2g) with the Frobenius acting by its permutation of the
roots.  The matrix is written in the fixed basis of projected differences of
consecutive roots (roots ordered factor by factor, factors in canonical
order), so results are reproducible.

The Golod-Shafarevich inequality is evaluated by squaring only, never with
floating-point square roots; the certified boundary instance
(q, g1, g2, rho) = (67, 30, 30, 1) passes by exactly one (7225 >= 7224).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from . import f2
from . import gf
from .codes import BudgetExceeded

SEARCH_CANDIDATE_BUDGET = 1_000_000


class NotSquarefree(ValueError):
    pass


class OddDegree(ValueError):
    pass


class NotEnoughFactors(ValueError):
    pass


class TooLarge(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# Hyperelliptic curves and point counts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HyperellipticCurve:
    """y^2 = f(t) over an odd-order field; f squarefree of even degree >= 6."""
    field: gf.FieldSpec
    f: gf.Polynomial

    def __post_init__(self):
        if self.field.q % 2 == 0:
            raise gf.EvenCharacteristic("hyperelliptic model needs odd q")
        if self.f.is_zero or self.f.degree % 2 != 0:
            raise OddDegree(f"f must have even degree, got {self.f.degree}")
        if self.f.degree < 6:
            raise ValueError(f"degree {self.f.degree} < 6 means genus < 2")
        d = gf.poly_gcd(self.f, self.f.derivative())
        if d.degree != 0:
            raise NotSquarefree("f has a repeated root")

    @property
    def genus(self) -> int:
        return (self.f.degree - 2) // 2

    @property
    def monic(self) -> bool:
        return self.f.leading == 1


def hyperelliptic_point_count(curve: HyperellipticCurve) -> int:
    """Number of rational points of the smooth model: the affine fiber over t
    has 1 + chi(f(t)) points, and the two points at infinity are rational
    exactly when the leading coefficient is a nonzero square."""
    field, f = curve.field, curve.f
    total = 0
    for t in field.elements():
        total += 1 + gf.quadratic_character(field, gf.poly_eval(f, t))
    if gf.quadratic_character(field, f.leading) == 1:
        total += 2
    return total


def naive_point_count(curve: HyperellipticCurve) -> int:
    """Independent oracle: enumerate all (t, y) with y^2 = f(t), then add the
    points at infinity."""
    field, f = curve.field, curve.f
    total = sum(1 for t in field.elements() for y in field.elements()
                if field.mul(y, y) == gf.poly_eval(f, t))
    if gf.quadratic_character(field, f.leading) == 1:
        total += 2
    return total


def sample_branch_poly(q: int, count: int, kind: str, seed: int,
                       leading_coeff: Optional[int] = None) -> gf.Polynomial:
    """Monic product of `count` distinct linear or irreducible quadratic
    factors over F_q, chosen by seeded deterministic sampling.  An optional
    leading_coeff rescales the product (for quadratic-twist experiments)."""
    field = gf.field_from_order(q)
    if field.q % 2 == 0:
        raise gf.EvenCharacteristic("branch polynomials need odd q")
    rng = random.Random(seed)
    if kind == "linear":
        if count > q:
            raise NotEnoughFactors(f"only {q} linear factors exist, need {count}")
        roots = sorted(rng.sample(range(q), count))
        poly = gf.Polynomial.from_roots(field, roots)
    elif kind == "quadratic":
        available = (q * q - q) // 2
        if count > available:
            raise NotEnoughFactors(
                f"only {available} monic irreducible quadratics exist, need {count}")
        # t^2 + b t + c irreducible over odd F_q iff b^2 - 4c is a nonsquare
        four = field.from_int(4)
        irreducible = [(b, c) for b in field.elements() for c in field.elements()
                       if gf.quadratic_character(
                           field, field.sub(field.mul(b, b), field.mul(four, c))) == -1]
        picks = sorted(rng.sample(range(len(irreducible)), count))
        poly = gf.Polynomial.one(field)
        for i in picks:
            b, c = irreducible[i]
            poly = poly * field.poly((c, b, 1))
    else:
        raise ValueError(f"unknown factor kind {kind!r}")
    if leading_coeff is not None:
        if leading_coeff == 0:
            raise ValueError("leading coefficient must be nonzero")
        poly = poly.scale(leading_coeff)
    return poly


# ---------------------------------------------------------------------------
# Frobenius on Jacobian 2-torsion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FrobeniusModule:
    """Frobenius action on Jac[2] as a 2g x 2g bitmask-row matrix over F_2."""
    g: int
    rows: tuple[int, ...]
    provenance: tuple[int, ...]      # factor-degree multiset of f, sorted

    @property
    def dim(self) -> int:
        return 2 * self.g

    def matrix_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.dim)] for r in self.rows]


def _module_from_cycle_type(cycles: Sequence[int]) -> list[int]:
    """Matrix of the permutation with the given cycle type acting on
    (sum-zero vectors in F_2^n) / (all-ones), n = sum(cycles), in the basis
    d_i = e_i + e_{i+1}, i = 0..n-3.

    A vector w in the sum-zero subspace with last coordinate zero has
    coordinates x_j = w_0 + ... + w_j (prefix parities); when the last
    coordinate is one, reduce w + all-ones instead.
    """
    n = sum(cycles)
    dim = n - 2
    perm = list(range(n))
    start = 0
    for length in cycles:
        for off in range(length):
            perm[start + off] = start + (off + 1) % length
        start += length
    ones = (1 << n) - 1
    cols = []
    for i in range(dim):
        w = (1 << perm[i]) ^ (1 << perm[i + 1])
        if (w >> (n - 1)) & 1:
            w ^= ones
        coords = 0
        acc = 0
        for j in range(dim):
            acc ^= (w >> j) & 1
            coords |= acc << j
        cols.append(coords)
    # cols[i] holds column i; transpose into row-bitmask convention
    return f2.transpose_rows(cols, dim)


def two_torsion_frobenius(curve: HyperellipticCurve) -> FrobeniusModule:
    """Factor f; the Frobenius permutes the 2g + 2 roots with cycle type
    equal to the factor-degree multiset, and the induced action on the root
    module is returned in the fixed difference basis."""
    f = curve.f
    factors = gf.poly_factor(f)
    if any(mult > 1 for _, mult in factors):
        raise NotSquarefree("f has a repeated factor")
    degrees = [p.degree for p, _ in factors]       # canonical factor order
    rows = _module_from_cycle_type(degrees)
    return FrobeniusModule(g=curve.genus, rows=tuple(rows),
                           provenance=tuple(sorted(degrees)))


def module_from_cycle_type(cycles: Sequence[int]) -> FrobeniusModule:
    """Synthetic module for a given Frobenius cycle type on the roots
    (sum(cycles) = 2g + 2); useful for randomized cross-checks."""
    n = sum(cycles)
    if n % 2 != 0 or n < 4:
        raise OddDegree(f"cycle lengths must sum to an even number >= 4, got {n}")
    rows = _module_from_cycle_type(list(cycles))
    return FrobeniusModule(g=(n - 2) // 2, rows=tuple(rows),
                           provenance=tuple(sorted(cycles)))


def fixed_space_dim(module: FrobeniusModule) -> int:
    """dim ker(M - I) over F_2."""
    rows = f2.add_rows(module.rows, f2.identity_rows(module.dim))
    return f2.kernel_dim(rows, module.dim)


def eigen_multiplicities(module: FrobeniusModule
                         ) -> list[tuple[gf.Polynomial, int]]:
    """Geometric multiplicities per irreducible factor of the characteristic
    polynomial over F_2: for a factor p of degree k, each of its k conjugate
    eigenvalues has multiplicity dim ker(p(M)) / k."""
    n = module.dim
    f2field = gf.make_field(2, 1)
    cp = gf.Polynomial(f2field, f2.charpoly(list(module.rows), n))
    out = []
    for p, _ in gf.poly_factor(cp):
        pm = f2.poly_eval_rows(p.coeffs, list(module.rows), n)
        kdim = f2.kernel_dim(pm, n)
        assert kdim % p.degree == 0
        out.append((p, kdim // p.degree))
    return out


def is_semisimple(module: FrobeniusModule) -> bool:
    """True iff the minimal polynomial is squarefree over F_2, checked as
    ker p(M) = ker p(M)^2 for every irreducible factor p of the
    characteristic polynomial."""
    n = module.dim
    rows = list(module.rows)
    f2field = gf.make_field(2, 1)
    cp = gf.Polynomial(f2field, f2.charpoly(rows, n))
    for p, _ in gf.poly_factor(cp):
        pm = f2.poly_eval_rows(p.coeffs, rows, n)
        pm2 = f2.matmul_rows(pm, pm)
        if f2.kernel_dim(pm, n) != f2.kernel_dim(pm2, n):
            return False
    return True


def tensor_invariant_dim(mc: FrobeniusModule, md: FrobeniusModule) -> int:
    """dim ker(MC (x) MD - I) over F_2, computed directly on the Kronecker
    product (the invariants of Frobenius on the tensor square)."""
    if mc.dim > 64 or md.dim > 64:
        raise TooLarge("factors must have dimension <= 64 each")
    big = f2.kron_rows(list(mc.rows), mc.dim, list(md.rows), md.dim)
    n = mc.dim * md.dim
    rows = f2.add_rows(big, f2.identity_rows(n))
    return f2.kernel_dim(rows, n)


def eigen_pairing_dim(mc: FrobeniusModule, md: FrobeniusModule) -> int:
    """Sum over eigenvalues lambda of m_{lambda,C} * m_{lambda^{-1},D}
    (algebraic-closure eigenspace dimensions), valid for the invariant
    dimension when at least one factor is semisimple.  Computed per
    irreducible factor p via its reciprocal polynomial."""
    multsc = eigen_multiplicities(mc)
    multsd = {p.coeffs: m for p, m in eigen_multiplicities(md)}
    f2field = gf.make_field(2, 1)
    total = 0
    for p, m in multsc:
        recip = gf.Polynomial(f2field, tuple(reversed(p.coeffs)))
        total += p.degree * m * multsd.get(recip.coeffs, 0)
    return total


def kunneth_invariants(mc: FrobeniusModule, md: FrobeniusModule) -> dict:
    """Invariant dimensions of H^1 and H^2 of the product surface:
    h1G = fixed(MC) + fixed(MD); h2G = tensor invariants + 2 (the two extra
    Kunneth summands carry the trivial action)."""
    return {
        "h1G": fixed_space_dim(mc) + fixed_space_dim(md),
        "h2G": tensor_invariant_dim(mc, md) + 2,
    }


# ---------------------------------------------------------------------------
# Golod-Shafarevich criterion and marked invariants
# ---------------------------------------------------------------------------

def golod_shafarevich_check(h1g: int, h2g: int, r_t: int, t: int) -> bool:
    """True iff h1G - r_T - 1 >= 0 and (h1G - r_T - 1)^2 >= 4 (h2G + t);
    pure integer arithmetic."""
    s = h1g - r_t - 1
    return s >= 0 and s * s >= 4 * (h2g + t)


def gs_check_chi_form(h1bar: int, alpha: int, r_t: int, chibar: int,
                      t: int) -> bool:
    """Euler-characteristic form of the criterion, implemented verbatim:
    (h1bar - alpha + r_T - 5)^2 >= 4 (chibar + 2 alpha + 2 r_T + 4 + t) with
    the same sign guard as the main check.

    Caution: the sign on r_T here does not match substituting
    h1G = h1bar - alpha into the main criterion; cross-evaluations may
    disagree and should be logged by callers rather than asserted.
    """
    s = h1bar - alpha + r_t - 5
    return s >= 0 and s * s >= 4 * (chibar + 2 * alpha + 2 * r_t + 4 + t)


def r_t_upper(rho: int) -> int:
    """Upper bound 3 rho + 1 for the rank r_T of the 4 rho marked points in
    the degree-zero-cycle group mod 2."""
    if rho < 1:
        raise ValueError(f"rho must be >= 1, got {rho}")
    return 3 * rho + 1


def r_t_bracket(t_size: int) -> tuple[int, int]:
    """General bracket 1 <= r_T <= #T for a nonempty marked set."""
    if t_size < 1:
        raise ValueError("marked set must be nonempty")
    return 1, t_size


def marked_invariants(h2g_bar: int, t: int) -> dict:
    """Marked-cohomology dimension relations: h^2 - h^1 of the marked surface
    equals h2G + t - 1, and the marked Euler characteristic equals t."""
    if t < 0:
        raise ValueError("t must be >= 0")
    return {"h2_minus_h1_marked": h2g_bar + t - 1, "chi_marked": t}


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

@dataclass
class TowerCertificate:
    q: int
    g1: int
    g2: int
    rho: int
    f: gf.Polynomial
    g: gf.Polynomial
    count_c: int
    count_d: int
    h1g: int
    h2g: int
    rt_upper: int
    t_size: int
    gs_lhs_squared: int
    gs_rhs: int
    conditions: dict            # {"points_C","points_D","gs"} -> bool
    gs_pass: bool

    def to_json_dict(self) -> dict:
        return {
            "q": self.q, "g1": self.g1, "g2": self.g2, "rho": self.rho,
            "f": list(self.f.coeffs), "g": list(self.g.coeffs),
            "count_C": self.count_c, "count_D": self.count_d,
            "h1G": self.h1g, "h2G": self.h2g,
            "rT_upper": self.rt_upper, "T_size": self.t_size,
            "gs_lhs_squared": self.gs_lhs_squared, "gs_rhs": self.gs_rhs,
            "gs_pass": self.gs_pass,
            "conditions": dict(self.conditions),
        }


def hyperelliptic_product_certificate(q: int, g1: int, g2: int, rho: int,
                                      seed: int = 1) -> TowerCertificate:
    """Certify the tower criterion on C x D with C split (f a product of
    2 g1 + 2 distinct linear factors) and D quadratic (g a product of g2 + 1
    distinct irreducible quadratics), both monic.

    The invariant dimensions are computed from the actual Frobenius modules;
    for even g2 the closed forms h1G = 2 g1 + g2 and h2G = 2 g1 g2 + 2 are
    asserted as a cross-check.  For odd g2 those closed forms are off by one
    invariant: the subsets picking one root from each quadratic pair have
    even size exactly when g2 is odd, and such a subset maps to its
    complement, hence is Frobenius-fixed in the quotient module.  The module
    values (h1G = 2 g1 + g2 + 1, h2G = 2 g1 (g2 + 1) + 2) are the correct
    ones and are what the certificate uses either way.

    The GS inequality is evaluated at the worst case r_T = 3 rho + 1.
    Hypothesis failures set condition flags rather than raising.
    """
    if rho < 1:
        raise ValueError(f"rho must be >= 1, got {rho}")
    f = sample_branch_poly(q, 2 * g1 + 2, "linear", seed)
    g = sample_branch_poly(q, g2 + 1, "quadratic", seed)
    field = f.field
    curve_c = HyperellipticCurve(field, f)
    curve_d = HyperellipticCurve(field, g)
    count_c = hyperelliptic_point_count(curve_c)
    count_d = hyperelliptic_point_count(curve_d)
    mc = two_torsion_frobenius(curve_c)
    md = two_torsion_frobenius(curve_d)
    kd = kunneth_invariants(mc, md)
    h1g, h2g = kd["h1G"], kd["h2G"]
    if g2 % 2 == 0:
        assert h1g == 2 * g1 + g2, "closed-form cross-check failed for h1G"
        assert h2g == 2 * g1 * g2 + 2, "closed-form cross-check failed for h2G"
    else:
        assert h1g == 2 * g1 + g2 + 1, "parity-corrected cross-check failed for h1G"
        assert h2g == 2 * g1 * (g2 + 1) + 2, "parity-corrected cross-check failed for h2G"
    rt = r_t_upper(rho)
    t_size = 4 * rho
    s = h1g - rt - 1
    conditions = {
        "points_C": 2 * g1 + 2 + 2 * rho <= count_c,
        "points_D": 2 * rho <= count_d,
        "gs": golod_shafarevich_check(h1g, h2g, rt, t_size),
    }
    return TowerCertificate(
        q=q, g1=g1, g2=g2, rho=rho, f=f, g=g,
        count_c=count_c, count_d=count_d, h1g=h1g, h2g=h2g,
        rt_upper=rt, t_size=t_size,
        gs_lhs_squared=s * s if s >= 0 else -(s * s),
        gs_rhs=4 * (h2g + t_size),
        conditions=conditions,
        gs_pass=all(conditions.values()),
    )


def search_parameters(q: int, g1_range: Sequence[int], g2_range: Sequence[int],
                      rho_range: Sequence[int], seed: int = 1,
                      workers: int = 1) -> list[TowerCertificate]:
    """All passing certificates over the given ranges, in (g1, g2, rho)
    order.  Candidates violating a structural sampling precondition are
    skipped; the total candidate count is budget-guarded."""
    if gf.field_from_order(q).q % 2 == 0:
        raise gf.EvenCharacteristic("tower search needs odd q")
    cands = sorted((a, b, r) for a in g1_range for b in g2_range for r in rho_range)
    if len(cands) > SEARCH_CANDIDATE_BUDGET:
        raise BudgetExceeded(
            f"{len(cands)} candidates exceed {SEARCH_CANDIDATE_BUDGET}")

    def attempt(tup):
        a, b, r = tup
        try:
            return hyperelliptic_product_certificate(q, a, b, r, seed)
        except (NotEnoughFactors, ValueError):
            return None

    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=workers) as ex:
            certs = list(ex.map(attempt, cands))
    else:
        certs = [attempt(t) for t in cands]
    return [c for c in certs if c is not None and c.gs_pass]
