"""Minimum-distance and dimension bounds over intersection numbers.

The central lower bound is the interpolating one: if a linear system Gamma
has a nonempty subsystem vanishing on the evaluation set P with
zero-dimensional base locus, then d >= n - Gamma.G.  The class (q+1)L for a
very ample L always qualifies, and qL does when P sits inside an affine chart
avoiding a member of |L|.  Alongside it this module computes the classical
alternatives (Aubry; Hansen's auxiliary-curve and Seshadri-constant bounds),
reports them jointly with applicability reasons, and lifts interpolating
reports along finite covers in which the evaluation set splits totally.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import floor
from typing import Optional, Sequence

from . import codes as cd
from . import surfaces as sf


class NotVeryAmple(ValueError):
    pass


class NegativeIntersection(ValueError):
    pass


class InvalidEpsilon(ValueError):
    pass


class InvalidXi(ValueError):
    pass


class InvalidDegree(ValueError):
    pass


# ---------------------------------------------------------------------------
# Individual bounds
# ---------------------------------------------------------------------------

def universal_gamma(surface: sf.SurfaceModel, l: sf.DivisorClass, q: int,
                    affine_chart: bool = False) -> sf.DivisorClass:
    """(q+1)L, or qL when the caller asserts the evaluation set avoids a
    member of |L| (affine chart); L must be very ample."""
    flags = sf.ampleness_flags(surface, l)
    if flags.very_ample is not True:
        state = "undecided" if flags.very_ample is None else "not very ample"
        raise NotVeryAmple(f"L = {l.coords} is {state} on {surface.kind}")
    return (q if affine_chart else q + 1) * l


def interpolating_bound(n: int, gamma: sf.DivisorClass, g: sf.DivisorClass) -> int:
    """d >= n - Gamma.G for an interpolating system Gamma."""
    return n - sf.intersect(gamma, g)


def gamma_square_check(gamma: sf.DivisorClass, n: int) -> bool:
    """Necessary condition Gamma^2 >= n for Gamma to interpolate n points."""
    return sf.intersect(gamma, gamma) >= n


def aubry_bound(n: int, q: int, d: sf.DivisorClass) -> int:
    """d >= n - (q+1) D^2 for a very ample D."""
    flags = sf.ampleness_flags(d.surface, d)
    if flags.very_ample is not True:
        state = "undecided" if flags.very_ample is None else "not very ample"
        raise NotVeryAmple(f"D = {d.coords} is {state}")
    return n - (q + 1) * sf.intersect(d, d)


def hansen_curve_bound(n: int, l_contained: int, point_cap: int,
                       lc_list: Sequence[int]) -> int:
    """Auxiliary-curve bound n - l*N - sum(L.C_i) where the curves C_i cover
    the evaluation set, each has at most N rational points, and at most l of
    them fit inside the zero set of a single section."""
    if any(v < 0 for v in lc_list):
        raise NegativeIntersection("all L.C_i must be >= 0")
    return n - l_contained * point_cap - sum(lc_list)


def hansen_curve_bound_uniform(n: int, l_contained: int, point_cap: int,
                               eta: int, num_curves: int) -> int:
    """Sharper form when L.C_i = eta <= N for every curve:
    n - l*N - (a - l)*eta."""
    if eta < 0:
        raise NegativeIntersection("eta must be >= 0")
    if eta > point_cap:
        raise NegativeIntersection(f"eta = {eta} exceeds the point cap {point_cap}")
    return n - l_contained * point_cap - (num_curves - l_contained) * eta


def hansen_seshadri_bound(n: int, l_sq: int, *,
                          epsilon: Optional[Fraction] = None,
                          xi: Optional[int] = None) -> int:
    """Seshadri family: floor(n - L^2/epsilon) with a caller-supplied lower
    bound epsilon on the Seshadri constant, or n - xi*L^2 when L^xi twisted
    by the point ideal is globally generated.  Exactly one of epsilon/xi."""
    if (epsilon is None) == (xi is None):
        raise ValueError("pass exactly one of epsilon (S1) or xi (S2)")
    if epsilon is not None:
        eps = Fraction(epsilon)
        if eps <= 0:
            raise InvalidEpsilon(f"epsilon must be positive, got {epsilon}")
        return floor(n - Fraction(l_sq) / eps)
    if xi < 1:
        raise InvalidXi(f"xi must be >= 1, got {xi}")
    return n - xi * l_sq


def seshadri_upper(gamma_dot_g: int, n: int) -> Fraction:
    """Gamma.G / n, an upper bound for the Seshadri constant at the
    evaluation set whenever Gamma interpolates it."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(gamma_dot_g, n)


def product_grid_bound(n: int, alpha: int, beta: int, a: int, b: int) -> int:
    """Grid of alpha x beta points on a product of curves, section bidegree
    (a, b): d >= n - alpha*b - beta*a (fiber-class pairing)."""
    return n - alpha * b - beta * a


def hirzebruch_grid_bound(a: int, b: int, e: int, u: int, v: int) -> int:
    """Grid of a x b affine points on the Hirzebruch surface with parameter e,
    divisor (u, v): d >= ab - (a + b*e)*v - u*b + e*b*v."""
    return a * b - (a + b * e) * v - u * b + e * b * v


# ---------------------------------------------------------------------------
# Joint reports
# ---------------------------------------------------------------------------

@dataclass
class BoundEntry:
    name: str
    value: Optional[int]
    applicable: bool
    reason: str

    def to_json_dict(self) -> dict:
        return {"name": self.name, "value": self.value,
                "applicable": self.applicable, "reason": self.reason}


@dataclass
class BoundReport:
    n: int
    k_lower: Optional[int]
    entries: list[BoundEntry] = dc_field(default_factory=list)
    exact: Optional[dict] = None       # {"k": int, "d": int}

    def entry(self, name: str) -> Optional[BoundEntry]:
        return next((e for e in self.entries if e.name == name), None)

    def defect(self) -> Optional[int]:
        inter = self.entry("interpolating")
        if self.exact and inter and inter.applicable:
            return self.exact["d"] - inter.value
        return None

    def to_json_dict(self) -> dict:
        d = {
            "n": self.n,
            "k_lower": self.k_lower if self.k_lower is not None else "n/a",
            "entries": [e.to_json_dict() for e in self.entries],
            "exact": self.exact,
        }
        defect = self.defect()
        if defect is not None:
            d["defect"] = defect
        return d


def _default_very_ample(surface: sf.SurfaceModel) -> Optional[sf.DivisorClass]:
    if surface.kind == sf.P2:
        return surface.divisor(1)
    if surface.kind == sf.P1XP1:
        return surface.divisor(1, 1)
    if surface.kind == sf.HIRZEBRUCH:
        (e,) = surface.params
        return surface.divisor(e + 1, 1)
    return None


def _find_ample_h(surface: sf.SurfaceModel, g: sf.DivisorClass,
                  box: int = 10) -> Optional[sf.DivisorClass]:
    # heuristic coordinate-box scan, sufficient for the catalog
    k = surface.canonical
    if surface.ns_rank == 1:
        candidates = [surface.divisor(a) for a in range(1, box + 1)]
    else:
        candidates = [surface.divisor(a, b)
                      for a in range(-box, box + 1) for b in range(-box, box + 1)]
    for h in candidates:
        if sf.ampleness_flags(surface, h).ample and \
                sf.intersect(g, h) > sf.intersect(k, h):
            return h
    return None


def parameter_report(surface: sf.SurfaceModel, g: sf.DivisorClass, q: int, *,
                     gamma: str = "universal",
                     gamma_class: Optional[sf.DivisorClass] = None,
                     gamma_l: Optional[sf.DivisorClass] = None,
                     tag: str = "all",
                     grid: Optional[tuple[Sequence[int], Sequence[int]]] = None,
                     exact_budget: Optional[int] = None,
                     epsilon: Optional[Fraction] = None,
                     xi: Optional[int] = None,
                     workers: int = 1) -> BoundReport:
    """Assemble every applicable bound for the code on `surface` with divisor
    `g` and evaluation set selected by `tag`.

    Inapplicable bounds are reported with reasons, never raised.  gamma is
    "universal" ((q+1)L) or "universal-affine" (qL, caller asserting the
    point set avoids a member of |L|); gamma_class overrides both.  Seshadri
    data (epsilon, xi) is caller-supplied.  With exact_budget set, the code
    is built and its exact (k, d) attached when the enumeration fits.
    """
    if tag == "grid":
        pts = cd.rational_points(surface, q, "grid", grid)
        n = len(pts.points)
        grid_sizes = (len(pts.grid[0]), len(pts.grid[1]))
    else:
        n = sf.point_count(surface, q)
        grid_sizes = None
    report = BoundReport(n=n, k_lower=None)

    # interpolating bound
    gamma_div = None
    if gamma_class is not None:
        gamma_div = gamma_class
        gamma_reason = f"caller-supplied Gamma = {gamma_div.coords}"
    else:
        l = gamma_l if gamma_l is not None else _default_very_ample(surface)
        if l is None:
            report.entries.append(BoundEntry(
                "interpolating", None, False,
                "no very ample class known in the catalog for this surface"))
        else:
            try:
                affine = gamma == "universal-affine"
                gamma_div = universal_gamma(surface, l, q, affine)
                gamma_reason = (f"Gamma = {'q' if affine else '(q+1)'}L with "
                                f"L = {l.coords}"
                                + ("; caller asserts the point set avoids a "
                                   "member of |L|" if affine else ""))
            except NotVeryAmple as exc:
                report.entries.append(BoundEntry("interpolating", None, False, str(exc)))
    if gamma_div is not None:
        gdotg = sf.intersect(gamma_div, g)
        screen = gamma_square_check(gamma_div, n)
        report.entries.append(BoundEntry(
            "interpolating", n - gdotg, True,
            gamma_reason + f"; Gamma.G = {gdotg}; Gamma^2 = "
            f"{sf.intersect(gamma_div, gamma_div)} >= n is {screen}"))

    # Aubry
    try:
        report.entries.append(BoundEntry(
            "aubry", aubry_bound(n, q, g), True, f"G = {g.coords} is very ample"))
    except NotVeryAmple as exc:
        report.entries.append(BoundEntry("aubry", None, False, str(exc)))

    # Hansen (S), caller-supplied data only
    if epsilon is not None:
        l_sq = sf.intersect(g, g)
        try:
            report.entries.append(BoundEntry(
                "hansen_S1", hansen_seshadri_bound(n, l_sq, epsilon=epsilon),
                True, f"caller-supplied Seshadri lower bound epsilon = {epsilon}"))
        except InvalidEpsilon as exc:
            report.entries.append(BoundEntry("hansen_S1", None, False, str(exc)))
    if xi is not None:
        l_sq = sf.intersect(g, g)
        try:
            report.entries.append(BoundEntry(
                "hansen_S2", hansen_seshadri_bound(n, l_sq, xi=xi),
                True, f"caller-supplied xi = {xi}"))
        except InvalidXi as exc:
            report.entries.append(BoundEntry("hansen_S2", None, False, str(exc)))

    # grid-specific bound
    if grid_sizes is not None:
        a_sz, b_sz = grid_sizes
        if surface.kind == sf.HIRZEBRUCH:
            (e,) = surface.params
            u, v = g.coords
            report.entries.append(BoundEntry(
                "grid", hirzebruch_grid_bound(a_sz, b_sz, e, u, v), True,
                f"affine {a_sz}x{b_sz} grid on Hirzebruch({e})"))
        elif surface.kind == sf.P1XP1:
            a, b = g.coords
            report.entries.append(BoundEntry(
                "grid", product_grid_bound(n, a_sz, b_sz, a, b), True,
                f"{a_sz}x{b_sz} grid on the quadric"))

    # dimension lower bound: needs injectivity (n > Gamma.G) and an ample H
    if gamma_div is not None:
        gdotg = sf.intersect(gamma_div, g)
        if n > gdotg:
            h = _find_ample_h(surface, g)
            if h is not None:
                report.k_lower = sf.riemann_roch_lower(surface, g, h)
    # exact parameters
    if exact_budget and surface.kind in (sf.P2, sf.P1XP1, sf.HIRZEBRUCH):
        code = cd.build_code(surface, g, q, tag, grid)
        try:
            d_exact = cd.exact_min_distance(code, exact_budget, workers)
            report.exact = {"k": code.k, "d": d_exact}
        except cd.BudgetExceeded:
            report.exact = None
    return report


def lifted_bound(report: BoundReport, deg: int) -> BoundReport:
    """Transport a report along a degree-`deg` finite cover in which the
    evaluation set splits totally: n and Gamma.G both scale by deg, so the
    interpolating value scales by deg and the relative bound is unchanged.
    The other entries do not transport from base data alone."""
    if deg < 1:
        raise InvalidDegree(f"degree must be >= 1, got {deg}")
    inter = report.entry("interpolating")
    if inter is None or not inter.applicable:
        raise InvalidDegree("report carries no applicable interpolating bound to lift")
    out = BoundReport(n=deg * report.n, k_lower=None)
    for e in report.entries:
        if e.name == "interpolating":
            out.entries.append(BoundEntry(
                "interpolating", deg * e.value, True,
                f"pullback along a degree-{deg} totally split cover; "
                f"relative bound {Fraction(e.value, report.n)} preserved"))
        elif e.name == "aubry":
            out.entries.append(BoundEntry(
                "aubry", None, False,
                "not liftable from base data: very ampleness of the pullback "
                "must be asserted at every level"))
        elif e.name in ("hansen_S1", "hansen_S2"):
            out.entries.append(BoundEntry(
                e.name, None, False,
                "liftable with caller inputs: Seshadri constants/global "
                "generation transport along unramified covers"))
        else:
            out.entries.append(BoundEntry(e.name, None, False,
                                          "not liftable from base data"))
    return out
