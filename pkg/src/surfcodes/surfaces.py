"""Numerical surface models: Neron-Severi lattices with intersection form,
canonical class, Euler characteristics, and positivity predicates.

Every bound computed downstream consumes only intersection numbers, chi(O),
and point counts, so a surface here is a small catalog entry rather than a
scheme:

* ``P2``            basis (L),      gram [[1]],            K = -3L
* ``P1xP1``         basis (H, V),   gram [[0,1],[1,0]],    K = -2H - 2V
* ``Hirzebruch(e)`` basis (F, S),   gram [[0,1],[1,-e]],   K = -(e+2)F - 2S
* ``CurveProduct``  basis (FC, FD), gram [[0,1],[1,0]],    K = (2gD-2)FC + (2gC-2)FD

A ``CurveProduct`` carries caller-supplied point counts N_C, N_D; it supports
bound computations only, not code construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

P2 = "P2"
P1XP1 = "P1xP1"
HIRZEBRUCH = "Hirzebruch"
CURVE_PRODUCT = "CurveProduct"

KINDS = (P2, P1XP1, HIRZEBRUCH, CURVE_PRODUCT)


class InvalidParams(ValueError):
    pass


class SurfaceMismatch(ValueError):
    pass


class UnsupportedSurface(ValueError):
    pass


class PreconditionFailed(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceModel:
    kind: str
    params: tuple
    basis: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    canonical_coords: tuple[int, ...]
    chi_o: int
    chi_et: int

    @property
    def ns_rank(self) -> int:
        return len(self.basis)

    @property
    def canonical(self) -> "DivisorClass":
        return DivisorClass(self, self.canonical_coords)

    def divisor(self, *coords: int) -> "DivisorClass":
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        return DivisorClass(self, tuple(int(c) for c in coords))

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": list(self.params),
            "gram": [list(r) for r in self.gram],
            "canonical": list(self.canonical_coords),
            "chi_O": self.chi_o,
            "chi_et": self.chi_et,
        }

    def __repr__(self) -> str:
        if self.params:
            return f"SurfaceModel({self.kind}{self.params})"
        return f"SurfaceModel({self.kind})"


@dataclass(frozen=True)
class DivisorClass:
    surface: SurfaceModel
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.surface.ns_rank:
            raise InvalidParams(
                f"divisor needs {self.surface.ns_rank} coordinates, got {len(self.coords)}")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _same_surface(self, other)
        return DivisorClass(self.surface,
                            tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        _same_surface(self, other)
        return DivisorClass(self.surface,
                            tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.surface, tuple(-a for a in self.coords))

    def __rmul__(self, c: int) -> "DivisorClass":
        return DivisorClass(self.surface, tuple(c * a for a in self.coords))

    __mul__ = __rmul__

    def dot(self, other: "DivisorClass") -> int:
        return intersect(self, other)

    def __repr__(self) -> str:
        return f"DivisorClass{self.coords}"


def _same_surface(d: DivisorClass, e: DivisorClass) -> None:
    if d.surface != e.surface:
        raise SurfaceMismatch("divisor classes live on different surfaces")


def projective_plane() -> SurfaceModel:
    return SurfaceModel(P2, (), ("L",), ((1,),), (-3,), 1, 3)


def quadric_p1xp1() -> SurfaceModel:
    return SurfaceModel(P1XP1, (), ("H", "V"), ((0, 1), (1, 0)), (-2, -2), 1, 4)


def hirzebruch(e: int) -> SurfaceModel:
    if e < 0:
        raise InvalidParams(f"Hirzebruch parameter e must be >= 0, got {e}")
    return SurfaceModel(HIRZEBRUCH, (e,), ("F", "S"),
                        ((0, 1), (1, -e)), (-(e + 2), -2), 1, 4)


def curve_product(g_c: int, g_d: int, n_c: int, n_d: int) -> SurfaceModel:
    if g_c < 0 or g_d < 0:
        raise InvalidParams("genera must be >= 0")
    if n_c < 0 or n_d < 0:
        raise InvalidParams("point counts must be >= 0")
    chi_o = (g_c - 1) * (g_d - 1)
    chi_et = (2 - 2 * g_c) * (2 - 2 * g_d)
    return SurfaceModel(CURVE_PRODUCT, (g_c, g_d, n_c, n_d), ("FC", "FD"),
                        ((0, 1), (1, 0)),
                        (2 * g_d - 2, 2 * g_c - 2), chi_o, chi_et)


def make_surface(kind: str, **params) -> SurfaceModel:
    if kind == P2:
        return projective_plane()
    if kind == P1XP1:
        return quadric_p1xp1()
    if kind == HIRZEBRUCH:
        return hirzebruch(int(params["e"]))
    if kind == CURVE_PRODUCT:
        return curve_product(int(params["g_c"]), int(params["g_d"]),
                             int(params["n_c"]), int(params["n_d"]))
    raise InvalidParams(f"unknown surface kind {kind!r}")


def surface_from_json(d: dict) -> SurfaceModel:
    kind = d["kind"]
    params = d.get("params", [])
    if kind == HIRZEBRUCH:
        return hirzebruch(int(params[0]))
    if kind == CURVE_PRODUCT:
        return curve_product(*[int(x) for x in params])
    return make_surface(kind)


def intersect(d: DivisorClass, e: DivisorClass) -> int:
    """Intersection number D.E via the surface's Gram matrix."""
    _same_surface(d, e)
    g = d.surface.gram
    return sum(d.coords[i] * g[i][j] * e.coords[j]
               for i in range(len(g)) for j in range(len(g)))


@dataclass(frozen=True)
class AmpleFlags:
    """very_ample is None when the catalog provides no criterion (CurveProduct)."""
    ample: bool
    very_ample: Optional[bool]
    base_point_free: bool


def ampleness_flags(surface: SurfaceModel, d: DivisorClass) -> AmpleFlags:
    """Coordinate criteria for ample / very ample / base-point-free.

    On Hirzebruch surfaces the strict very-ampleness criterion u >= e*v + 1
    is used; base-point-freeness only needs u >= e*v.  For a product of
    curves the degrees pair with the opposite factor's genus: a*FC + b*FD is
    base point free once a >= 2*gD and b >= 2*gC, and very-ampleness is left
    undecided (None).
    """
    if d.surface != surface:
        raise SurfaceMismatch("divisor is not on this surface")
    if surface.kind == P2:
        (deg,) = d.coords
        va = deg >= 1
        return AmpleFlags(va, va, deg >= 0)
    if surface.kind == P1XP1:
        a, b = d.coords
        va = a >= 1 and b >= 1
        return AmpleFlags(va, va, a >= 0 and b >= 0)
    if surface.kind == HIRZEBRUCH:
        (e,) = surface.params
        u, v = d.coords
        va = v >= 1 and u >= e * v + 1
        bpf = v >= 0 and u >= e * v
        return AmpleFlags(va, va, bpf)
    if surface.kind == CURVE_PRODUCT:
        g_c, g_d, _, _ = surface.params
        a, b = d.coords
        ample = a >= 1 and b >= 1
        bpf = a >= 2 * g_d and b >= 2 * g_c
        return AmpleFlags(ample, None if ample else False, bpf)
    raise UnsupportedSurface(surface.kind)


def riemann_roch_lower(surface: SurfaceModel, g: DivisorClass,
                       h: DivisorClass) -> int:
    """Lower bound (1/2) G.(G - K) + chi(O) for h^0(G), valid once an ample H
    with G.H > K.H certifies the vanishing of h^2."""
    flags = ampleness_flags(surface, h)
    if not flags.ample:
        raise PreconditionFailed(f"H = {h.coords} is not ample")
    k = surface.canonical
    if intersect(g, h) <= intersect(k, h):
        raise PreconditionFailed(
            f"G.H = {intersect(g, h)} must exceed K.H = {intersect(k, h)}")
    prod = intersect(g, g - k)
    assert prod % 2 == 0, "G.(G-K) is even on a smooth surface"
    return prod // 2 + surface.chi_o


def point_count(surface: SurfaceModel, q: int) -> int:
    if surface.kind == P2:
        return q * q + q + 1
    if surface.kind in (P1XP1, HIRZEBRUCH):
        return (q + 1) ** 2
    if surface.kind == CURVE_PRODUCT:
        _, _, n_c, n_d = surface.params
        return n_c * n_d
    raise UnsupportedSurface(surface.kind)


def noether_identity(surface: SurfaceModel) -> bool:
    """12 chi(O) = K^2 + chi_et; holds for every catalog instance."""
    k = surface.canonical
    return 12 * surface.chi_o == intersect(k, k) + surface.chi_et
