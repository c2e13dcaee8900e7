"""Evaluation codes on the catalog surfaces as explicit generator matrices.

A code is built by evaluating a monomial basis of the sections of a divisor
class at a canonical list of rational points; the exact minimum distance is
then available by exhaustive search over projective message representatives.

Canonical point representatives
-------------------------------
For each projective factor the representative is scaled so its first nonzero
coordinate is 1.  On a Hirzebruch surface with Cox coordinates
(t0, t1, x0, x1) and torus weights (lambda: t-pair and x1 by lambda^e;
mu: x-pair), the t-pair is normalized first (fixing lambda, which rescales
x1 by lambda^e), then the x-pair (fixing mu).  Evaluating at a different
representative rescales a whole generator column, which changes no code
parameter; canonicalization just makes outputs bit-exact.

Grid evaluation sets live in the affine chart t1 = x1 = 1 (s0-coordinate
chart for each P^1 factor of the quadric) and are stored as coordinate pairs;
sections are evaluated there in dehomogenized form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import gf
from . import surfaces as sf

DEFAULT_DISTANCE_BUDGET = 10_000_000
_BLOCK = 1 << 14


class UnsupportedSubset(ValueError):
    pass


class EmptySystem(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# Rational points
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PointList:
    kind: str
    q: int
    tag: str                       # "all" | "grid"
    points: tuple[tuple[int, ...], ...]
    grid: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None


def _p1_reps(field: gf.FieldSpec) -> list[tuple[int, int]]:
    """Canonical representatives of P^1(F_q): (1, c) and (0, 1)."""
    return [(1, c) for c in field.elements()] + [(0, 1)]


def rational_points(surface: sf.SurfaceModel, q: int, tag: str = "all",
                    grid: Optional[tuple[Sequence[int], Sequence[int]]] = None
                    ) -> PointList:
    """Deterministically ordered canonical point list.

    tag="grid" takes grid=(A, B) with A, B subsets of F_q element indices and
    is supported on the quadric and the Hirzebruch surfaces only.
    """
    field = gf.field_from_order(q)
    if tag == "all":
        if surface.kind == sf.P2:
            pts = [(1, y, z) for y in field.elements() for z in field.elements()]
            pts += [(0, 1, z) for z in field.elements()]
            pts += [(0, 0, 1)]
        elif surface.kind in (sf.P1XP1, sf.HIRZEBRUCH):
            reps = _p1_reps(field)
            pts = [a + b for a in reps for b in reps]
        else:
            raise UnsupportedSubset(
                f"{surface.kind} has no point enumeration (bounds only)")
        pts.sort()
        return PointList(surface.kind, q, "all", tuple(pts))
    if tag == "grid":
        if surface.kind not in (sf.P1XP1, sf.HIRZEBRUCH):
            raise UnsupportedSubset(f"grid points are not defined on {surface.kind}")
        if grid is None:
            grid = (tuple(field.elements()), tuple(field.elements()))
        a, b = (tuple(sorted(set(int(x) for x in grid[0]))),
                tuple(sorted(set(int(x) for x in grid[1]))))
        for c in a + b:
            if not 0 <= c < q:
                raise UnsupportedSubset(f"grid entry {c} is not an element of F_{q}")
        pts = [(x, y) for x in a for y in b]
        return PointList(surface.kind, q, "grid", tuple(pts), (a, b))
    raise UnsupportedSubset(f"unknown point tag {tag!r}")


# ---------------------------------------------------------------------------
# Monomial section bases
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialBasis:
    kind: str
    divisor: tuple[int, ...]
    exponents: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.exponents)


def section_basis(surface: sf.SurfaceModel, g: sf.DivisorClass) -> MonomialBasis:
    """Monomial exponent tuples spanning the sections of g, in lexicographic
    order.

    P2, degree d:        (i, j, k), i + j + k = d
    P1xP1, (a, b):       (i0, i1, j0, j1), i0 + i1 = a, j0 + j1 = b
    Hirzebruch(e),(u,v): (al, be, ga, de), ga + de = v, al + be = u - e*de >= 0
    """
    exps: list[tuple[int, ...]] = []
    if surface.kind == sf.P2:
        (d,) = g.coords
        exps = [(i, j, d - i - j)
                for i in range(d + 1) for j in range(d - i + 1)] if d >= 0 else []
    elif surface.kind == sf.P1XP1:
        a, b = g.coords
        if a >= 0 and b >= 0:
            exps = [(i, a - i, j, b - j)
                    for i in range(a + 1) for j in range(b + 1)]
    elif surface.kind == sf.HIRZEBRUCH:
        (e,) = surface.params
        u, v = g.coords
        if v >= 0:
            for de in range(v + 1):
                rest = u - e * de
                for al in range(rest + 1):
                    exps.append((al, rest - al, v - de, de))
    else:
        raise sf.UnsupportedSurface(
            f"{surface.kind} has no section basis (bounds only)")
    if not exps:
        raise EmptySystem(f"no sections for divisor {g.coords} on {surface.kind}")
    exps.sort()
    return MonomialBasis(surface.kind, g.coords, tuple(exps))


def _eval_monomial(field: gf.FieldSpec, exp: tuple[int, ...],
                   point: tuple[int, ...]) -> int:
    acc = 1
    for e, c in zip(exp, point):
        if e:
            if c == 0:
                return 0
            acc = field.mul(acc, field.pow(c, e))
    return acc


def _dehomogenized(kind: str, exp: tuple[int, ...]) -> tuple[int, int]:
    # chart t1 = x1 = 1 on Hirzebruch (exponents al, be, ga, de -> t^al x^ga);
    # chart s1 = t1 = 1 on the quadric (exponents i0, i1, j0, j1 -> s^i0 t^j0).
    # Both layouts put the surviving exponents at slots 0 and 2.
    return exp[0], exp[2]


# ---------------------------------------------------------------------------
# Linear codes
# ---------------------------------------------------------------------------

@dataclass
class LinearCode:
    field: gf.FieldSpec
    n: int
    k: int
    generator: tuple[tuple[int, ...], ...]   # k independent rows
    section_count: int
    surface: Optional[sf.SurfaceModel] = None
    divisor: Optional[tuple[int, ...]] = None
    tag: str = "all"
    grid: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None

    def to_json_dict(self) -> dict:
        d = {
            "field": self.field.to_json_dict(),
            "n": self.n,
            "k": self.k,
            "surface": self.surface.to_json_dict() if self.surface else None,
            "divisor": list(self.divisor) if self.divisor else None,
            "point_tag": (self.tag if self.tag == "all" else
                          {"grid": {"A": list(self.grid[0]), "B": list(self.grid[1])}}),
            "section_count": self.section_count,
            "generator": [int(x) for row in self.generator for x in row],
        }
        return d

    def generator_csv(self) -> str:
        return "\n".join(",".join(str(x) for x in row) for row in self.generator) + "\n"


def code_from_json_dict(d: dict) -> LinearCode:
    field = gf.field_from_json(d["field"])
    n, k = int(d["n"]), int(d["k"])
    flat = [int(x) for x in d["generator"]]
    if len(flat) != n * k:
        raise ValueError(f"generator has {len(flat)} entries, expected {n * k}")
    rows = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(k))
    surf = sf.surface_from_json(d["surface"]) if d.get("surface") else None
    tagspec = d.get("point_tag", "all")
    if isinstance(tagspec, dict):
        tag = "grid"
        grid = (tuple(int(x) for x in tagspec["grid"]["A"]),
                tuple(int(x) for x in tagspec["grid"]["B"]))
    else:
        tag, grid = tagspec, None
    return LinearCode(field=field, n=n, k=k, generator=rows,
                      section_count=int(d.get("section_count", k)), surface=surf,
                      divisor=tuple(d["divisor"]) if d.get("divisor") else None,
                      tag=tag, grid=grid)


def save_code(code: LinearCode, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(code.to_json_dict(), fh, indent=2)
        fh.write("\n")


def load_code(path: str) -> LinearCode:
    with open(path, "r", encoding="utf-8") as fh:
        return code_from_json_dict(json.load(fh))


def matrix_rank(field: gf.FieldSpec, rows: Sequence[Sequence[int]]) -> int:
    rank, _ = _row_reduce(field, rows)
    return rank


def _row_reduce(field: gf.FieldSpec, rows: Sequence[Sequence[int]]
                ) -> tuple[int, list[int]]:
    """Gaussian elimination with exact field arithmetic; returns the rank and
    the indices of a maximal independent subset of the original rows."""
    work = [list(r) for r in rows]
    idx = list(range(len(work)))
    selected: list[int] = []
    col = 0
    ncols = len(work[0]) if work else 0
    r = 0
    while r < len(work) and col < ncols:
        piv = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        work[r], work[piv] = work[piv], work[r]
        idx[r], idx[piv] = idx[piv], idx[r]
        selected.append(idx[r])
        inv = field.inv(work[r][col])
        for i in range(r + 1, len(work)):
            c = work[i][col]
            if c:
                factor = field.mul(c, inv)
                work[i] = [field.sub(a, field.mul(factor, b))
                           for a, b in zip(work[i], work[r])]
        r += 1
        col += 1
    return r, sorted(selected)


def build_code(surface: sf.SurfaceModel, g: sf.DivisorClass, q: int,
               tag: str = "all",
               grid: Optional[tuple[Sequence[int], Sequence[int]]] = None
               ) -> LinearCode:
    """Generator matrix of the evaluation code: rows are basis monomials,
    columns are canonical points; rows are then reduced to a basis (k = rank)
    while the full monomial count stays available as metadata."""
    basis = section_basis(surface, g)
    pts = rational_points(surface, q, tag, grid)
    if not pts.points:
        raise EmptySystem("empty evaluation set")
    field = gf.field_from_order(q)
    rows = []
    for exp in basis.exponents:
        if pts.tag == "grid":
            ex, ey = _dehomogenized(surface.kind, exp)
            rows.append([field.mul(field.pow(t, ex), field.pow(x, ey))
                         for (t, x) in pts.points])
        else:
            rows.append([_eval_monomial(field, exp, p) for p in pts.points])
    rank, keep = _row_reduce(field, rows)
    generator = tuple(tuple(rows[i]) for i in keep)
    return LinearCode(field=field, n=len(pts.points), k=rank, generator=generator,
                      section_count=len(basis), surface=surface, divisor=g.coords,
                      tag=pts.tag, grid=pts.grid)


# ---------------------------------------------------------------------------
# Exact minimum distance
# ---------------------------------------------------------------------------

def enumeration_size(q: int, k: int) -> int:
    """Number of projective message representatives, (q^k - 1)/(q - 1)."""
    return (q ** k - 1) // (q - 1)


def _min_weight_for_leading(field, gen_np, add_t, mul_t, lead: int) -> int:
    """Minimum codeword weight over messages whose first nonzero coordinate
    is 1 at position `lead`; exhaustive over the q^(k-1-lead) tails."""
    k, n = gen_np.shape
    q = field.q
    free = list(range(lead + 1, k))
    base = gen_np[lead]
    t = len(free)
    total = q ** t
    best = n + 1
    for start in range(0, total, _BLOCK):
        cnt = min(_BLOCK, total - start)
        block = np.arange(start, start + cnt, dtype=np.int64)
        cw = np.broadcast_to(base, (cnt, n)).copy()
        rem = block
        for j in free:
            rem, digit = np.divmod(rem, q)
            scaled = mul_t[digit[:, None], gen_np[j][None, :]]
            cw = add_t[cw, scaled]
        w = int(np.count_nonzero(cw, axis=1).min()) if cnt else n + 1
        if w < best:
            best = w
            if best <= 1:
                return best
    return best


def exact_min_distance(code: LinearCode,
                       budget: int = DEFAULT_DISTANCE_BUDGET,
                       workers: int = 1) -> int:
    """Exact minimum Hamming weight over nonzero codewords.

    Enumerates projective message representatives (first nonzero message
    coordinate fixed to 1) since scaling a message scales the codeword and
    preserves its weight.  The work splits into disjoint blocks by leading
    index with a min-reduce, so results are schedule-independent for any
    worker count.
    """
    if code.k == 0:
        raise EmptySystem("zero code has no minimum distance")
    q = code.field.q
    total = enumeration_size(q, code.k)
    if total > budget:
        raise BudgetExceeded(
            f"enumeration needs {total} messages, budget is {budget}")
    add_t, mul_t = code.field.numpy_tables()
    gen_np = np.array(code.generator, dtype=np.uint16)
    leads = list(range(code.k))
    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(
                lambda i: _min_weight_for_leading(code.field, gen_np, add_t, mul_t, i),
                leads))
        return min(results)
    best = code.n + 1
    for i in leads:
        w = _min_weight_for_leading(code.field, gen_np, add_t, mul_t, i)
        if w < best:
            best = w
            if best <= 1:
                break
    return best


# ---------------------------------------------------------------------------
# Rational-point locus of the Frobenius difference forms
# ---------------------------------------------------------------------------

def _locus_survivors(ell: int, q: int, m: int, budget: int
                     ) -> tuple[set, set]:
    """Survivor set of the Frobenius-difference forms in P^ell(F_{q^m}) and
    the embedded P^ell(F_q), both as canonical-representative sets."""
    field = gf.field_from_order(q)
    if q ** m > gf.MAX_FIELD_SIZE:
        raise gf.FieldTooLarge(f"{q}^{m} exceeds {gf.MAX_FIELD_SIZE}")
    ext, emb = gf.extension_field(field, m)
    npoints = (ext.q ** (ell + 1) - 1) // (ext.q - 1)
    if npoints > budget:
        raise BudgetExceeded(f"P^{ell}(F_{ext.q}) has {npoints} points, "
                             f"budget is {budget}")
    subfield = set(emb)

    def reps(dim: int):
        for tail_len in range(dim + 1):
            # first nonzero coordinate at position dim - tail_len
            prefix = (0,) * (dim - tail_len) + (1,)
            tails = [()]
            for _ in range(tail_len):
                tails = [t + (c,) for t in tails for c in ext.elements()]
            for t in tails:
                yield prefix + t

    survivors = set()
    for pt in reps(ell):
        ok = True
        for i in range(ell + 1):
            for j in range(i + 1, ell + 1):
                a, b = pt[i], pt[j]
                if ext.mul(ext.pow(a, q), b) != ext.mul(a, ext.pow(b, q)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            survivors.add(pt)
    expected = {pt for pt in reps(ell) if all(c in subfield for c in pt)}
    return survivors, expected


def rational_locus_check(ell: int, q: int, m: int,
                         budget: int = DEFAULT_DISTANCE_BUDGET) -> bool:
    """True iff the common zero locus in P^ell(F_{q^m}) of the forms
    x_i^q x_j - x_i x_j^q (0 <= i < j <= ell) is exactly P^ell(F_q)."""
    survivors, expected = _locus_survivors(ell, q, m, budget)
    return survivors == expected
