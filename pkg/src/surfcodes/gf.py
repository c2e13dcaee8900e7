"""Exact arithmetic in small finite fields F_q with q = p^m <= 2^16.

Elements are index-coded: the integer sum(a_i * p^i) in [0, q) stands for the
polynomial residue a_0 + a_1*x + ... + a_{m-1}*x^{m-1} modulo the field's
defining polynomial.  Index 0 is the additive identity and index 1 the
multiplicative identity.

The defining modulus is canonical: among all monic irreducible degree-m
polynomials over F_p, we take the one whose coefficient tuple
(c_0, ..., c_{m-1}), read as the base-p integer sum(c_i * p^i), is smallest.
This makes every field, and hence every downstream computation, reproducible
bit-for-bit without an external polynomial table.  For prime fields the rule
yields the modulus x.

Multiplication and division go through exponential/logarithm tables built once
per field from a fixed multiplicative generator (the smallest index of maximal
order); addition is digit-wise base-p (a plain XOR in characteristic two).
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterable, Sequence

MAX_FIELD_SIZE = 65536

# Seed for the randomized equal-degree splitting step of poly_factor.  The
# output order is canonical (sorted) so the seed only affects internal work,
# but fixing it keeps the work itself reproducible.
FACTOR_SEED = 1729


class NotPrime(ValueError):
    """p is not prime (or q is not a prime power)."""


class FieldTooLarge(ValueError):
    """Requested field order exceeds 2^16."""


class DivisionByZero(ZeroDivisionError):
    """Division or inversion of the zero element."""


class EvenCharacteristic(ValueError):
    """Operation requires odd q."""


class ZeroPolynomial(ValueError):
    """Operation rejects the zero polynomial."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Dense polynomial helpers over the prime field F_p (coefficient lists of
# plain ints, ascending degree).  Only used to bootstrap the canonical
# modulus before any FieldSpec exists.
# ---------------------------------------------------------------------------

def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(p: int, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(out)


def _fp_mod(p: int, a: Sequence[int], f: Sequence[int]) -> list[int]:
    # f monic
    r = list(a)
    df = len(f) - 1
    while len(r) - 1 >= df and r:
        lead = r[-1]
        shift = len(r) - 1 - df
        if lead:
            for i in range(df + 1):
                r[shift + i] = (r[shift + i] - lead * f[i]) % p
        r.pop()
        _fp_trim(r)
    return r


def _fp_powmod(p: int, a: Sequence[int], e: int, f: Sequence[int]) -> list[int]:
    result = [1]
    base = _fp_mod(p, a, f)
    while e:
        if e & 1:
            result = _fp_mod(p, _fp_mul(p, result, base), f)
        base = _fp_mod(p, _fp_mul(p, base, base), f)
        e >>= 1
    return result


def _fp_gcd(p: int, a: Sequence[int], b: Sequence[int]) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _fp_mod(p, a, _fp_monic(p, b))
    return _fp_monic(p, a)


def _fp_monic(p: int, a: Sequence[int]) -> list[int]:
    a = _fp_trim(list(a))
    if not a or a[-1] == 1:
        return a
    inv = pow(a[-1], p - 2, p)
    return [(c * inv) % p for c in a]


def _fp_is_irreducible(p: int, f: Sequence[int]) -> bool:
    """Degree-m monic f is irreducible over F_p iff it shares no factor with
    x^(p^d) - x for any d <= m/2 (that product covers all irreducibles of
    degree <= m/2, and a reducible degree-m polynomial has such a factor)."""
    m = len(f) - 1
    h = [0, 1]  # x
    for _ in range(m // 2):
        h = _fp_powmod(p, h, p, f)  # x^(p^d) after d Frobenius steps
        diff = list(h)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        g = _fp_gcd(p, f, _fp_trim(diff))
        if len(g) - 1 >= 1:
            return False
    return True


def _canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree m in base-p coefficient encoding."""
    if m == 1:
        return (0,)
    for enc in range(p ** m):
        coeffs = []
        t = enc
        for _ in range(m):
            coeffs.append(t % p)
            t //= p
        if _fp_is_irreducible(p, coeffs + [1]):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found; unreachable")


# ---------------------------------------------------------------------------
# FieldSpec
# ---------------------------------------------------------------------------

class FieldSpec:
    """A finite field F_q, q = p^m <= 2^16, with canonical modulus and
    index-coded elements.

    All state is immutable after construction; instances are safe to share
    across threads and processes.  Use :func:`make_field`, which caches one
    instance per (p, m).
    """

    __slots__ = ("p", "m", "q", "modulus", "_exp", "_log", "_pows",
                 "_np_add", "_np_mul")

    def __init__(self, p: int, m: int):
        if m < 1:
            raise NotPrime(f"exponent m must be >= 1, got {m}")
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        q = p ** m
        if q > MAX_FIELD_SIZE:
            raise FieldTooLarge(f"q = {p}^{m} = {q} exceeds {MAX_FIELD_SIZE}")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = _canonical_modulus(p, m)
        self._pows = tuple(p ** i for i in range(m))
        self._np_add = None
        self._np_mul = None
        self._build_tables()

    # -- raw digit arithmetic (table bootstrap) -----------------------------

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def _from_digits(self, digits: Sequence[int]) -> int:
        return sum(d * w for d, w in zip(digits, self._pows))

    def _raw_mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return (a * b) % self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        # reduce modulo x^m - (modulus tail): x^m == -sum(c_i x^i)
        for k in range(len(prod) - 1, self.m - 1, -1):
            lead = prod[k]
            if lead:
                prod[k] = 0
                for i, c in enumerate(self.modulus):
                    prod[k - self.m + i] = (prod[k - self.m + i] - lead * c) % self.p
        return self._from_digits(prod[: self.m])

    def _raw_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return result

    def _build_tables(self) -> None:
        q = self.q
        if q == 2:
            gen = 1
        else:
            rs = prime_factors(q - 1)
            gen = 0
            for g in range(2, q):
                if all(self._raw_pow(g, (q - 1) // r) != 1 for r in rs):
                    gen = g
                    break
            assert gen, "no multiplicative generator found"
        exp = [0] * (q - 1)
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, gen)
        assert x == 1, "generator order mismatch"
        self._exp = tuple(exp)
        self._log = tuple(log)

    # -- public element operations ------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        return self._from_digits([(x + y) % self.p
                                  for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        return self._from_digits([(-x) % self.p for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero("division by 0")
        if a == 0:
            return 0
        return self._exp[(self._log[a] - self._log[b]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        """Square-and-multiply via the log table; integer exponent of any sign."""
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise DivisionByZero("0 raised to a negative power")
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)

    def from_int(self, c: int) -> int:
        """The prime-subfield element c*1 (index equals c mod p)."""
        return c % self.p

    # -- cached numpy operation tables (used by the distance kernels) -------

    def numpy_tables(self):
        """(add, mul) tables as q-by-q uint16 arrays; built once, q <= 4096."""
        if self._np_add is None:
            import numpy as np
            if self.q > 4096:
                raise FieldTooLarge(f"operation tables not built for q = {self.q} > 4096")
            q = self.q
            add = np.zeros((q, q), dtype=np.uint16)
            mul = np.zeros((q, q), dtype=np.uint16)
            for a in range(q):
                for b in range(q):
                    add[a, b] = self.add(a, b)
                    mul[a, b] = self.mul(a, b)
            self._np_add, self._np_mul = add, mul
        return self._np_add, self._np_mul

    # -- misc ----------------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldSpec)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, m={self.m})"

    def poly(self, coeffs: Iterable[int]) -> "Polynomial":
        return Polynomial(self, coeffs)


@lru_cache(maxsize=None)
def make_field(p: int, m: int = 1) -> FieldSpec:
    """The canonical F_{p^m}; deterministic across runs and platforms."""
    return FieldSpec(p, m)


def field_from_order(q: int) -> FieldSpec:
    """F_q from its order; q must be a prime power <= 2^16."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            t = q
            while t % p == 0:
                t //= p
                m += 1
            if t != 1:
                raise NotPrime(f"{q} is not a prime power")
            return make_field(p, m)
    raise NotPrime(f"{q} is not a prime power")


def field_from_json(d: dict) -> FieldSpec:
    spec = make_field(int(d["p"]), int(d["m"]))
    if list(spec.modulus) != [int(c) for c in d["modulus"]]:
        raise ValueError(f"non-canonical modulus {d['modulus']} for F_{spec.q}; "
                         f"expected {list(spec.modulus)}")
    return spec


def quadratic_character(spec: FieldSpec, a: int) -> int:
    """0 if a = 0, +1 if a is a nonzero square, -1 otherwise.  Odd q only."""
    if spec.q % 2 == 0:
        raise EvenCharacteristic("quadratic character needs odd q")
    if a == 0:
        return 0
    return 1 if spec.pow(a, (spec.q - 1) // 2) == 1 else -1


def extension_field(base: FieldSpec, k: int) -> tuple[FieldSpec, list[int]]:
    """F_{q^k} together with the ring embedding F_q -> F_{q^k}.

    The embedding is returned as a list `emb` of length q with emb[a] the
    image index; it fixes 0 and 1 and commutes with add and mul.  The image
    of the base generator x is the smallest-index root of the base modulus
    in the extension, so the embedding is itself canonical.
    """
    if base.q ** k > MAX_FIELD_SIZE:
        raise FieldTooLarge(f"{base.q}^{k} exceeds {MAX_FIELD_SIZE}")
    ext = make_field(base.p, base.m * k)
    if base.m == 1:
        return ext, [a % base.p for a in range(base.q)]
    # smallest root of the base modulus (coeffs are prime-subfield indices)
    mod_coeffs = list(base.modulus) + [1]
    beta = -1
    for cand in range(ext.q):
        acc = 0
        for c in reversed(mod_coeffs):
            acc = ext.add(ext.mul(acc, cand), c % base.p)
        if acc == 0:
            beta = cand
            break
    assert beta >= 0, "base modulus has no root in the extension"
    powers = [1]
    for _ in range(base.m - 1):
        powers.append(ext.mul(powers[-1], beta))
    emb = []
    for a in range(base.q):
        img = 0
        for d, bp in zip(base._digits(a), powers):
            img = ext.add(img, ext.mul(d % base.p, bp))
        emb.append(img)
    return ext, emb


# ---------------------------------------------------------------------------
# Univariate polynomials over a FieldSpec
# ---------------------------------------------------------------------------

class Polynomial:
    """Dense univariate polynomial; coeffs ascending, trailing coeff nonzero.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: Iterable[int]):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec) -> "Polynomial":
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldSpec) -> "Polynomial":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: FieldSpec) -> "Polynomial":
        return cls(field, (0, 1))

    @classmethod
    def from_roots(cls, field: FieldSpec, roots: Iterable[int]) -> "Polynomial":
        out = cls.one(field)
        for r in roots:
            out = out * cls(field, (field.neg(r), 1))
        return out

    # -- basic queries --------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def encoding(self) -> int:
        """Coefficient tuple read as a base-q integer (used for canonical order)."""
        e = 0
        for c in reversed(self.coeffs):
            e = e * self.field.q + c
        return e

    def sort_key(self):
        return (self.degree, self.encoding())

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.field is not other.field and self.field != other.field:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] = F.add(a[i], c)
        return Polynomial(F, a)

    def __neg__(self) -> "Polynomial":
        F = self.field
        return Polynomial(F, (F.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        F = self.field
        if self.is_zero or other.is_zero:
            return Polynomial.zero(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Polynomial(F, out)

    def scale(self, c: int) -> "Polynomial":
        F = self.field
        return Polynomial(F, (F.mul(c, a) for a in self.coeffs))

    def __divmod__(self, other: "Polynomial"):
        self._check(other)
        F = self.field
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        r = list(self.coeffs)
        d = other.degree
        inv_lead = F.inv(other.leading)
        quot = [0] * max(0, len(r) - d)
        while len(r) - 1 >= d and r:
            c = F.mul(r[-1], inv_lead)
            shift = len(r) - 1 - d
            quot[shift] = c
            for i, oc in enumerate(other.coeffs):
                r[shift + i] = F.sub(r[shift + i], F.mul(c, oc))
            while r and r[-1] == 0:
                r.pop()
        return Polynomial(F, quot), Polynomial(F, r)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polynomial) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def monic(self) -> "Polynomial":
        if self.is_zero or self.leading == 1:
            return self
        return self.scale(self.field.inv(self.leading))

    def derivative(self) -> "Polynomial":
        F = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            mult = i % F.p
            out.append(F.mul(F.from_int(mult), self.coeffs[i]) if mult else 0)
        return Polynomial(F, out)

    def __repr__(self) -> str:
        if self.is_zero:
            return "Poly(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(f"{c}")
            else:
                head = "" if c == 1 else f"{c}*"
                terms.append(f"{head}x^{i}" if i > 1 else f"{head}x")
        return "Poly(" + " + ".join(terms) + ")"


def poly_eval(f: Polynomial, a: int) -> int:
    """Horner evaluation of f at the element with index a."""
    F = f.field
    acc = 0
    for c in reversed(f.coeffs):
        acc = F.add(F.mul(acc, a), c)
    return acc


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_pow_mod(base: Polynomial, e: int, mod: Polynomial) -> Polynomial:
    result = Polynomial.one(base.field)
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def _pth_root(f: Polynomial) -> Polynomial:
    """Inverse of the Frobenius on a polynomial whose exponents are all
    multiples of p (i.e. f = g(x)^p for the returned g)."""
    F = f.field
    root_exp = F.p ** (F.m - 1)  # inverse Frobenius on coefficients
    out = []
    for i in range(0, len(f.coeffs), F.p):
        out.append(F.pow(f.coeffs[i], root_exp) if f.coeffs[i] else 0)
    return Polynomial(F, out)


def _squarefree_decomposition(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """f monic -> [(g_i, e_i)] with f = prod g_i^{e_i}, g_i squarefree monic
    and pairwise coprime.  Characteristic-p aware (p-th power parts recurse
    through the coefficient-wise p-th root)."""
    F = f.field
    if f.degree == 0:
        return []
    out: list[tuple[Polynomial, int]] = []
    d = poly_gcd(f, f.derivative())
    if d.degree == 0:
        return [(f, 1)]
    w = f // d
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, d)
        fac = w // y
        if fac.degree > 0:
            out.append((fac, i))
        w = y
        d = d // y
        i += 1
    if d.degree > 0:
        for g, e in _squarefree_decomposition(_pth_root(d)):
            out.append((g, e * F.p))
    return out


def _distinct_degree(f: Polynomial) -> list[tuple[int, Polynomial]]:
    """f monic squarefree -> [(d, product of irreducible factors of degree d)]."""
    F = f.field
    out = []
    h = Polynomial.x(F) % f
    x = Polynomial.x(F)
    d = 0
    while f.degree > 0:
        d += 1
        if 2 * d > f.degree:
            out.append((f.degree, f))
            break
        h = poly_pow_mod(h, F.q, f)
        g = poly_gcd(h - x, f)
        if g.degree > 0:
            out.append((d, g))
            f = f // g
            h = h % f
    return out


def _equal_degree(f: Polynomial, d: int, rng: random.Random) -> list[Polynomial]:
    """Cantor-Zassenhaus split of a monic squarefree f all of whose
    irreducible factors have degree d."""
    F = f.field
    if f.degree == d:
        return [f]
    n = f.degree
    one = Polynomial.one(F)
    while True:
        a = Polynomial(F, [rng.randrange(F.q) for _ in range(n)])
        if a.degree < 1:
            continue
        g = poly_gcd(a, f)
        if 0 < g.degree < n:
            break
        if F.p == 2:
            # additive trace of a over F_2 inside F_{q^d} = F_{2^(m*d)}
            b = a % f
            c = a % f
            for _ in range(F.m * d - 1):
                c = (c * c) % f
                b = (b + c) % f
        else:
            b = poly_pow_mod(a, (F.q ** d - 1) // 2, f) - one
        g = poly_gcd(b, f)
        if 0 < g.degree < n:
            break
    return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def poly_factor(f: Polynomial, seed: int = FACTOR_SEED) -> list[tuple[Polynomial, int]]:
    """Full factorization into monic irreducibles with multiplicities.

    The product of the factors (times the leading unit of f) reproduces f.
    Output order is canonical: by degree, then by base-q coefficient encoding.
    """
    if f.is_zero:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    rng = random.Random(seed)
    fm = f.monic()
    out: list[tuple[Polynomial, int]] = []
    for g, mult in _squarefree_decomposition(fm):
        for d, h in _distinct_degree(g):
            for irr in _equal_degree(h, d, rng):
                out.append((irr, mult))
    out.sort(key=lambda t: t[0].sort_key())
    return out
