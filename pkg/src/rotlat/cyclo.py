"""Exact arithmetic in the cyclotomic fields Q(zeta_m).

An element is a rational coefficient vector over the power basis
{1, zeta_m, ..., zeta_m^(phi(m)-1)}, kept reduced modulo the m-th
cyclotomic polynomial.  On top of the ring operations this module
provides absolute traces (via the closed form for Tr(zeta_m^k)),
multiplication-operator matrices (the independent route to traces and
norms), and certified real-interval enclosures of embedding values.

Enclosure policy: cosine values at the rational angles 2*pi*t/m are
enclosed once per (m, precision) with directed rounding; everything
downstream combines those leaves with exact rational interval
arithmetic, so reported intervals are true enclosures whose width is
governed by the leaf precision alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

import mpmath

from .numtheory import divisors, euler_phi, mobius

_ZERO = Fraction(0)


def _polydiv_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Exact division of integer polynomials; den must be monic and divide num."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            out[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the m-th cyclotomic polynomial.

    Computed as (x^m - 1) / prod of the lower-order cyclotomic polynomials;
    lru_cache doubles as the per-conductor cache and is safe under
    concurrent use.
    """
    if m < 1:
        raise ValueError("conductor must be positive")
    if m == 1:
        return (-1, 1)
    quo = [0] * (m + 1)
    quo[0], quo[m] = -1, 1
    for d in divisors(m)[:-1]:
        quo = _polydiv_exact(quo, cyclotomic_polynomial(d))
    return tuple(quo)


def _reduce(coeffs: list[Fraction], m: int) -> tuple[Fraction, ...]:
    poly = cyclotomic_polynomial(m)
    deg = len(poly) - 1
    c = list(coeffs)
    if len(c) < deg:
        c.extend([_ZERO] * (deg - len(c)))
    for i in range(len(c) - 1, deg - 1, -1):
        t = c[i]
        if t:
            c[i] = _ZERO
            for j in range(deg):
                if poly[j]:
                    c[i - deg + j] -= t * poly[j]
    return tuple(c[:deg])


@dataclass(frozen=True)
class CycloElt:
    """Element of Q(zeta_m): phi(m) rational coordinates over the power basis."""

    m: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("conductor must be positive")
        if len(self.coeffs) != euler_phi(self.m):
            raise ValueError(
                f"conductor {self.m} needs {euler_phi(self.m)} coefficients, "
                f"got {len(self.coeffs)}"
            )

    # -- constructors -------------------------------------------------

    @classmethod
    def from_coeffs(cls, m: int, seq) -> "CycloElt":
        return cls(m, _reduce([Fraction(x) for x in seq], m))

    @classmethod
    def zero(cls, m: int) -> "CycloElt":
        return cls.from_coeffs(m, [])

    @classmethod
    def one(cls, m: int) -> "CycloElt":
        return cls.rational(m, 1)

    @classmethod
    def rational(cls, m: int, value) -> "CycloElt":
        return cls.from_coeffs(m, [Fraction(value)])

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> "CycloElt":
        """zeta_m^k."""
        k %= m
        return cls.from_coeffs(m, [_ZERO] * k + [Fraction(1)])

    @classmethod
    def zeta_pair(cls, m: int, k: int) -> "CycloElt":
        """zeta_m^k + zeta_m^(-k)."""
        return cls.zeta(m, k) + cls.zeta(m, -k)

    # -- ring operations ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloElt):
            if other.m != self.m:
                raise ValueError(f"conductor mismatch: {self.m} vs {other.m}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElt.rational(self.m, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycloElt(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycloElt(self.m, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return CycloElt(self.m, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycloElt(self.m, tuple(q * a for a in self.coeffs))
        if not isinstance(other, CycloElt):
            return NotImplemented
        if other.m != self.m:
            raise ValueError(f"conductor mismatch: {self.m} vs {other.m}")
        a, b = self.coeffs, other.coeffs
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        return CycloElt(self.m, _reduce(out, self.m))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = CycloElt.one(self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    # -- Galois action and conductor embedding ------------------------

    def galois(self, s: int) -> "CycloElt":
        """Image under zeta_m |-> zeta_m^s; s must be invertible mod m."""
        s %= self.m
        if gcd(s, self.m) != 1:
            raise ValueError(f"{s} is not invertible modulo {self.m}")
        out = [_ZERO] * self.m
        for j, cj in enumerate(self.coeffs):
            if cj:
                out[j * s % self.m] += cj
        return CycloElt(self.m, _reduce(out, self.m))

    def conj(self) -> "CycloElt":
        return self.galois(-1)

    @property
    def is_real(self) -> bool:
        return self.conj() == self

    def lift(self, target: int) -> "CycloElt":
        """Image in Q(zeta_target) under zeta_m |-> zeta_target^(target/m)."""
        if target % self.m != 0:
            raise ValueError(f"conductor {target} is not a multiple of {self.m}")
        step = target // self.m
        out = [_ZERO] * target
        for j, cj in enumerate(self.coeffs):
            if cj:
                out[j * step] += cj
        return CycloElt(target, _reduce(out, target))

    # -- serialization -------------------------------------------------

    def to_json(self) -> dict:
        return {"m": self.m, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "CycloElt":
        return cls(int(obj["m"]), tuple(Fraction(s) for s in obj["coeffs"]))


# -- traces and norms over Q -------------------------------------------


@lru_cache(maxsize=None)
def _trace_table(m: int) -> tuple[Fraction, ...]:
    """Tr(zeta_m^k) for k = 0..phi(m)-1: mu(m/d) * phi(m)/phi(m/d), d = gcd(k, m)."""
    phi = euler_phi(m)
    out = []
    for k in range(phi):
        md = m // gcd(k, m)
        out.append(Fraction(mobius(md) * phi, euler_phi(md)))
    return tuple(out)


def trace_abs(x: CycloElt) -> Fraction:
    """Trace of x from Q(zeta_m) down to Q."""
    table = _trace_table(x.m)
    return sum((c * t for c, t in zip(x.coeffs, table)), _ZERO)


def mult_matrix_abs(x: CycloElt) -> list[list[Fraction]]:
    """Matrix of multiplication by x on the power basis (row j = x * zeta^j).

    Independent of the trace table above; used to cross-check traces and
    to compute norms as determinants.
    """
    phi = euler_phi(x.m)
    rows = []
    cur = list(x.coeffs)
    for j in range(phi):
        rows.append(list(cur))
        if j != phi - 1:
            cur = list(_reduce([_ZERO] + cur, x.m))
    return rows


def trace_via_mult_matrix(x: CycloElt) -> Fraction:
    rows = mult_matrix_abs(x)
    return sum((rows[i][i] for i in range(len(rows))), _ZERO)


def norm_abs(x: CycloElt) -> Fraction:
    """Norm of x from Q(zeta_m) down to Q (determinant of the multiplication map)."""
    from .linalg import det_rational

    return det_rational(mult_matrix_abs(x))


# -- certified real enclosures ------------------------------------------


@dataclass(frozen=True)
class Enclosure:
    """Closed rational interval certified to contain a real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty enclosure")

    def __add__(self, other: "Enclosure") -> "Enclosure":
        return Enclosure(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "Enclosure") -> "Enclosure":
        return Enclosure(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self) -> "Enclosure":
        return Enclosure(-self.hi, -self.lo)

    def __mul__(self, other: "Enclosure") -> "Enclosure":
        products = (self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi)
        return Enclosure(min(products), max(products))

    def scale(self, q) -> "Enclosure":
        q = Fraction(q)
        if q >= 0:
            return Enclosure(self.lo * q, self.hi * q)
        return Enclosure(self.hi * q, self.lo * q)

    def pow(self, k: int) -> "Enclosure":
        result = Enclosure(Fraction(1), Fraction(1))
        for _ in range(k):
            result = result * self
        return result

    def contains(self, value) -> bool:
        return self.lo <= value <= self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_positive(self) -> bool:
        return self.lo > 0

    @property
    def is_negative(self) -> bool:
        return self.hi < 0

    def reciprocal(self) -> "Enclosure":
        if self.lo <= 0 <= self.hi:
            raise ValueError("reciprocal of an interval containing zero")
        return Enclosure(1 / self.hi, 1 / self.lo)

    def sqrt(self, prec: int = 128) -> "Enclosure":
        """Outward-rounded square root with 2^-prec granularity; needs lo >= 0."""
        if self.lo < 0:
            raise ValueError("square root of an interval reaching below zero")
        s = 1 << prec
        lo_scaled = (self.lo.numerator * s * s) // self.lo.denominator
        lo = Fraction(isqrt(lo_scaled), s)
        hi_scaled = -((-self.hi.numerator * s * s) // self.hi.denominator)
        hi = Fraction(isqrt(hi_scaled) + 1, s)
        return Enclosure(lo, hi)


def _raw_mpf_to_fraction(t) -> Fraction:
    sign, man, exp, _ = t
    man = int(man)
    if man == 0:
        if exp == 0:
            return Fraction(0)
        raise ValueError("nonfinite interval endpoint")
    v = Fraction(man) * Fraction(2) ** exp
    return -v if sign else v


_COS_CACHE: dict[tuple[int, int], tuple[Enclosure, ...]] = {}


def cos_enclosures(m: int, prec: int) -> tuple[Enclosure, ...]:
    """Certified enclosures of cos(2*pi*t/m) for t = 0..m-1."""
    key = (m, prec)
    got = _COS_CACHE.get(key)
    if got is not None:
        return got
    ctx = mpmath.iv
    old = ctx.prec
    try:
        ctx.prec = prec
        two_pi = 2 * ctx.pi
        vals = []
        for t in range(m):
            c = ctx.cos(two_pi * t / m)
            a, b = c._mpi_
            vals.append(Enclosure(_raw_mpf_to_fraction(a), _raw_mpf_to_fraction(b)))
    finally:
        ctx.prec = old
    enc = tuple(vals)
    _COS_CACHE[key] = enc  # idempotent; concurrent recomputation is harmless
    return enc


def real_embedding_enclosures(x: CycloElt, reps, prec: int) -> list[Enclosure]:
    """Enclosures of sum_j c_j cos(2*pi*j*k/m) for each k in reps.

    For x fixed by complex conjugation this equals the embedding
    zeta_m |-> exp(2*pi*i*k/m) of x, which is then real.
    """
    table = cos_enclosures(x.m, prec)
    out = []
    for k in reps:
        acc = Enclosure(_ZERO, _ZERO)
        for j, cj in enumerate(x.coeffs):
            if cj:
                acc = acc + table[j * k % x.m].scale(cj)
        out.append(acc)
    return out
