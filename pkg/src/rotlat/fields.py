"""The four families of totally real cyclotomic subfields used by the
lattice constructions, plus field-relative traces, norms and embeddings.

Families (conductor m, degree n):

  pow2           Q(zeta_{2^r} + zeta_{2^r}^-1)        m = 2^r      n = 2^(r-2)
  odd-prime      Q(zeta_p + zeta_p^-1)                m = p        n = (p-1)/2
  comp-pow2-odd  compositum of the two above          m = 2^r * p  n = n1*n2
  comp-odd-odd   compositum of two odd-prime fields   m = p1 * p2  n = n1*n2

Each descriptor carries an integral basis and the exact discriminant.
At construction time (n <= 20) the stored discriminant is revalidated
against the determinant of the trace form on the integral basis, which
catches basis or reduction bugs at the source.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .cyclo import (
    CycloElt,
    Enclosure,
    real_embedding_enclosures,
    trace_abs,
)
from .linalg import det_rational, inverse_rational, vec_mat
from .numtheory import crt, euler_phi, is_prime, v2

FAMILIES = ("pow2", "odd-prime", "comp-pow2-odd", "comp-odd-odd")


@dataclass(frozen=True)
class FieldDesc:
    """A totally real field from one of the four supported families."""

    family: str
    params: tuple[tuple[str, int], ...]
    m: int
    n: int
    basis: tuple[CycloElt, ...]
    disc: int

    def param(self, name: str) -> int:
        return dict(self.params)[name]

    @property
    def codegree(self) -> int:
        """Degree of Q(zeta_m) over this field."""
        return euler_phi(self.m) // self.n


def _pow2_disc(r: int) -> int:
    return 2 ** ((r - 1) * 2 ** (r - 2) - 1)


def _odd_prime_disc(p: int) -> int:
    return p ** ((p - 3) // 2)


def make_field(family: str, **params) -> FieldDesc:
    """Build (or fetch from cache) a field descriptor."""
    if family == "pow2":
        return _field_pow2(_get_int(params, "r"))
    if family == "odd-prime":
        return _field_odd_prime(_get_int(params, "p"))
    if family == "comp-pow2-odd":
        return _field_comp_pow2_odd(_get_int(params, "r"), _get_int(params, "p"))
    if family == "comp-odd-odd":
        return _field_comp_odd_odd(_get_int(params, "p1"), _get_int(params, "p2"))
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def _get_int(params: dict, name: str) -> int:
    if name not in params:
        raise ValueError(f"missing parameter {name!r}")
    return int(params[name])


@lru_cache(maxsize=None)
def _field_pow2(r: int) -> FieldDesc:
    if r < 3:
        raise ValueError("r must be an integer >= 3")
    m = 2**r
    n = 2 ** (r - 2)
    basis = [CycloElt.one(m)] + [CycloElt.zeta_pair(m, i) for i in range(1, n)]
    return _finish(FieldDesc("pow2", (("r", r),), m, n, tuple(basis), _pow2_disc(r)))


@lru_cache(maxsize=None)
def _field_odd_prime(p: int) -> FieldDesc:
    if p < 5 or not is_prime(p):
        raise ValueError("p must be a prime >= 5")
    n = (p - 1) // 2
    basis = [CycloElt.zeta_pair(p, i) for i in range(1, n + 1)]
    return _finish(FieldDesc("odd-prime", (("p", p),), p, n, tuple(basis), _odd_prime_disc(p)))


@lru_cache(maxsize=None)
def _field_comp_pow2_odd(r: int, p: int) -> FieldDesc:
    if r < 3:
        raise ValueError("r must be an integer >= 3")
    if p < 5 or not is_prime(p):
        raise ValueError("p must be a prime >= 5")
    m = 2**r * p
    n1 = 2 ** (r - 2)
    n2 = (p - 1) // 2
    e = [CycloElt.one(m)] + [CycloElt.zeta_pair(2**r, i).lift(m) for i in range(1, n1)]
    b = [CycloElt.zeta_pair(p, j).lift(m) for j in range(1, n2 + 1)]
    basis = [ei * bj for ei in e for bj in b]
    disc = _pow2_disc(r) ** n2 * _odd_prime_disc(p) ** n1
    return _finish(
        FieldDesc("comp-pow2-odd", (("r", r), ("p", p)), m, n1 * n2, tuple(basis), disc)
    )


@lru_cache(maxsize=None)
def _field_comp_odd_odd(p1: int, p2: int) -> FieldDesc:
    for q in (p1, p2):
        if q < 5 or not is_prime(q):
            raise ValueError("p1 and p2 must be primes >= 5")
    if p1 == p2:
        raise ValueError("p1 != p2 required")
    m = p1 * p2
    n1 = (p1 - 1) // 2
    n2 = (p2 - 1) // 2
    e = [CycloElt.zeta_pair(p1, i).lift(m) for i in range(1, n1 + 1)]
    b = [CycloElt.zeta_pair(p2, j).lift(m) for j in range(1, n2 + 1)]
    basis = [ei * bj for ei in e for bj in b]
    disc = _odd_prime_disc(p1) ** n2 * _odd_prime_disc(p2) ** n1
    return _finish(
        FieldDesc("comp-odd-odd", (("p1", p1), ("p2", p2)), m, n1 * n2, tuple(basis), disc)
    )


def _finish(field: FieldDesc) -> FieldDesc:
    if field.n <= 20:
        _check_trace_gram(field)
    return field


def _check_trace_gram(field: FieldDesc) -> None:
    idx = field.codegree
    n = field.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            t = trace_abs(field.basis[i] * field.basis[j]) / idx
            rows[i][j] = rows[j][i] = t
    got = det_rational(rows)
    if got != field.disc:
        raise RuntimeError(
            f"integral basis self-check failed for {field.family}{dict(field.params)}: "
            f"trace-form determinant {got} != stored discriminant {field.disc}"
        )


def subfield_degrees(field: FieldDesc) -> tuple[int, int]:
    """(n1, n2) for the two compositum factors."""
    if field.family == "comp-pow2-odd":
        return 2 ** (field.param("r") - 2), (field.param("p") - 1) // 2
    if field.family == "comp-odd-odd":
        return (field.param("p1") - 1) // 2, (field.param("p2") - 1) // 2
    raise ValueError(f"{field.family} is not a compositum")


def _factor_conductors(field: FieldDesc) -> tuple[int, int]:
    if field.family == "comp-pow2-odd":
        return 2 ** field.param("r"), field.param("p")
    if field.family == "comp-odd-odd":
        return field.param("p1"), field.param("p2")
    raise ValueError(f"{field.family} is not a compositum")


# -- Galois data ---------------------------------------------------------


@lru_cache(maxsize=None)
def fixing_generators(field: FieldDesc) -> tuple[int, ...]:
    """Generators of the subgroup of (Z/mZ)^* whose fixed field this is."""
    if field.family in ("pow2", "odd-prime"):
        return (field.m - 1,)
    m1, m2 = _factor_conductors(field)
    s1 = crt(m1 - 1, m1, 1, m2)
    s2 = crt(1, m1, m2 - 1, m2)
    return (s1, s2)


@lru_cache(maxsize=None)
def fixing_subgroup(field: FieldDesc) -> frozenset[int]:
    els = {1}
    for g in fixing_generators(field):
        els |= {x * g % field.m for x in els}
    return frozenset(els)


@lru_cache(maxsize=None)
def embedding_reps(field: FieldDesc) -> tuple[int, ...]:
    """Canonical exponents k, one per real embedding, ascending.

    The embeddings of the field correspond to cosets of the fixing
    subgroup in (Z/mZ)^*; the smallest member represents each coset.
    """
    subgroup = fixing_subgroup(field)
    seen: set[int] = set()
    reps = []
    for k in range(1, field.m):
        if gcd(k, field.m) != 1 or k in seen:
            continue
        seen |= {k * h % field.m for h in subgroup}
        reps.append(k)
    if len(reps) != field.n:
        raise RuntimeError("embedding count does not match the field degree")
    return tuple(reps)


def is_element(field: FieldDesc, x: CycloElt) -> bool:
    """Whether x (same conductor) is fixed by the Galois subgroup cutting out the field."""
    if x.m != field.m:
        return False
    return all(x.galois(s) == x for s in fixing_generators(field))


def _require_member(x: CycloElt, field: FieldDesc) -> None:
    if not is_element(field, x):
        raise ValueError("element is not fixed by the Galois subgroup of the field")


# -- coordinates over the integral basis ---------------------------------


@lru_cache(maxsize=None)
def _basis_solver(field: FieldDesc):
    """Pivot columns plus inverse of the pivot submatrix of the basis matrix."""
    rows = [list(w.coeffs) for w in field.basis]
    work = [row[:] for row in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(len(rows[0])):
        piv = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        pv = work[rank][col]
        work[rank] = [v / pv for v in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        pivots.append(col)
        rank += 1
        if rank == field.n:
            break
    if rank < field.n:
        raise RuntimeError("integral basis is not full rank")
    sub = [[rows[i][c] for c in pivots] for i in range(field.n)]
    return tuple(pivots), tuple(tuple(r) for r in inverse_rational(sub))


def coords_on_basis(field: FieldDesc, x: CycloElt) -> tuple[Fraction, ...]:
    """Coordinates of x over the integral basis; x must lie in the field."""
    if x.m != field.m:
        raise ValueError(f"conductor mismatch: {x.m} vs {field.m}")
    pivots, inv = _basis_solver(field)
    picked = [x.coeffs[c] for c in pivots]
    a = vec_mat(picked, [list(r) for r in inv])
    # the pivot solve is only valid if x really lies in the rational span
    recon = [Fraction(0)] * len(x.coeffs)
    for coef, w in zip(a, field.basis):
        if coef:
            for idx, wc in enumerate(w.coeffs):
                if wc:
                    recon[idx] += coef * wc
    if tuple(recon) != x.coeffs:
        raise ValueError("element is outside the rational span of the integral basis")
    return tuple(a)


# -- field-relative trace, norm, embeddings -------------------------------


def trace_real(x: CycloElt, field: FieldDesc) -> Fraction:
    """Trace of x from the field down to Q."""
    _require_member(x, field)
    return trace_abs(x) / field.codegree


def norm_real(x: CycloElt, field: FieldDesc) -> Fraction:
    """Norm of x from the field down to Q, as the determinant of
    multiplication by x expressed on the integral basis."""
    _require_member(x, field)
    rows = [list(coords_on_basis(field, x * w)) for w in field.basis]
    return det_rational(rows)


def conjugates_real(x: CycloElt, field: FieldDesc, precision: int = 128) -> tuple[Enclosure, ...]:
    """Certified enclosures of the real embeddings of x, one per embedding."""
    _require_member(x, field)
    return tuple(real_embedding_enclosures(x, embedding_reps(field), precision))


def is_totally_positive(x: CycloElt, field: FieldDesc, max_precision: int = 1 << 13) -> bool:
    """Certified total-positivity check; precision escalates until signs resolve."""
    if not x:
        return False
    prec = 64
    while True:
        enclosures = conjugates_real(x, field, prec)
        if all(e.is_positive for e in enclosures):
            return True
        if any(e.is_negative for e in enclosures):
            return False
        if prec >= max_precision:
            raise RuntimeError("sign certification did not converge at the precision cap")
        prec *= 2


def discriminant_2adic_valuation(field: FieldDesc) -> int:
    """v2 of the field discriminant."""
    return v2(field.disc) if field.disc % 2 == 0 else 0


# -- serialization ---------------------------------------------------------


def field_to_json(field: FieldDesc) -> dict:
    return {
        "family": field.family,
        "params": dict(field.params),
        "m": field.m,
        "n": field.n,
        "disc": str(field.disc),
    }


def field_from_json(obj) -> FieldDesc:
    field = make_field(str(obj["family"]), **{k: int(v) for k, v in obj["params"].items()})
    if field.m != int(obj["m"]) or field.n != int(obj["n"]) or field.disc != int(obj["disc"]):
        raise ValueError("stored field data does not match its parameters")
    return field
