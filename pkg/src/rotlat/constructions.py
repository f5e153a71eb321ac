"""Builders for the four twisted-module families whose scaled embeddings
are rotated D_n lattices, plus module index, membership and ideal tests.

A TwistedModule packages a rank-n integer module inside the ring of
integers (as a Z-basis gamma), a totally positive twist alpha, and the
integer c such that the lattice of interest is the twisted embedding of
the module divided by sqrt(c).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclo import CycloElt
from .fields import (
    FieldDesc,
    coords_on_basis,
    field_from_json,
    field_to_json,
    is_totally_positive,
    make_field,
    subfield_degrees,
)
from .linalg import det_int, inverse_rational, smith_normal_form, vec_mat

CONSTRUCTION_CODES = ("p31", "p32", "p34", "p37")


@dataclass(frozen=True)
class TwistedModule:
    field: FieldDesc
    gamma: tuple[CycloElt, ...]
    alpha: CycloElt
    c: int
    construction: str
    extrapolated: bool = False


def build(construction: str, **params) -> TwistedModule:
    """Build one of the named module constructions.

    p31: power-of-two real subfield, principal-ideal module, alpha = 2 + e1.
    p32: odd-prime real subfield, non-ideal module, alpha = 2 - e1.
    p34: compositum of the two, non-ideal module, product twist.
    p37: compositum of two odd-prime fields, non-ideal module, product twist.
    """
    code = construction.lower()
    if code == "p31":
        return _build_p31(int(params["r"]))
    if code == "p32":
        return _build_p32(int(params["p"]))
    if code == "p34":
        return _build_p34(int(params["r"]), int(params["p"]))
    if code == "p37":
        return _build_p37(int(params["p1"]), int(params["p2"]))
    raise ValueError(f"unknown construction {construction!r}; expected one of {CONSTRUCTION_CODES}")


def _build_p31(r: int) -> TwistedModule:
    if r < 3:
        raise ValueError("r must be an integer >= 3")
    field = make_field("pow2", r=r)
    e = field.basis  # e[0] = 1, e[i] = zeta^i + zeta^-i
    n, m = field.n, field.m
    head = CycloElt.zero(m)
    for i in range(n - 1):
        head = head + (-2 if i % 2 == 0 else 2) * e[i]
    head = head + e[n - 1]
    tail = [(-1 if i % 2 == 0 else 1) * e[n - 1 - i] for i in range(n - 1)]
    gamma = (head, *tail)
    alpha = 2 + e[1]
    extrapolated = r < 5
    if extrapolated:
        warnings.warn(
            f"p31 with r={r} extends the construction below its stated range (r >= 5); "
            "certification decides empirically",
            RuntimeWarning,
            stacklevel=3,
        )
    return _validated(TwistedModule(field, gamma, alpha, 2 ** (r - 1), "p31", extrapolated))


def _build_p32(p: int) -> TwistedModule:
    from .numtheory import is_prime

    if p < 7 or not is_prime(p):
        raise ValueError("p must be a prime >= 7")
    field = make_field("odd-prime", p=p)
    b = field.basis  # b[0] = b_1, ..., b[n-1] = b_n
    n = field.n
    head = -b[0]
    for j in range(1, n):
        head = head - 2 * b[j]
    gamma = (head, *b[: n - 1])
    alpha = 2 - b[0]
    return _validated(TwistedModule(field, gamma, alpha, p, "p32"))


def _build_p34(r: int, p: int) -> TwistedModule:
    field = make_field("comp-pow2-odd", r=r, p=p)
    _, n2 = subfield_degrees(field)
    gamma = list(field.basis)
    gamma[n2 - 1] = 2 * gamma[n2 - 1]  # double the (i=0, j=n2) product
    e1 = CycloElt.zeta_pair(2**r, 1).lift(field.m)
    b1 = CycloElt.zeta_pair(p, 1).lift(field.m)
    alpha = (2 - e1) * (2 - b1)
    return _validated(TwistedModule(field, tuple(gamma), alpha, 2 ** (r - 1) * p, "p34"))


def _build_p37(p1: int, p2: int) -> TwistedModule:
    field = make_field("comp-odd-odd", p1=p1, p2=p2)
    gamma = list(field.basis)
    gamma[-1] = 2 * gamma[-1]  # double the (i=n1, j=n2) product
    e1 = CycloElt.zeta_pair(p1, 1).lift(field.m)
    b1 = CycloElt.zeta_pair(p2, 1).lift(field.m)
    alpha = (2 - e1) * (2 - b1)
    return _validated(TwistedModule(field, tuple(gamma), alpha, p1 * p2, "p37"))


def _validated(module: TwistedModule) -> TwistedModule:
    coordinate_matrix(module)  # raises unless gamma is integral over the basis
    module_index(module)  # raises unless gamma is full rank
    if not is_totally_positive(module.alpha, module.field):
        raise ValueError("alpha is not totally positive")
    return module


# -- integer structure -----------------------------------------------------


@lru_cache(maxsize=None)
def coordinate_matrix(module: TwistedModule) -> tuple[tuple[int, ...], ...]:
    """Integer coordinates of gamma over the integral basis (row per element)."""
    if len(module.gamma) != module.field.n:
        raise ValueError(
            f"gamma must have exactly {module.field.n} elements, got {len(module.gamma)}"
        )
    rows = []
    for g in module.gamma:
        coords = coords_on_basis(module.field, g)
        if any(q.denominator != 1 for q in coords):
            raise ValueError("gamma element has non-integer coordinates over the integral basis")
        rows.append(tuple(int(q) for q in coords))
    return tuple(rows)


def module_index(module: TwistedModule) -> int:
    """Index of the module in the full ring of integers, |det| of the coordinate matrix."""
    d = det_int([list(r) for r in coordinate_matrix(module)])
    if d == 0:
        raise ValueError("gamma is not full rank")
    return abs(d)


def elementary_divisors(module: TwistedModule) -> tuple[int, ...]:
    """Invariant factors of the quotient of the ring of integers by the module."""
    return tuple(smith_normal_form([list(r) for r in coordinate_matrix(module)]))


@lru_cache(maxsize=None)
def _gamma_inverse(module: TwistedModule) -> tuple[tuple[Fraction, ...], ...]:
    rows = [[Fraction(v) for v in row] for row in coordinate_matrix(module)]
    return tuple(tuple(r) for r in inverse_rational(rows))


def coords_in_module(module: TwistedModule, x: CycloElt) -> tuple[Fraction, ...]:
    """Coordinates of x over gamma (rational; integral iff x is in the module)."""
    y = coords_on_basis(module.field, x)
    inv = [list(r) for r in _gamma_inverse(module)]
    return tuple(vec_mat(list(y), inv))


def in_module(module: TwistedModule, x: CycloElt) -> bool:
    try:
        coords = coords_in_module(module, x)
    except ValueError:
        return False
    return all(q.denominator == 1 for q in coords)


def element_from_coords(module: TwistedModule, coords) -> CycloElt:
    acc = CycloElt.zero(module.field.m)
    for a, g in zip(coords, module.gamma):
        if a:
            acc = acc + a * g
    return acc


# -- ideal test -------------------------------------------------------------


@dataclass(frozen=True)
class IdealityWitness:
    basis_factor: CycloElt
    module_factor: CycloElt
    product: CycloElt


@dataclass(frozen=True)
class IdealCheck:
    is_ideal: bool
    witness: IdealityWitness | None


def is_ideal(module: TwistedModule) -> IdealCheck:
    """Whether the module is closed under multiplication by the ring of integers.

    Products against every integral-basis element suffice: any algebraic
    integer is an integer combination of them.  On failure the first
    offending product (in basis x gamma order) is returned as a witness.
    """
    for w in module.field.basis:
        for g in module.gamma:
            product = w * g
            if not in_module(module, product):
                return IdealCheck(False, IdealityWitness(w, g, product))
    return IdealCheck(True, None)


# -- serialization -----------------------------------------------------------


def module_to_json(module: TwistedModule) -> dict:
    return {
        "field": field_to_json(module.field),
        "gamma": [g.to_json() for g in module.gamma],
        "alpha": module.alpha.to_json(),
        "c": module.c,
        "construction": module.construction,
    }


def module_from_json(obj) -> TwistedModule:
    field = field_from_json(obj["field"])
    gamma = tuple(CycloElt.from_json(g) for g in obj["gamma"])
    alpha = CycloElt.from_json(obj["alpha"])
    c = int(obj["c"])
    if c <= 0:
        raise ValueError("scale c must be a positive integer")
    if alpha.m != field.m or any(g.m != field.m for g in gamma):
        raise ValueError("conductor mismatch between field and elements")
    construction = str(obj["construction"])
    extrapolated = construction == "p31" and field.param("r") < 5
    return _validated(TwistedModule(field, gamma, alpha, c, construction, extrapolated))
