"""Feasibility of building a rotated D_n lattice from a fractional ideal.

The determinant identity det = N(I)^2 N(alpha) d_K forces, for a target
determinant 4c^n, an arithmetic condition on the splitting of 2: the
residue degree f must divide 2 - v2(d_K).  Odd-discriminant fields of
degree outside {1, 2, 4} always violate it.  These verdicts concern
fractional ideals only; the rank-n modules used by the constructions in
this package are not ideals, and their existence is unaffected.

The divisibility condition is necessary, not sufficient: a verdict of
"NecessaryConditionHolds" does not assert that a construction exists.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .fields import FieldDesc, discriminant_2adic_valuation, fixing_subgroup, subfield_degrees
from .numtheory import order_in_quotient

VERDICT_IMPOSSIBLE_ODD_DISC = "ImpossibleOddDisc"
VERDICT_IMPOSSIBLE_RESIDUE = "ImpossibleResidueCondition"
VERDICT_NECESSARY_HOLDS = "NecessaryConditionHolds"
VERDICT_KNOWN_CONSTRUCTION = "KnownConstruction"


@dataclass(frozen=True)
class FeasibilityReport:
    e: int
    f: int
    g: int
    z: int
    disc_odd: bool
    verdict: str
    rule: str

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "f": self.f,
            "g": self.g,
            "z": self.z,
            "disc_odd": self.disc_odd,
            "verdict": self.verdict,
            "rule": self.rule,
        }


def splitting_of_two(field: FieldDesc) -> tuple[int, int, int]:
    """(ramification index, residue degree, number of primes) of 2.

    pow2: totally ramified.  Odd conductors: unramified, with f the order
    of 2 in the Galois group (the quotient of (Z/mZ)^* by the subgroup
    fixing the field).  The mixed compositum ramifies with index n1 while
    f is inherited from the odd-prime factor.
    """
    if field.family == "pow2":
        return field.n, 1, 1
    if field.family == "comp-pow2-odd":
        n1, n2 = subfield_degrees(field)
        p = field.param("p")
        f = order_in_quotient(2, p, frozenset((1, p - 1)))
        return n1, f, n2 // f
    f = order_in_quotient(2, field.m, fixing_subgroup(field))
    return 1, f, field.n // f


def dn_feasibility(field: FieldDesc) -> FeasibilityReport:
    """Decide whether a rotated D_n lattice can come from a fractional ideal."""
    e, f, g = splitting_of_two(field)
    z = discriminant_2adic_valuation(field)
    disc_odd = z == 0
    if disc_odd and field.n not in (1, 2, 4):
        verdict = VERDICT_IMPOSSIBLE_ODD_DISC
        rule = (
            "odd discriminant with degree outside {1, 2, 4}: the residue degree of 2 "
            "exceeds 2, so the determinant equation 4c^n = N(I)^2 N(alpha) d_K has no "
            "solution over fractional ideals (non-ideal module constructions are "
            "unaffected)"
        )
    elif (2 - z) % f != 0:
        verdict = VERDICT_IMPOSSIBLE_RESIDUE
        rule = (
            f"residue degree f={f} does not divide 2 - z = {2 - z}: no fractional "
            "ideal and totally positive twist can reach determinant 4c^n (non-ideal "
            "module constructions are unaffected)"
        )
    elif field.family == "pow2":
        verdict = VERDICT_KNOWN_CONSTRUCTION
        rule = (
            "f = 1 divides 2 - z and a principal-ideal construction exists for the "
            "power-of-two real subfield"
        )
    else:
        verdict = VERDICT_NECESSARY_HOLDS
        rule = (
            f"f={f} divides 2 - z = {2 - z}: the necessary condition holds; existence "
            "via fractional ideals is not decided by this criterion"
        )
    return FeasibilityReport(e, f, g, z, disc_odd, verdict, rule)


def report_json(report: FeasibilityReport) -> str:
    return json.dumps(report.to_json(), indent=2) + "\n"
