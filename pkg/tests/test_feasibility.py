import json

import pytest

from rotlat import dn_feasibility, make_field, splitting_of_two
from rotlat.feasibility import (
    VERDICT_IMPOSSIBLE_ODD_DISC,
    VERDICT_IMPOSSIBLE_RESIDUE,
    VERDICT_KNOWN_CONSTRUCTION,
    VERDICT_NECESSARY_HOLDS,
    report_json,
)


@pytest.mark.parametrize(
    "family,params,efg",
    [
        ("pow2", {"r": 5}, (8, 1, 1)),
        ("pow2", {"r": 3}, (2, 1, 1)),
        ("odd-prime", {"p": 7}, (1, 3, 1)),
        ("odd-prime", {"p": 11}, (1, 5, 1)),
        ("odd-prime", {"p": 17}, (1, 4, 2)),  # 2^4 = 16 = -1 mod 17
        ("comp-pow2-odd", {"r": 3, "p": 7}, (2, 3, 1)),
        ("comp-pow2-odd", {"r": 4, "p": 5}, (4, 2, 1)),
        ("comp-odd-odd", {"p1": 5, "p2": 7}, (1, 6, 1)),
        ("comp-odd-odd", {"p1": 5, "p2": 11}, (1, 10, 1)),
    ],
)
def test_splitting_of_two(family, params, efg):
    K = make_field(family, **params)
    e, f, g = splitting_of_two(K)
    assert (e, f, g) == efg
    assert e * f * g == K.n


@pytest.mark.parametrize(
    "family,params,verdict",
    [
        ("odd-prime", {"p": 7}, VERDICT_IMPOSSIBLE_ODD_DISC),
        ("odd-prime", {"p": 11}, VERDICT_IMPOSSIBLE_ODD_DISC),
        ("odd-prime", {"p": 13}, VERDICT_IMPOSSIBLE_ODD_DISC),
        ("comp-odd-odd", {"p1": 5, "p2": 7}, VERDICT_IMPOSSIBLE_ODD_DISC),
        ("comp-pow2-odd", {"r": 3, "p": 7}, VERDICT_IMPOSSIBLE_RESIDUE),
        ("comp-pow2-odd", {"r": 3, "p": 11}, VERDICT_IMPOSSIBLE_RESIDUE),
        ("pow2", {"r": 3}, VERDICT_KNOWN_CONSTRUCTION),
        ("pow2", {"r": 7}, VERDICT_KNOWN_CONSTRUCTION),
        # odd-prime fields of degree 2 evade the odd-discriminant rule
        ("odd-prime", {"p": 5}, VERDICT_NECESSARY_HOLDS),
        # the p = 5 compositum satisfies f | 2 - z, so only necessity holds
        ("comp-pow2-odd", {"r": 3, "p": 5}, VERDICT_NECESSARY_HOLDS),
        ("comp-pow2-odd", {"r": 4, "p": 5}, VERDICT_NECESSARY_HOLDS),
    ],
)
def test_verdicts(family, params, verdict):
    report = dn_feasibility(make_field(family, **params))
    assert report.verdict == verdict


def test_report_internal_consistency():
    for family, params in [
        ("pow2", {"r": 4}),
        ("odd-prime", {"p": 13}),
        ("comp-pow2-odd", {"r": 3, "p": 7}),
        ("comp-odd-odd", {"p1": 7, "p2": 11}),
    ]:
        K = make_field(family, **params)
        rep = dn_feasibility(K)
        assert rep.e * rep.f * rep.g == K.n
        assert rep.disc_odd == (rep.z == 0)
        assert rep.rule


def test_odd_disc_fields_have_large_residue_degree():
    # for odd-discriminant fields of degree outside {1, 2, 4} the residue
    # degree is never 1 or 2; this independent route agrees with the verdict
    for family, params in [
        ("odd-prime", {"p": 7}),
        ("odd-prime", {"p": 11}),
        ("odd-prime", {"p": 13}),
        ("odd-prime", {"p": 17}),
        ("comp-odd-odd", {"p1": 5, "p2": 7}),
        ("comp-odd-odd", {"p1": 5, "p2": 11}),
        ("comp-odd-odd", {"p1": 7, "p2": 11}),
    ]:
        K = make_field(family, **params)
        rep = dn_feasibility(K)
        assert K.n not in (1, 2, 4)
        assert rep.f not in (1, 2)
        assert rep.verdict == VERDICT_IMPOSSIBLE_ODD_DISC


def test_residue_condition_identity_for_mixed_compositum():
    # z = n2 * ((r-1) 2^(r-2) - 1), so 2 - z fails to be divisible by f
    # whenever the odd factor's degree avoids {1, 2, 4}
    for r, p in [(3, 7), (4, 7), (3, 11), (3, 13), (5, 7)]:
        K = make_field("comp-pow2-odd", r=r, p=p)
        rep = dn_feasibility(K)
        n2 = (p - 1) // 2
        assert rep.z == n2 * ((r - 1) * 2 ** (r - 2) - 1)
        assert n2 not in (1, 2, 4)
        assert (2 - rep.z) % rep.f != 0
        assert rep.verdict == VERDICT_IMPOSSIBLE_RESIDUE


def test_constructed_families_coexist_with_ideal_impossibility():
    # the same fields that carry certified non-ideal module constructions
    # are Impossible* for ideal-based ones, and the rule text states the scope
    for family, params in [
        ("odd-prime", {"p": 7}),
        ("comp-pow2-odd", {"r": 3, "p": 7}),
        ("comp-odd-odd", {"p1": 5, "p2": 7}),
    ]:
        rep = dn_feasibility(make_field(family, **params))
        assert rep.verdict.startswith("Impossible")
        assert "module constructions are unaffected" in rep.rule


def test_necessary_condition_never_asserts_existence():
    rep = dn_feasibility(make_field("comp-pow2-odd", r=4, p=5))
    assert rep.verdict == VERDICT_NECESSARY_HOLDS
    assert "not decided" in rep.rule


def test_report_json_shape():
    rep = dn_feasibility(make_field("odd-prime", p=11))
    obj = json.loads(report_json(rep))
    assert set(obj) == {"e", "f", "g", "z", "disc_odd", "verdict", "rule"}
    assert obj["verdict"] == "ImpossibleOddDisc"
    assert obj["disc_odd"] is True
