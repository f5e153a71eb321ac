#!/usr/bin/env python3
"""Survey ideal-based feasibility verdicts across parameter ranges of the
four field families."""

import argparse

from rotlat import dn_feasibility, make_field
from rotlat.numtheory import is_prime


def survey(max_r: int, max_p: int):
    rows = []
    for r in range(3, max_r + 1):
        rows.append(("pow2", {"r": r}))
    for p in range(5, max_p + 1):
        if is_prime(p):
            rows.append(("odd-prime", {"p": p}))
    for r in range(3, min(max_r, 5) + 1):
        for p in range(5, max_p + 1):
            if is_prime(p):
                rows.append(("comp-pow2-odd", {"r": r, "p": p}))
    primes = [p for p in range(5, max_p + 1) if is_prime(p)]
    for i, p1 in enumerate(primes):
        for p2 in primes[i + 1:]:
            rows.append(("comp-odd-odd", {"p1": p1, "p2": p2}))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-r", type=int, default=6)
    parser.add_argument("--max-p", type=int, default=13)
    args = parser.parse_args()

    print(f"{'family':15s} {'params':18s} {'n':>6s} {'e':>4s} {'f':>4s} {'g':>4s} {'z':>5s}  verdict")
    for family, params in survey(args.max_r, args.max_p):
        field = make_field(family, **params)
        rep = dn_feasibility(field)
        pstr = ",".join(f"{k}={v}" for k, v in params.items())
        print(f"{family:15s} {pstr:18s} {field.n:6d} {rep.e:4d} {rep.f:4d} {rep.g:4d} {rep.z:5d}  {rep.verdict}")


if __name__ == "__main__":
    main()
