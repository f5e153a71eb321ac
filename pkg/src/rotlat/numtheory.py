"""Small integer helpers: primality, factorization, totient, Moebius, orders."""

from __future__ import annotations

from functools import lru_cache


def is_prime(n: int) -> bool:
    """Trial-division primality test; plenty for the conductor sizes used here."""
    if n < 2:
        return False
    for p in (2, 3):
        if n % p == 0:
            return n == p
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization ((p, multiplicity), ...) with p ascending; n >= 1."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out: list[tuple[int, int]] = []
    rem = n
    p = 2
    while p * p <= rem:
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if rem > 1:
        out.append((rem, 1))
    return tuple(out)


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n):
        phi *= (p - 1) * p ** (e - 1)
    return phi


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def v2(n: int) -> int:
    """2-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("v2(0) is undefined")
    n = abs(n)
    z = 0
    while n % 2 == 0:
        n //= 2
        z += 1
    return z


def crt(a1: int, m1: int, a2: int, m2: int) -> int:
    """x mod m1*m2 with x = a1 (mod m1) and x = a2 (mod m2); m1, m2 coprime."""
    inv = pow(m1, -1, m2)
    return (a1 + m1 * ((a2 - a1) * inv % m2)) % (m1 * m2)


def order_in_quotient(a: int, m: int, subgroup: frozenset[int]) -> int:
    """Order of the class of a in (Z/mZ)^* modulo a subgroup containing 1."""
    a %= m
    if 1 not in subgroup:
        raise ValueError("subgroup must contain 1")
    x = a
    t = 1
    bound = euler_phi(m)
    while x not in subgroup:
        x = x * a % m
        t += 1
        if t > bound:
            raise ValueError(f"{a} is not invertible modulo {m}")
    return t
