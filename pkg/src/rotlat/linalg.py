"""Exact linear algebra over integers and rationals.

Everything here is fraction-free or plain-rational Gaussian elimination;
matrices are lists of lists and stay small (n <= 20), so clarity wins
over sparsity or asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(row) for row in zip(*a)]


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def vec_mat(v, a):
    return [sum(x * a[i][j] for i, x in enumerate(v)) for j in range(len(a[0]))]


def det_int(rows: list[list[int]]) -> int:
    """Fraction-free (Bareiss) determinant of an integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            rowi = a[i]
            rowk = a[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * pk - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = pk
    return sign * a[n - 1][n - 1]


def det_rational(rows) -> Fraction:
    """Exact determinant of a rational matrix (denominators cleared per row)."""
    scale = Fraction(1)
    int_rows = []
    for row in rows:
        frow = [Fraction(x) for x in row]
        mult = lcm(*(f.denominator for f in frow)) if frow else 1
        scale *= mult
        int_rows.append([int(f * mult) for f in frow])
    return Fraction(det_int(int_rows)) / scale


def leading_principal_minors(rows) -> list[Fraction]:
    n = len(rows)
    return [det_rational([row[:k] for row in rows[:k]]) for k in range(1, n + 1)]


def inverse_rational(rows) -> list[list[Fraction]]:
    """Inverse of a square rational matrix via Gauss-Jordan; raises if singular."""
    n = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def smith_normal_form(rows: list[list[int]]) -> list[int]:
    """Invariant factors (non-negative, each dividing the next) of an integer matrix."""
    a = [list(r) for r in rows]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    res: list[int] = []
    t = 0
    while t < min(nr, nc):
        # move a nonzero entry of minimal absolute value to the pivot slot
        piv = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] != 0 and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        a[t], a[i0] = a[i0], a[t]
        for row in a:
            row[t], row[j0] = row[j0], row[t]
        dirty = False
        for i in range(t + 1, nr):
            q = a[i][t] // a[t][t]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            if a[i][t]:
                dirty = True
        for j in range(t + 1, nc):
            q = a[t][j] // a[t][t]
            if q:
                for row in a:
                    row[j] -= q * row[t]
            if a[t][j]:
                dirty = True
        if dirty:
            continue
        # pivot must divide every remaining entry for the divisibility chain
        offender = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                         if a[i][j] % a[t][t]), None)
        if offender is not None:
            a[t] = [x + y for x, y in zip(a[t], a[offender[0]])]
            continue
        res.append(abs(a[t][t]))
        t += 1
    res.extend([0] * (min(nr, nc) - len(res)))
    return res
