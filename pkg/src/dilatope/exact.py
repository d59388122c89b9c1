"""Exact integer and rational linear algebra.

Matrices are plain lists of rows of Python ints (or ``Fraction``), so every
routine here is arbitrary precision. Nothing in this module mutates its
arguments.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple, Sequence

IntMatrix = list[list[int]]
IntVector = list[int]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(M: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*M)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence], x: Sequence) -> list:
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for a in v:
        g = gcd(g, a)
    if g <= 1:
        return tuple(v)
    return tuple(a // g for a in v)


def integer_scaled(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Smallest positive multiple of a rational vector that is integral and primitive."""
    den = 1
    for a in v:
        den = den * Fraction(a).denominator // gcd(den, Fraction(a).denominator)
    return primitive([int(Fraction(a) * den) for a in v])


def det(M: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss, fraction free)."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("det needs a square matrix")
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def rank(M: Sequence[Sequence]) -> int:
    return len(_rref(M)[1])


def _rref(M: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    A = [[Fraction(a) for a in row] for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [a * inv for a in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def nullspace(M: Sequence[Sequence], ncols: int | None = None) -> list[tuple[int, ...]]:
    """Integer (primitive) basis of the rational kernel of ``M``."""
    if ncols is None:
        ncols = len(M[0])
    if not M:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    R, pivots = _rref(M)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -R[i][f]
        basis.append(integer_scaled(v))
    return basis


class RationalSolution(NamedTuple):
    x: list[Fraction]
    kernel: list[tuple[int, ...]]


def solve_rational(A: Sequence[Sequence[int]], b: Sequence[int]) -> RationalSolution | None:
    """Solve ``A x = b`` exactly over Q.

    Returns one particular solution together with an integer basis of the
    kernel of ``A``, or ``None`` when the system is inconsistent.
    """
    n = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = _rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, p in enumerate(pivots):
        x[p] = R[i][n]
    return RationalSolution(x, nullspace(A, n) if A else [])


def inverse(M: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(M)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(M)]
    R, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R[:n]]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def hermite_normal_form(M: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``H = U M``, ``U`` unimodular and ``H`` in row
    echelon form: pivots positive, entries above each pivot reduced into
    ``[0, pivot)``, zero rows last.
    """
    H = [list(row) for row in M]
    m = len(H)
    n = len(H[0]) if m else 0
    U = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            if H[i][c] == 0:
                continue
            g, s, t = _xgcd(H[r][c], H[i][c])
            a, b = H[r][c] // g, H[i][c] // g
            # [[s, t], [-b, a]] has determinant 1
            H[r], H[i] = ([s * x + t * y for x, y in zip(H[r], H[i])],
                          [-b * x + a * y for x, y in zip(H[r], H[i])])
            U[r], U[i] = ([s * x + t * y for x, y in zip(U[r], U[i])],
                          [-b * x + a * y for x, y in zip(U[r], U[i])])
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        p = H[r][c]
        for i in range(r):
            q = H[i][c] // p
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1
    return H, U


def smith_normal_form(M: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``D = U M V`` with ``d1 | d2 | ...`` on the diagonal."""
    D = [list(row) for row in M]
    m = len(D)
    n = len(D[0]) if m else 0
    U = identity(m)
    V = identity(n)

    def row_combine(A, i, j, s, t, u, v):
        A[i], A[j] = ([s * x + t * y for x, y in zip(A[i], A[j])],
                      [u * x + v * y for x, y in zip(A[i], A[j])])

    def col_combine(A, i, j, s, t, u, v):
        for row in A:
            x, y = row[i], row[j]
            row[i], row[j] = s * x + t * y, u * x + v * y

    for k in range(min(m, n)):
        # move a nonzero entry of minimal absolute value to (k, k)
        entries = [(abs(D[i][j]), i, j) for i in range(k, m) for j in range(k, n) if D[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        if pi != k:
            D[k], D[pi] = D[pi], D[k]
            U[k], U[pi] = U[pi], U[k]
        if pj != k:
            for A in (D, V):
                for row in A:
                    row[k], row[pj] = row[pj], row[k]
        while True:
            # every xgcd step strictly shrinks |D[k][k]|, so this terminates
            for i in range(k + 1, m):
                if D[i][k] % D[k][k] == 0:
                    q = D[i][k] // D[k][k]
                    if q:
                        D[i] = [x - q * y for x, y in zip(D[i], D[k])]
                        U[i] = [x - q * y for x, y in zip(U[i], U[k])]
                else:
                    g, s, t = _xgcd(D[k][k], D[i][k])
                    a, b = D[k][k] // g, D[i][k] // g
                    row_combine(D, k, i, s, t, -b, a)
                    row_combine(U, k, i, s, t, -b, a)
            for j in range(k + 1, n):
                if D[k][j] % D[k][k] == 0:
                    q = D[k][j] // D[k][k]
                    if q:
                        col_combine(D, k, j, 1, 0, -q, 1)
                        col_combine(V, k, j, 1, 0, -q, 1)
                else:
                    g, s, t = _xgcd(D[k][k], D[k][j])
                    a, b = D[k][k] // g, D[k][j] // g
                    col_combine(D, k, j, s, t, -b, a)
                    col_combine(V, k, j, s, t, -b, a)
            if any(D[i][k] for i in range(k + 1, m)) or any(D[k][j] for j in range(k + 1, n)):
                continue
            # enforce divisibility of the remaining block
            bad = next((i for i in range(k + 1, m) for j in range(k + 1, n)
                        if D[i][j] % D[k][k]), None)
            if bad is None:
                break
            D[k] = [x + y for x, y in zip(D[k], D[bad])]
            U[k] = [x + y for x, y in zip(U[k], U[bad])]
        if D[k][k] < 0:
            D[k] = [-x for x in D[k]]
            U[k] = [-x for x in U[k]]
    return D, U, V


def is_unimodular(U: Sequence[Sequence[int]]) -> bool:
    return abs(det(U)) == 1
