"""Exact integer matrix arithmetic.

Matrices are tuples of row tuples holding Python ints, so nothing ever
wraps.  Everything here is small-dimensional (at most 6x6 in practice) and
written for clarity rather than speed.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionError

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


def as_matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if m and len({len(r) for r in m}) != 1:
        raise DimensionError("ragged matrix")
    return m


def as_vector(xs: Iterable[int]) -> Vector:
    return tuple(int(x) for x in xs)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(n: int, m: int | None = None) -> Matrix:
    return tuple((0,) * (n if m is None else m) for _ in range(n))


def shape(a: Matrix) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if shape(a)[1] != len(b):
        raise DimensionError(f"cannot multiply {shape(a)} by {shape(b)}")
    cols = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def matvec(a: Matrix, v: Sequence[int]) -> Vector:
    if shape(a)[1] != len(v):
        raise DimensionError(f"cannot apply {shape(a)} matrix to length-{len(v)} vector")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def matprod(mats: Iterable[Matrix], n: int) -> Matrix:
    out = identity(n)
    for m in mats:
        out = matmul(out, m)
    return out


def from_columns(cols: Sequence[Sequence[int]]) -> Matrix:
    return transpose(as_matrix(cols))


def columns(a: Matrix) -> tuple[Vector, ...]:
    return transpose(a)


def vadd(x: Sequence[int], y: Sequence[int]) -> Vector:
    if len(x) != len(y):
        raise DimensionError("length mismatch")
    return tuple(p + q for p, q in zip(x, y))


def vscale(k: int, x: Sequence[int]) -> Vector:
    return tuple(k * p for p in x)


def vgcd(x: Sequence[int]) -> int:
    g = 0
    for p in x:
        g = gcd(g, p)
    return g


def _bareiss(rows: list[list[int]]) -> tuple[int, int, int]:
    """Fraction-free elimination in place; returns (rank, last pivot, sign)."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    prev = 1
    sign = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        p = rows[r][c]
        for i in range(r + 1, m):
            f = rows[i][c]
            rows[i] = [(p * rows[i][j] - f * rows[r][j]) // prev for j in range(n)]
        prev = p
        r += 1
    return r, prev, sign


def rank(a: Sequence[Sequence[int]]) -> int:
    """Exact rank over the rationals by Bareiss elimination."""
    rows = [list(map(int, r)) for r in a]
    if not rows or not rows[0]:
        return 0
    return _bareiss(rows)[0]


def det(a: Matrix) -> int:
    n, m = shape(a)
    if n != m:
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return 1
    rows = [list(r) for r in a]
    r, last, sign = _bareiss(rows)
    return sign * last if r == n else 0


def fraction_det(a: Sequence[Sequence[int]]) -> Fraction:
    """Determinant by plain Gaussian elimination over Q.

    Deliberately a separate code path from :func:`det` so that each can
    serve as a check on the other.
    """
    rows = [[Fraction(x) for x in r] for r in a]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError("determinant of a non-square matrix")
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            d = -d
        d *= rows[c][c]
        for i in range(c + 1, n):
            f = rows[i][c] / rows[c][c]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return d


def fraction_rank(a: Sequence[Sequence[int]]) -> int:
    rows = [[Fraction(x) for x in r] for r in a]
    if not rows:
        return 0
    n = len(rows[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def hermite_normal_form(a: Sequence[Sequence[int]]) -> Matrix:
    """Row-style Hermite normal form of the row lattice of ``a``.

    Zero rows are dropped.  Pivots are positive and entries above a pivot lie
    in ``[0, pivot)``, so two bases of the same lattice give identical output.
    """
    rows = [list(map(int, r)) for r in a]
    m = len(rows)
    n = len(rows[0]) if m else 0
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if rows[i][c] != 0]
            if not nz:
                break
            i = min(nz, key=lambda k: abs(rows[k][c]))
            rows[r], rows[i] = rows[i], rows[r]
            done = True
            for k in range(r + 1, m):
                q = rows[k][c] // rows[r][c]
                if q:
                    rows[k] = [x - q * y for x, y in zip(rows[k], rows[r])]
                if rows[k][c] != 0:
                    done = False
            if done:
                break
        if rows[r][c] == 0:
            continue
        if rows[r][c] < 0:
            rows[r] = [-x for x in rows[r]]
        pivots.append((r, c))
        r += 1
    for pr, pc in pivots:
        p = rows[pr][pc]
        for k in range(pr):
            q = rows[k][pc] // p
            if q:
                rows[k] = [x - q * y for x, y in zip(rows[k], rows[pr])]
    return tuple(tuple(row) for row in rows[:r])


def smith_invariants(a: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix."""
    m = [list(map(int, r)) for r in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    out = []
    t = 0
    while t < min(rows, cols):
        nz = [(abs(m[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if m[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        m[t], m[i] = m[i], m[t]
        for row in m:
            row[t], row[j] = row[j], row[t]
        while True:
            clean = True
            p = m[t][t]
            for i in range(t + 1, rows):
                q = m[i][t] // p
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[t])]
                if m[i][t]:
                    clean = False
            for j in range(t + 1, cols):
                q = m[t][j] // p
                if q:
                    for row in m:
                        row[j] -= q * row[t]
                if m[t][j]:
                    clean = False
            if clean:
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if m[i][j] % p), None)
                if bad is None:
                    break
                # fold the offending row into the pivot row so the gcd drops
                m[t] = [x + y for x, y in zip(m[t], m[bad[0]])]
                continue
            nz = [(abs(m[i][j]), i, j) for i in range(t, rows) for j in range(t, cols)
                  if m[i][j] and (i == t or j == t)]
            _, i, j = min(nz)
            m[t], m[i] = m[i], m[t]
            for row in m:
                row[t], row[j] = row[j], row[t]
        out.append(abs(m[t][t]))
        t += 1
    return tuple(out)


def inverse_unimodular(a: Matrix) -> Matrix:
    """Exact inverse of a determinant +-1 integer matrix."""
    n, m = shape(a)
    if n != m:
        raise DimensionError("inverse of a non-square matrix")
    d = det(a)
    if abs(d) != 1:
        raise ValueError(f"matrix is not unimodular (det {d})")
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(int(x) for x in row[n:]) for row in aug)
