"""Exact linear algebra over the rationals.

Matrices are lists of rows.  Entries are ``int`` or ``fractions.Fraction``;
no floating point is ever produced.  Integer matrices stay integer wherever
that is possible (products, fraction-free nullspaces).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence, Union

Scalar = Union[int, Fraction]
Vector = list
Matrix = list


class SingularMatrixError(ArithmeticError):
    pass


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def copy(a: Sequence[Sequence[Scalar]]) -> Matrix:
    return [list(row) for row in a]


def transpose(a: Sequence[Sequence[Scalar]]) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Matrix:
    """Product ``a @ b``; skips zero entries of ``a`` (the common case here)."""
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * cols
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                for j in range(cols):
                    y = brow[j]
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def matvec(a: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> Vector:
    return [sum(x * y for x, y in zip(row, v) if x and y) for row in a]


def add(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(c: Scalar, a: Sequence[Sequence[Scalar]]) -> Matrix:
    return [[c * x for x in row] for row in a]


def trace(a: Sequence[Sequence[Scalar]]) -> Scalar:
    return sum(a[i][i] for i in range(len(a)))


def is_zero(a: Sequence[Sequence[Scalar]]) -> bool:
    return all(x == 0 for row in a for x in row)


def normalize_number(x: Scalar) -> Scalar:
    """Collapse a Fraction with denominator 1 to an int."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def primitive(v: Sequence[Scalar]) -> Vector:
    """Rescale ``v`` to an integer vector with gcd 1 whose first nonzero entry is positive."""
    fracs = [Fraction(x) for x in v]
    den = 1
    for x in fracs:
        den = _lcm(den, x.denominator)
    ints = [int(x * den) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    lead = next(x for x in ints if x)
    if lead < 0:
        g = -g
    return [x // g for x in ints]


def rref(a: Sequence[Sequence[Scalar]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over Q and the list of pivot columns."""
    m = [[Fraction(x) for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Sequence[Sequence[Scalar]]) -> int:
    if not a:
        return 0
    return len(rref(a)[1])


def _integer_echelon(a: Sequence[Sequence[int]], cols: int) -> tuple[list[list[int]], list[int]]:
    # fraction-free reduced echelon form; every row is kept primitive
    m = [list(row) for row in a if any(row)]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        prow = m[r]
        pv = prow[c]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                row = [pv * x - f * y for x, y in zip(m[i], prow)]
                g = 0
                for x in row:
                    g = gcd(g, x)
                m[i] = [x // g for x in row] if g > 1 else row
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(a: Sequence[Sequence[Scalar]], cols: int | None = None) -> list[Vector]:
    """Basis of the right kernel ``{x : a x = 0}`` as primitive integer vectors.

    Rational input is cleared of denominators row by row, then eliminated
    fraction-free.  ``cols`` is needed only when ``a`` has no rows.
    """
    if cols is None:
        cols = len(a[0])
    int_rows = []
    for row in a:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = _lcm(den, x.denominator)
        int_rows.append([int(x * den) for x in row])
    ech, pivots = _integer_echelon(int_rows, cols)
    pivot_row = {c: i for i, c in enumerate(pivots)}
    basis = []
    for f in range(cols):
        if f in pivot_row:
            continue
        vec: list[Fraction] = [Fraction(0)] * cols
        vec[f] = Fraction(1)
        for c, i in pivot_row.items():
            vec[c] = Fraction(-ech[i][f], ech[i][c])
        basis.append(primitive(vec))
    return basis


def solve(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Matrix:
    """Solve ``a x = b`` for square invertible ``a``; ``b`` may have several columns."""
    n = len(a)
    aug = [list(a[i]) + list(b[i]) for i in range(n)]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [[normalize_number(x) for x in m[i][n:]] for i in range(n)]


def inverse(a: Sequence[Sequence[Scalar]]) -> Matrix:
    return solve(a, identity(len(a)))


def column(a: Sequence[Sequence[Scalar]], j: int) -> Vector:
    return [row[j] for row in a]


def from_columns(cols: Sequence[Sequence[Scalar]]) -> Matrix:
    return transpose(cols)


def proportional(u: Sequence[Scalar], v: Sequence[Scalar]) -> bool:
    """True when the two nonzero vectors span the same line."""
    if not any(u) or not any(v):
        return False
    i = next(k for k, x in enumerate(u) if x)
    if v[i] == 0:
        return False
    r = Fraction(v[i]) / Fraction(u[i])
    return all(Fraction(y) == r * x for x, y in zip(u, v))


def format_number(x: Scalar) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_number(s: str) -> Scalar:
    return normalize_number(Fraction(s))
