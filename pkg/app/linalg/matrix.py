from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence

from app.core.errors import DimensionMismatchError

# Row-major lists of Python ints: exact at any magnitude
IntMatrix = List[List[int]]
IntVector = List[int]


def shape(M: Sequence[Sequence[int]]) -> tuple:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    for row in M:
        if len(row) != cols:
            raise DimensionMismatchError(f"ragged matrix: expected {cols} columns, got {len(row)}")
    return rows, cols


def to_matrix(M: Sequence[Sequence[int]]) -> IntMatrix:
    return [[int(x) for x in row] for row in M]


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> IntMatrix:
    return [[0] * cols for _ in range(rows)]


def transpose(M: Sequence[Sequence[int]]) -> IntMatrix:
    if not M:
        return []
    return [list(col) for col in zip(*M)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list:
    a_rows, a_cols = shape(A)
    b_rows, b_cols = shape(B)
    if a_cols != b_rows:
        raise DimensionMismatchError(f"cannot multiply {a_rows}x{a_cols} by {b_rows}x{b_cols}")
    Bt = transpose(B) if B else [[] for _ in range(b_cols)]
    return [[sum(x * y for x, y in zip(row, col)) for col in Bt] for row in A]


def matvec(M: Sequence[Sequence], x: Sequence) -> list:
    rows, cols = shape(M)
    if cols != len(x):
        raise DimensionMismatchError(f"matrix has {cols} columns, vector has length {len(x)}")
    return [sum(a * b for a, b in zip(row, x)) for row in M]


def dot(x: Sequence, y: Sequence):
    if len(x) != len(y):
        raise DimensionMismatchError(f"vector lengths differ: {len(x)} != {len(y)}")
    return sum(a * b for a, b in zip(x, y))


def scale(k, x: Sequence) -> list:
    return [k * a for a in x]


def add(x: Sequence, y: Sequence) -> list:
    if len(x) != len(y):
        raise DimensionMismatchError(f"vector lengths differ: {len(x)} != {len(y)}")
    return [a + b for a, b in zip(x, y)]


def content(x: Sequence[int]) -> int:
    g = 0
    for a in x:
        g = gcd(g, int(a))
    return g


def block_diag(*blocks: Sequence[Sequence[int]]) -> IntMatrix:
    n = sum(len(b) for b in blocks)
    out = zeros(n, n)
    offset = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                out[offset + i][offset + j] = int(b[i][j])
        offset += k
    return out


def xgcd(a: int, b: int) -> tuple:
    """Return (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def det(M: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant."""
    n, cols = shape(M)
    if n != cols:
        raise DimensionMismatchError(f"determinant of non-square {n}x{cols} matrix")
    if n == 0:
        return 1
    A = to_matrix(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if pivot is None:
                return 0
            A[k], A[pivot] = A[pivot], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def inverse_rational(M: Sequence[Sequence]) -> List[List[Fraction]]:
    n, cols = shape(M)
    if n != cols:
        raise DimensionMismatchError(f"inverse of non-square {n}x{cols} matrix")
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        pivot = next((r for r in range(c, n) if A[r][c] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        A[c], A[pivot] = A[pivot], A[c]
        p = A[c][c]
        A[c] = [x / p for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


def as_integral(M: Sequence[Sequence[Fraction]]) -> Optional[IntMatrix]:
    out = []
    for row in M:
        if any(Fraction(x).denominator != 1 for x in row):
            return None
        out.append([int(x) for x in row])
    return out


def rank(M: Sequence[Sequence[int]]) -> int:
    from app.linalg.normal_forms import hnf

    if not M:
        return 0
    H, _ = hnf(M)
    return sum(1 for row in H if any(row))
