from typing import List, Optional, Sequence, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from app.core.errors import DimensionMismatchError
from app.linalg.matrix import (
    IntMatrix,
    IntVector,
    as_integral,
    identity,
    inverse_rational,
    matvec,
    shape,
    to_matrix,
    transpose,
    xgcd,
)


def _combine_rows(A: IntMatrix, r: int, i: int, x: int, y: int, u: int, v: int) -> None:
    # (row_r, row_i) <- (x*row_r + y*row_i, u*row_r + v*row_i)
    row_r, row_i = A[r], A[i]
    A[r] = [x * a + y * b for a, b in zip(row_r, row_i)]
    A[i] = [u * a + v * b for a, b in zip(row_r, row_i)]


def hnf(M: Sequence[Sequence[int]]) -> Tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns (H, U) with U unimodular and H = U*M. H is in row echelon form,
    pivots are positive and the entries above a pivot lie in [0, pivot).
    Pivoting is deterministic: columns left to right, rows top to bottom.
    """
    m, n = shape(M)
    H = to_matrix(M)
    U = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            b = H[i][c]
            if b == 0:
                continue
            a = H[r][c]
            g, x, y = xgcd(a, b)
            u, v = -b // g, a // g
            _combine_rows(H, r, i, x, y, u, v)
            _combine_rows(U, r, i, x, y, u, v)
        pivot = H[r][c]
        if pivot == 0:
            continue
        if pivot < 0:
            H[r] = [-a for a in H[r]]
            U[r] = [-a for a in U[r]]
            pivot = -pivot
        for i in range(r):
            q = H[i][c] // pivot
            if q:
                H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                U[i] = [a - q * b for a, b in zip(U[i], U[r])]
        r += 1
    return H, U


def _swap_rows(A: IntMatrix, i: int, j: int) -> None:
    A[i], A[j] = A[j], A[i]


def _swap_cols(A: IntMatrix, i: int, j: int) -> None:
    for row in A:
        row[i], row[j] = row[j], row[i]


def snf(M: Sequence[Sequence[int]]) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form D = U*M*V with d_1 | d_2 | ... and U, V unimodular."""
    m, n = shape(M)
    D = to_matrix(M)
    U = identity(m)
    V = identity(n)
    for t in range(min(m, n)):
        while True:
            entries = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j] != 0]
            if not entries:
                break
            _, pi, pj = min(entries)
            _swap_rows(D, t, pi)
            _swap_rows(U, t, pi)
            _swap_cols(D, t, pj)
            _swap_cols(V, t, pj)
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = D[i][t] // p
                if q:
                    D[i] = [a - q * b for a, b in zip(D[i], D[t])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[t])]
                if D[i][t] != 0:
                    dirty = True
            for j in range(t + 1, n):
                q = D[t][j] // p
                if q:
                    for row in D:
                        row[j] -= q * row[t]
                    for row in V:
                        row[j] -= q * row[t]
                if D[t][j] != 0:
                    dirty = True
            if dirty:
                continue
            # divisibility of the remaining block by the pivot
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p != 0),
                None,
            )
            if bad is None:
                break
            D[t] = [a + b for a, b in zip(D[t], D[bad])]
            U[t] = [a + b for a, b in zip(U[t], U[bad])]
        if t < m and t < n and D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
    return D, U, V


def invariant_factors(M: Sequence[Sequence[int]]) -> List[int]:
    if not M:
        return []
    D, _, _ = snf(M)
    return [D[i][i] for i in range(min(len(D), len(D[0])))]


def kernel_basis(M: Sequence[Sequence[int]], width: Optional[int] = None) -> IntMatrix:
    """Rows form a basis of {x in Z^n : M x = 0}, in Hermite normal form.

    width fixes n, which an empty M cannot convey.
    """
    m, n = shape(M)
    if width is not None:
        if m and n != width:
            raise DimensionMismatchError(f"matrix has {n} columns, expected {width}")
        n = width
    if m == 0:
        return identity(n)
    H, U = hnf(transpose(M))
    kernel = [U[i] for i in range(n) if not any(H[i])]
    if not kernel:
        return []
    K, _ = hnf(kernel)
    return [row for row in K if any(row)]


def solve_integer(M: Sequence[Sequence[int]], b: Sequence[int]) -> Optional[IntVector]:
    m, n = shape(M)
    if len(b) != m:
        raise DimensionMismatchError(f"right-hand side has length {len(b)}, expected {m}")
    if n == 0:
        return [] if not any(b) else None
    # U M^T = H, so M = H^T U^{-T}; solve H^T z = b, then x = U^T z
    H, U = hnf(transpose(M))
    z = [0] * n
    for i, row in enumerate(H):
        pivot_col = next((c for c, a in enumerate(row) if a != 0), None)
        if pivot_col is None:
            break
        residual = b[pivot_col] - sum(z[k] * H[k][pivot_col] for k in range(i))
        if residual % row[pivot_col] != 0:
            return None
        z[i] = residual // row[pivot_col]
    x = matvec(transpose(U), z)
    if matvec(M, x) != [int(a) for a in b]:
        return None
    return x


def reduce_modulo(x: Sequence[int], K: Sequence[Sequence[int]]) -> IntVector:
    """Canonical representative of x modulo the row span of K (K in HNF)."""
    y = [int(a) for a in x]
    for row in K:
        c = next((j for j, a in enumerate(row) if a != 0), None)
        if c is None:
            continue
        q = y[c] // row[c]
        if q:
            y = [a - q * b for a, b in zip(y, row)]
    return y


def complete_basis(B: Sequence[Sequence[int]]) -> IntMatrix:
    """Rows completing a saturated row set B to a basis of Z^n.

    Unit vectors are tried first so completions stay sparse; the Smith
    transform supplies the rest.
    """
    _, n = shape(B) if B else (0, 0)
    current = to_matrix(B)
    extra: IntMatrix = []
    for j in range(n):
        if len(current) == n:
            break
        unit = [1 if k == j else 0 for k in range(n)]
        trial = current + [unit]
        factors = invariant_factors(trial)
        if len(factors) == len(trial) and all(f == 1 for f in factors):
            current = trial
            extra.append(unit)
    if len(current) < n:
        _, _, V = snf(current)
        Vinv = as_integral(inverse_rational(V))
        # rows of V^{-1}: the first len(current) span the row space of current
        for row in Vinv[len(current):]:
            extra.append(row)
    return extra


def lll_reduce(B: Sequence[Sequence[int]]) -> IntMatrix:
    """LLL-reduced basis (Euclidean, delta = 3/4) of the row span of independent rows B."""
    if not B:
        return []
    m, n = shape(B)
    reduced = DomainMatrix([[ZZ(int(a)) for a in row] for row in B], (m, n), ZZ).lll()
    return [[int(a) for a in row] for row in reduced.to_list()]
