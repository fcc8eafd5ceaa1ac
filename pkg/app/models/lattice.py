from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from app.core.errors import DegenerateLatticeError, DimensionMismatchError, LatticeError
from app.linalg import IntMatrix, IntVector, det, dot, matmul, matvec, rank, shape, to_matrix, transpose


def _diagonalize(gram: Sequence[Sequence[int]]) -> List[Fraction]:
    # congruence diagonalization over Q: simultaneous row/column operations
    n = len(gram)
    A = [[Fraction(x) for x in row] for row in gram]
    diagonal = []
    for i in range(n):
        if A[i][i] == 0:
            j = next((j for j in range(i + 1, n) if A[j][j] != 0), None)
            if j is not None:
                A[i], A[j] = A[j], A[i]
                for row in A:
                    row[i], row[j] = row[j], row[i]
            else:
                j = next((j for j in range(i + 1, n) if A[i][j] != 0), None)
                if j is not None:
                    # A[i][i] becomes 2*A[i][j] != 0
                    A[i] = [a + b for a, b in zip(A[i], A[j])]
                    for row in A:
                        row[i] += row[j]
        p = A[i][i]
        diagonal.append(p)
        if p == 0:
            continue
        for j in range(i + 1, n):
            f = A[j][i] / p
            if f:
                A[j] = [a - f * b for a, b in zip(A[j], A[i])]
                for row in A:
                    row[j] -= f * row[i]
    return diagonal


class Lattice:
    """Even integral lattice given by its Gram matrix in a fixed basis."""

    def __init__(self, gram: Sequence[Sequence[int]], name: Optional[str] = None):
        rows, cols = shape(gram)
        if rows != cols:
            raise DimensionMismatchError(f"Gram matrix must be square, got {rows}x{cols}")
        self.gram: IntMatrix = to_matrix(gram)
        self.name = name
        for i in range(rows):
            if self.gram[i][i] % 2 != 0:
                raise LatticeError(f"lattice is not even: diagonal entry {i} is {self.gram[i][i]}")
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise LatticeError(f"Gram matrix is not symmetric at ({i}, {j})")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @cached_property
    def det(self) -> int:
        return det(self.gram)

    @cached_property
    def signature(self) -> Tuple[int, int]:
        diagonal = _diagonalize(self.gram)
        return sum(1 for d in diagonal if d > 0), sum(1 for d in diagonal if d < 0)

    @property
    def is_unimodular(self) -> bool:
        return abs(self.det) == 1

    def require_nondegenerate(self) -> None:
        if self.det == 0:
            raise DegenerateLatticeError(f"degenerate Gram matrix ({self.label})")

    def inner(self, x: Sequence[int], y: Sequence[int]) -> int:
        if len(x) != self.rank or len(y) != self.rank:
            raise DimensionMismatchError(
                f"vectors of length {len(x)} and {len(y)} in a lattice of rank {self.rank}"
            )
        return dot(x, matvec(self.gram, y))

    def norm(self, x: Sequence[int]) -> int:
        return self.inner(x, x)

    def gram_of(self, basis: Sequence[Sequence[int]]) -> IntMatrix:
        if not basis:
            return []
        return matmul(matmul(basis, self.gram), transpose(basis))

    def unit(self, i: int) -> IntVector:
        return [1 if k == i else 0 for k in range(self.rank)]

    def zero(self) -> IntVector:
        return [0] * self.rank

    @property
    def label(self) -> str:
        return self.name or f"rank {self.rank}"

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.gram == other.gram

    def __hash__(self):
        return hash(tuple(map(tuple, self.gram)))

    def __repr__(self):
        return f"Lattice(name={self.name}, rank={self.rank})"


class Sublattice:
    """Sublattice of an ambient lattice; basis rows are ambient coordinates."""

    def __init__(self, ambient: Lattice, basis: Sequence[Sequence[int]]):
        self.ambient = ambient
        self.basis: IntMatrix = to_matrix(basis)
        for row in self.basis:
            if len(row) != ambient.rank:
                raise DimensionMismatchError(
                    f"basis vector of length {len(row)} in a lattice of rank {ambient.rank}"
                )
        if self.basis and rank(self.basis) != len(self.basis):
            raise DegenerateLatticeError("sublattice basis rows are linearly dependent")

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def gram(self) -> IntMatrix:
        return self.ambient.gram_of(self.basis)

    def as_lattice(self, name: Optional[str] = None) -> Lattice:
        return Lattice(self.gram, name=name)

    def __repr__(self):
        return f"Sublattice(ambient={self.ambient.label}, rank={self.rank})"


class DiscGroup:
    def __init__(
        self,
        invariant_factors: List[int],
        generator_lifts: List[List[Fraction]],
        qform: List[Fraction],
        bform: List[List[Fraction]],
    ):
        self.invariant_factors = invariant_factors
        self.generator_lifts = generator_lifts
        # q values mod 2, b values mod 1
        self.qform = qform
        self.bform = bform

    @property
    def order(self) -> int:
        result = 1
        for d in self.invariant_factors:
            result *= d
        return result

    @property
    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1

    def __repr__(self):
        return f"DiscGroup(invariant_factors={self.invariant_factors})"


class MukaiVector:
    def __init__(self, r: int, c: Sequence[int], s: int):
        self.r = int(r)
        self.c: IntVector = [int(x) for x in c]
        self.s = int(s)

    def __eq__(self, other):
        return isinstance(other, MukaiVector) and (self.r, self.c, self.s) == (other.r, other.c, other.s)

    def __repr__(self):
        return f"MukaiVector(r={self.r}, s={self.s})"
