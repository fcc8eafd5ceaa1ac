from typing import Sequence

from app.core.errors import DimensionMismatchError, VerificationError
from app.linalg import (
    IntMatrix,
    IntVector,
    as_integral,
    det,
    identity,
    inverse_rational,
    matmul,
    matvec,
    to_matrix,
    transpose,
)
from app.models.lattice import Lattice


class Isometry:
    """Isometry of a lattice; matrix acts on column coordinates, g(x) = M x."""

    def __init__(self, lattice: Lattice, matrix: Sequence[Sequence[int]], check: bool = True):
        self.lattice = lattice
        self.matrix: IntMatrix = to_matrix(matrix)
        if len(self.matrix) != lattice.rank:
            raise DimensionMismatchError(
                f"isometry of size {len(self.matrix)} on a lattice of rank {lattice.rank}"
            )
        if check and not self.preserves_form():
            raise VerificationError("matrix does not preserve the Gram form")

    @classmethod
    def identity(cls, lattice: Lattice) -> "Isometry":
        return cls(lattice, identity(lattice.rank), check=False)

    def preserves_form(self) -> bool:
        M = self.matrix
        return matmul(matmul(transpose(M), self.lattice.gram), M) == self.lattice.gram

    def __call__(self, x: Sequence[int]) -> IntVector:
        return matvec(self.matrix, x)

    def __matmul__(self, other: "Isometry") -> "Isometry":
        # (g @ h)(x) = g(h(x))
        if self.lattice != other.lattice:
            raise DimensionMismatchError("isometries of different lattices")
        return Isometry(self.lattice, matmul(self.matrix, other.matrix), check=False)

    def __neg__(self) -> "Isometry":
        return Isometry(self.lattice, [[-a for a in row] for row in self.matrix], check=False)

    def inverse(self) -> "Isometry":
        inv = as_integral(inverse_rational(self.matrix))
        if inv is None:
            raise VerificationError("isometry matrix is not unimodular")
        return Isometry(self.lattice, inv, check=False)

    @property
    def det(self) -> int:
        return det(self.matrix)

    def __eq__(self, other):
        return isinstance(other, Isometry) and self.lattice == other.lattice and self.matrix == other.matrix

    def __repr__(self):
        return f"Isometry(lattice={self.lattice.label})"
