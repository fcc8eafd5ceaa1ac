from typing import List, Optional, Sequence

import numpy as np

from app.core.errors import PreconditionError
from app.linalg import IntMatrix, IntVector, to_matrix
from app.models.lattice import Lattice, Sublattice


class PeriodData:
    """Rank 2 positive definite lattice T with its image emb in the ambient lattice."""

    def __init__(self, n: int, kind: str, T: Lattice, emb: Sublattice):
        self.n = n
        self.kind = kind
        self.T = T
        self.emb = emb
        if T.rank != 2 or emb.rank != 2:
            raise PreconditionError("period data needs a rank 2 lattice")
        if emb.gram != T.gram:
            raise PreconditionError(f"Gram of the embedding {emb.gram} differs from {T.gram}")
        if not (T.gram[0][0] > 0 and T.det > 0):
            raise PreconditionError(f"T = {T.gram} is not positive definite")

    def __repr__(self):
        return f"PeriodData(n={self.n}, kind={self.kind}, T={self.T.gram})"


class RealPlane:
    """Orthogonal pair (x, y) of equal positive norm spanning a period plane."""

    def __init__(self, x: np.ndarray, y: np.ndarray, norm: float):
        self.x = x
        self.y = y
        self.norm = norm

    @property
    def basis(self) -> np.ndarray:
        return np.vstack([self.x, self.y])

    def __repr__(self):
        return f"RealPlane(norm={self.norm:.6g})"


class SaturationCertificate:
    """f1, f2 orthogonal to v; pairing[i][j] = (f_i, u'_j) is unit upper triangular."""

    def __init__(self, f1: Sequence[int], f2: Sequence[int], pairing: Sequence[Sequence[int]]):
        self.f1: IntVector = list(f1)
        self.f2: IntVector = list(f2)
        self.pairing: IntMatrix = to_matrix(pairing)

    @property
    def is_valid(self) -> bool:
        p = self.pairing
        return p[0][0] == 1 and p[1][1] == 1 and p[1][0] == 0

    def __repr__(self):
        return f"SaturationCertificate(pairing={self.pairing})"


class Realization:
    """A realized exceptional class and the construction stage that produced it."""

    def __init__(self, delta: Sequence[int], stage: str, orbit_class=None):
        self.delta: IntVector = list(delta)
        self.stage = stage
        self.orbit_class = orbit_class

    @property
    def height(self) -> int:
        return max(abs(a) for a in self.delta)

    def __repr__(self):
        return f"Realization(stage={self.stage}, height={self.height})"


class Perturbation:
    def __init__(
        self,
        u1: Sequence[int],
        u2: Sequence[int],
        certificate: SaturationCertificate,
        k: int,
        pair: Optional[List[IntVector]] = None,
    ):
        self.u1: IntVector = list(u1)
        self.u2: IntVector = list(u2)
        self.certificate = certificate
        self.k = k
        self.pair = pair or []

    def __repr__(self):
        return f"Perturbation(k={self.k})"
