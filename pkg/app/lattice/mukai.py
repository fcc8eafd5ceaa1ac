from functools import lru_cache
from typing import List, Sequence, Tuple

from app.core.errors import DimensionMismatchError, PreconditionError
from app.lattice.core import is_saturated, orth_complement, span
from app.lattice.standard import K3_RANK, kummer_lambda, kummer_tilde, lambda_k3, lambda_n, mukai
from app.linalg import IntVector
from app.logger.logger import setup_logger
from app.models.lattice import Lattice, MukaiVector, Sublattice
from app.models.orbit import HILBERT, normalize_kind

logger = setup_logger(__name__)


@lru_cache(maxsize=None)
def _k3() -> Lattice:
    return lambda_k3()


def mukai_pairing(a: MukaiVector, b: MukaiVector) -> int:
    return -a.r * b.s + _k3().inner(a.c, b.c) - a.s * b.r


def mukai_dual(a: MukaiVector) -> MukaiVector:
    return MukaiVector(a.r, [-x for x in a.c], a.s)


def mukai_coordinates(a: MukaiVector) -> IntVector:
    """Coordinates in Lambda_K3 + H: (r, c, s) -> c + r*e - s*f."""
    if len(a.c) != K3_RANK:
        raise DimensionMismatchError(f"Mukai vector middle part has length {len(a.c)}, expected {K3_RANK}")
    return list(a.c) + [a.r, -a.s]


def mukai_vector(n: int) -> MukaiVector:
    return MukaiVector(1, [0] * K3_RANK, 1 - n)


def mukai_vperp_structure(n: int) -> Tuple[MukaiVector, bool]:
    if n < 2:
        raise PreconditionError(f"n must be at least 2, got {n}")
    v = mukai_vector(n)
    delta = MukaiVector(1, [0] * K3_RANK, n - 1)
    L = mukai()
    v_coords = mukai_coordinates(v)
    v_perp = orth_complement(L, span(L, v_coords))
    # H^2(S) and delta span a saturated sublattice of v-perp of full rank
    generators = [L.unit(i) for i in range(K3_RANK)] + [mukai_coordinates(delta)]
    S = Sublattice(L, generators)
    check = (
        mukai_pairing(delta, v) == 0
        and mukai_pairing(delta, delta) == 2 - 2 * n
        and all(L.inner(g, v_coords) == 0 for g in generators)
        and S.rank == v_perp.rank
        and is_saturated(S)
    )
    logger.debug(f"Проверка v-perp для n={n}: {check}")
    return delta, check


class PeriodModel:
    """Ambient lattice with its fixed primitive embedding into the extended lattice.

    The last ambient coordinate w goes to e - m f in the last hyperbolic
    plane of the extended lattice and v = e + m f, where m = n-1 (hilbert)
    or n+1 (kummer). All other coordinates map identically.
    """

    def __init__(self, n: int, kind: str):
        self.kind = normalize_kind(kind)
        self.n = int(n)
        if self.kind == HILBERT:
            self.ambient = lambda_n(n)
            self.tilde = mukai()
            self.m = self.n - 1
            # H^4 block of the Mukai lattice
            self.window = list(range(16, 24))
        else:
            self.ambient = kummer_lambda(n)
            self.tilde = kummer_tilde()
            self.m = self.n + 1
            self.window = list(range(0, 8))
        self.w_index = self.ambient.rank - 1
        # ambient hyperbolic blocks (e_i, f_i)
        first = self.window[0]
        self.h_blocks: List[Tuple[int, int]] = [(first + 2 * i, first + 2 * i + 1) for i in range(3)]
        self.v: IntVector = self.tilde.zero()
        self.v[-2], self.v[-1] = 1, self.m

    @property
    def norm_w(self) -> int:
        return -2 * self.m

    @property
    def modulus(self) -> int:
        return 2 * self.m

    def w(self) -> IntVector:
        return self.ambient.unit(self.w_index)

    def iota(self, x: Sequence[int]) -> IntVector:
        if len(x) != self.ambient.rank:
            raise DimensionMismatchError(f"vector of length {len(x)}, expected {self.ambient.rank}")
        return [int(a) for a in x[:-1]] + [int(x[-1]), -self.m * int(x[-1])]

    def pull_back(self, y: Sequence[int]) -> IntVector:
        if len(y) != self.tilde.rank:
            raise DimensionMismatchError(f"vector of length {len(y)}, expected {self.tilde.rank}")
        if int(y[-1]) != -self.m * int(y[-2]):
            raise PreconditionError("vector is not in the image of the ambient lattice")
        return [int(a) for a in y[:-2]] + [int(y[-2])]

    def positive_frame(self) -> List[IntVector]:
        frame = []
        for e, f in self.h_blocks:
            p = self.ambient.zero()
            p[e] = p[f] = 1
            frame.append(p)
        return frame

    def __repr__(self):
        return f"PeriodModel(n={self.n}, kind={self.kind})"


@lru_cache(maxsize=64)
def period_model(n: int, kind: str) -> PeriodModel:
    if int(n) < 2:
        raise PreconditionError(f"n must be at least 2, got {n}")
    return PeriodModel(n, kind)
