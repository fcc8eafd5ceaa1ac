from typing import List, Optional, Sequence

import numpy as np

from app.core.config import settings
from app.core.errors import PreconditionError, VerificationError
from app.lattice.core import disc_group, forms_isomorphic, is_saturated, orth_complement
from app.linalg import (
    IntMatrix,
    IntVector,
    as_integral,
    box,
    complete_basis,
    det,
    inverse_rational,
    kernel_basis,
    matmul,
    matvec,
    rank,
    reduce_modulo,
    solve_integer,
    transpose,
)
from app.logger.logger import setup_logger
from app.models.isometry import Isometry
from app.models.lattice import DiscGroup, Lattice, Sublattice

logger = setup_logger(__name__)


def _embedding_search(M: Lattice, L: Lattice, window: List[int], bound: int) -> Optional[IntMatrix]:
    Gw = np.array([[L.gram[i][j] for j in window] for i in window], dtype=object)
    C = box(len(window), bound).astype(object)
    GC = C @ Gw
    norms = (GC * C).sum(axis=1)
    levels = [(C[norms == M.gram[i][i]], GC[norms == M.gram[i][i]]) for i in range(M.rank)]

    def descend(chosen: List[np.ndarray]) -> Optional[IntMatrix]:
        level = len(chosen)
        if level == M.rank:
            full = [embed_into_window(L, window, x) for x in chosen]
            if rank(full) == M.rank and is_saturated(Sublattice(L, full)):
                return full
            return None
        cand, gcand = levels[level]
        mask = np.ones(len(cand), dtype=bool)
        for j, x in enumerate(chosen):
            mask &= gcand @ x == M.gram[level][j]
        for idx in np.flatnonzero(mask):
            found = descend(chosen + [cand[idx]])
            if found is not None:
                return found
        return None

    return descend([])


def find_primitive_embedding(
    M: Lattice,
    L: Lattice,
    bound: int = settings.EMBED_BOUND,
    window: Optional[Sequence[int]] = None,
) -> Optional[Sublattice]:
    """Saturated image of M in L with basis coordinates bounded by bound.

    Exhaustive within the bound (restricted to the window coordinates when
    given). Heights are tried in increasing order, candidates by L1 norm.
    """
    if M.rank > L.rank:
        raise PreconditionError(f"cannot embed rank {M.rank} into rank {L.rank}")
    if bound < 1:
        raise PreconditionError(f"bound must be at least 1, got {bound}")
    window = list(window) if window is not None else list(range(L.rank))
    for height in range(1, bound + 1):
        rows = _embedding_search(M, L, window, height)
        if rows is not None:
            logger.debug(f"Вложение {M.label} -> {L.label} найдено, высота {height}")
            return Sublattice(L, rows)
    logger.warning(f"Вложение {M.label} -> {L.label} не найдено (граница {bound})")
    return None


def _disc(S: Sublattice) -> Optional[DiscGroup]:
    lattice = S.as_lattice()
    if S.rank == 0 or lattice.det == 0:
        return None
    return disc_group(lattice)


def _forms_differ(K1: Sublattice, K2: Sublattice) -> bool:
    D1, D2 = _disc(K1), _disc(K2)
    if D1 is None or D2 is None:
        return (D1 is None) != (D2 is None)
    verdict = forms_isomorphic(D1, D2)
    if verdict is None:
        logger.debug(f"extend_isometry: группа порядка {D2.order} велика, формы не сравниваются")
    return verdict is False


class _Budget:
    def __init__(self, nodes: int):
        self.nodes = nodes

    def spend(self) -> bool:
        self.nodes -= 1
        return self.nodes >= 0


def extend_isometry(
    Ltilde: Lattice,
    S1: Sublattice,
    S2: Sublattice,
    phi: Optional[Sequence[Sequence[int]]] = None,
    bound: int = settings.EXTEND_BOUND,
    max_nodes: int = settings.EXTEND_MAX_NODES,
) -> Optional[Isometry]:
    """An isometry g of Ltilde with g(S1.basis[i]) = phi[i].

    S1 is completed to a basis of Ltilde; images of the completing vectors
    are searched in the affine lattices cut out by the pairing constraints,
    with kernel coefficients bounded by bound. Integrality of the assembled
    matrix is the gluing condition.
    """
    images = [list(r) for r in (phi if phi is not None else S2.basis)]
    if len(images) != S1.rank:
        raise PreconditionError(f"phi has {len(images)} images for a basis of rank {S1.rank}")
    if Ltilde.gram_of(images) != S1.gram:
        raise PreconditionError("phi does not preserve the Gram matrix")
    if not is_saturated(S1) or not is_saturated(S2):
        raise PreconditionError("extend_isometry needs saturated sublattices")
    if rank(S2.basis + images) != S2.rank:
        raise PreconditionError("phi images do not span S2")
    if images == S1.basis:
        return Isometry.identity(Ltilde)

    K1, K2 = orth_complement(Ltilde, S1), orth_complement(Ltilde, S2)
    if _forms_differ(K1, K2):
        logger.warning("extend_isometry: дискриминантные формы дополнений не изоморфны, продолжения нет")
        return None

    completion = complete_basis(S1.basis)
    B = S1.basis + completion
    budget = _Budget(max_nodes)
    G = Ltilde.gram

    def candidates(j: int, found: List[IntVector]):
        c = completion[j]
        A, rhs = [], []
        for s, y in zip(S1.basis, images):
            A.append(matvec(G, y))
            rhs.append(Ltilde.inner(c, s))
        for c_l, y_l in zip(completion, found):
            A.append(matvec(G, y_l))
            rhs.append(Ltilde.inner(c, c_l))
        y0 = solve_integer(A, rhs)
        if y0 is None:
            return
        K = kernel_basis(A)
        y0 = reduce_modulo(y0, K)
        target = Ltilde.norm(c)
        if not K:
            if Ltilde.norm(y0) == target and any(y0):
                yield y0
            return
        T = np.vstack([np.zeros((1, len(K)), dtype=np.int64), box(len(K), bound)]).astype(object)
        Y = np.array([y0], dtype=object) + T @ np.array(K, dtype=object)
        Gobj = np.array(G, dtype=object)
        norms = ((Y @ Gobj) * Y).sum(axis=1)
        for idx in np.flatnonzero(norms == target):
            y = [int(a) for a in Y[idx]]
            if any(y):
                yield y

    def descend(found: List[IntVector]) -> Optional[List[IntVector]]:
        j = len(found)
        if j == len(completion):
            return found if abs(det(images + found)) == 1 else None
        for y in candidates(j, found):
            if not budget.spend():
                return None
            result = descend(found + [y])
            if result is not None:
                return result
        return None

    extra = descend([])
    if extra is None:
        logger.warning(f"extend_isometry: продолжение не найдено (граница {bound}, узлов {max_nodes})")
        return None
    Y = images + extra
    Binv_t = as_integral(inverse_rational(transpose(B)))
    matrix = matmul(transpose(Y), Binv_t)
    g = Isometry(Ltilde, matrix, check=False)
    if not g.preserves_form() or any(g(s) != y for s, y in zip(S1.basis, images)):
        raise VerificationError("assembled extension failed verification")
    return g


def embed_into_window(L: Lattice, window: Sequence[int], x: Sequence[int]) -> IntVector:
    vec = L.zero()
    for k, i in enumerate(window):
        vec[i] = int(x[k])
    return vec


def restrict_to_window(window: Sequence[int], x: Sequence[int]) -> IntVector:
    inside = set(window)
    outside = [a for i, a in enumerate(x) if i not in inside]
    if any(outside):
        raise PreconditionError("vector is not supported on the search window")
    return [int(x[i]) for i in window]


def window_complement(L: Lattice, window: Sequence[int], vectors: Sequence[Sequence[int]]) -> IntMatrix:
    """Basis of the vectors supported on the window and orthogonal to all given vectors."""
    constraints = [[Gy[i] for i in window] for Gy in (matvec(L.gram, y) for y in vectors)]
    return [embed_into_window(L, window, x) for x in kernel_basis(constraints, width=len(window))]
