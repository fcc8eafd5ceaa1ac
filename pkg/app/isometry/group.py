from math import gcd
from typing import List, Optional, Sequence

from app.core.config import ADJUST_BOUND
from app.core.errors import (
    CharacterUndefinedError,
    PreconditionError,
    SearchExhaustedError,
    VerificationError,
)
from app.lattice.core import disc_group, divisibility, orth_complement, span
from app.linalg import IntMatrix, det, kernel_basis, matmul, matvec, small_vectors
from app.logger.logger import setup_logger
from app.models.isometry import Isometry
from app.models.lattice import Lattice

logger = setup_logger(__name__)

POSITIVE = "positive"
NEGATIVE = "negative"


def reflection(L: Lattice, d: Sequence[int]) -> Isometry:
    """R_d(x) = x - 2 (x, d) / (d, d) d."""
    norm = L.norm(d)
    if norm == 0:
        raise PreconditionError("reflection in an isotropic vector")
    Gd = matvec(L.gram, d)
    if any((2 * a) % norm != 0 for a in Gd):
        raise PreconditionError(
            f"reflection is not integral: (d,d) = {norm} does not divide 2*div(d) = {2 * divisibility(L, d)}"
        )
    n = L.rank
    matrix = [[int(i == j) - d[i] * (2 * Gd[j] // norm) for j in range(n)] for i in range(n)]
    return Isometry(L, matrix, check=False)


def det_char(g: Isometry) -> int:
    return 1 if g.det > 0 else -1


def disc_action(g: Isometry) -> int:
    """Multiplier u (mod the group order) of g on a cyclic discriminant group."""
    D = disc_group(g.lattice)
    if not D.invariant_factors:
        return 1
    if not D.is_cyclic:
        raise PreconditionError(f"discriminant group {D.invariant_factors} is not cyclic")
    order = D.invariant_factors[0]
    x = D.generator_lifts[0]
    gx = matvec(g.matrix, x)
    for u in range(1, order):
        if gcd(u, order) != 1:
            continue
        if all((a - u * b).denominator == 1 for a, b in zip(gx, x)):
            return u
    raise VerificationError("isometry does not act by a unit on the discriminant group")


def chi(g: Isometry) -> int:
    order = disc_group(g.lattice).order
    u = disc_action(g)
    # for order <= 2 the units 1 and -1 coincide
    if (u - 1) % order == 0:
        return 1
    if (u + 1) % order == 0:
        return -1
    raise CharacterUndefinedError(f"discriminant action u={u} mod {order} is not +1 or -1")


def hyperbolic_blocks(L: Lattice) -> List[tuple]:
    """Coordinate pairs (e, f) spanning orthogonal H summands of the Gram matrix."""
    G = L.gram
    blocks, i = [], 0
    while i + 1 < L.rank:
        row_e = [a for k, a in enumerate(G[i]) if k != i + 1]
        row_f = [a for k, a in enumerate(G[i + 1]) if k != i]
        if G[i][i + 1] == 1 and not any(row_e) and not any(row_f):
            blocks.append((i, i + 1))
            i += 2
        else:
            i += 1
    return blocks


def reference_frame(L: Lattice, cone: str = POSITIVE) -> IntMatrix:
    """e_i + f_i over the H summands spans the positive part; its complement the negative part."""
    positive = []
    for e, f in hyperbolic_blocks(L):
        p = L.zero()
        p[e] = p[f] = 1
        positive.append(p)
    if len(positive) != L.signature[0]:
        raise PreconditionError(f"no reference frame for {L.label}; pass one explicitly")
    if cone == POSITIVE:
        return positive
    if cone == NEGATIVE:
        return kernel_basis(matmul(positive, L.gram))
    raise PreconditionError(f"unknown cone: {cone}")


def orientation_char(g: Isometry, cone: str = POSITIVE, frame: Optional[Sequence[Sequence[int]]] = None) -> int:
    """Sign of g on the orientation of the positive (or negative) cone.

    The projection of g(p_i) to P along its orthogonal complement has
    coordinates Gram(P)^-1 A with A[k][i] = (p_k, g p_i); only signs matter.
    """
    L = g.lattice
    P = [list(p) for p in frame] if frame is not None else reference_frame(L, cone)
    gram_p = L.gram_of(P)
    definite = 1 if cone == POSITIVE else -1
    if any(definite * gram_p[i][i] <= 0 for i in range(len(P))):
        raise PreconditionError(f"reference frame is not {cone} definite")
    A = [[L.inner(p_k, g(p_i)) for p_i in P] for p_k in P]
    det_a = det(A)
    if det_a == 0:
        raise VerificationError("degenerate projection onto the reference subspace")
    det_p = det(gram_p)
    return 1 if (det_a > 0) == (det_p > 0) else -1


def in_W(g: Isometry, frame: Optional[Sequence[Sequence[int]]] = None) -> bool:
    if orientation_char(g, POSITIVE, frame) != 1:
        return False
    try:
        chi(g)
    except CharacterUndefinedError:
        return False
    return True


def in_N(g: Isometry, frame: Optional[Sequence[Sequence[int]]] = None) -> bool:
    return in_W(g, frame) and det_char(g) * chi(g) == 1


def adjust_to_N(w: Isometry, d: Sequence[int], bound: int = ADJUST_BOUND) -> Isometry:
    """w o R_e for a norm -2 class e orthogonal to d; lands in N when w is in W but not N."""
    L = w.lattice
    if not in_W(w) or in_N(w):
        raise PreconditionError("adjust_to_N needs an element of W outside N")
    K = orth_complement(L, span(L, d)).basis
    for coeffs in small_vectors(len(K), bound):
        e = [sum(c * row[j] for c, row in zip(coeffs, K)) for j in range(L.rank)]
        if L.norm(e) != -2:
            continue
        g = w @ reflection(L, e)
        if not in_N(g) or g(d) != w(d):
            raise VerificationError("adjusted isometry failed the N membership check")
        logger.debug(f"adjust_to_N: e={e}")
        return g
    logger.warning(f"adjust_to_N: вектор нормы -2 не найден (граница {bound})")
    raise SearchExhaustedError("adjust_to_N", bound, "no norm -2 class in the orthogonal complement")


def compose(*gs: Isometry) -> Isometry:
    result = gs[0]
    for g in gs[1:]:
        result = result @ g
    return result

