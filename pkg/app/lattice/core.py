from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd, lcm
from typing import List, Optional, Sequence

from app.core.config import settings
from app.core.errors import DimensionMismatchError, PreconditionError
from app.linalg import content, invariant_factors, kernel_basis, matmul, matvec, snf
from app.logger.logger import setup_logger
from app.models.lattice import DiscGroup, Lattice, Sublattice

logger = setup_logger(__name__)


def inner(L: Lattice, x: Sequence[int], y: Sequence[int]) -> int:
    return L.inner(x, y)


def span(L: Lattice, *vectors: Sequence[int]) -> Sublattice:
    return Sublattice(L, [list(v) for v in vectors])


def saturate(S: Sublattice) -> Sublattice:
    """Rational span of S intersected with the ambient lattice."""
    if not S.basis:
        return S
    return Sublattice(S.ambient, kernel_basis(kernel_basis(S.basis)))


def is_saturated(S: Sublattice) -> bool:
    if not S.basis:
        return True
    factors = invariant_factors(S.basis)
    return len(factors) == S.rank and all(d == 1 for d in factors)


def saturation_index(S: Sublattice) -> int:
    index = 1
    for d in invariant_factors(S.basis) if S.basis else []:
        index *= d
    return index


def orth_complement(L: Lattice, S: Sublattice) -> Sublattice:
    if S.ambient != L:
        raise DimensionMismatchError("sublattice belongs to a different ambient lattice")
    if not S.basis:
        return Sublattice(L, [L.unit(i) for i in range(L.rank)])
    return Sublattice(L, kernel_basis(matmul(S.basis, L.gram)))


def divisibility(L: Lattice, x: Sequence[int]) -> int:
    if not any(x):
        raise PreconditionError("divisibility of the zero vector")
    return content(matvec(L.gram, x))


def is_primitive(L: Lattice, x: Sequence[int]) -> bool:
    if len(x) != L.rank:
        raise DimensionMismatchError(f"vector of length {len(x)} in a lattice of rank {L.rank}")
    if not any(x):
        raise PreconditionError("primitivity of the zero vector")
    return content(x) == 1


def _mod(value: Fraction, modulus: int) -> Fraction:
    return value - modulus * (value // modulus)


@lru_cache(maxsize=64)
def disc_group(L: Lattice) -> DiscGroup:
    """Discriminant group L*/L from the Smith form of the Gram matrix.

    With D = U G V, the columns of V divided by the invariant factors give
    generator lifts in L (x) Q.
    """
    L.require_nondegenerate()
    D, _, V = snf(L.gram)
    factors, lifts = [], []
    for i in range(L.rank):
        d = D[i][i]
        if d > 1:
            factors.append(d)
            lifts.append([Fraction(V[k][i], d) for k in range(L.rank)])
    qform = [_mod(_rational_inner(L, x, x), 2) for x in lifts]
    bform = [[_mod(_rational_inner(L, x, y), 1) for y in lifts] for x in lifts]
    logger.debug(f"Дискриминантная группа {L.label}: {factors}")
    return DiscGroup(factors, lifts, qform, bform)


def _rational_inner(L: Lattice, x: Sequence, y: Sequence) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(x, matvec(L.gram, y))), Fraction(0))


def _element_order(c: Sequence[int], factors: Sequence[int]) -> int:
    order = 1
    for a, d in zip(c, factors):
        order = lcm(order, d // gcd(a, d))
    return order


def _value(D: DiscGroup, c: Sequence[int]) -> Fraction:
    q = sum((a * a * D.qform[i] for i, a in enumerate(c)), Fraction(0))
    for i in range(len(c)):
        for j in range(i + 1, len(c)):
            q += 2 * c[i] * c[j] * D.bform[i][j]
    return _mod(q, 2)


def _pairing(D: DiscGroup, c: Sequence[int], generator: int) -> Fraction:
    return _mod(sum((a * D.bform[i][generator] for i, a in enumerate(c)), Fraction(0)), 1)


def forms_isomorphic(D1: DiscGroup, D2: DiscGroup, limit: int = settings.DISC_FORM_LIMIT) -> Optional[bool]:
    """Whether the discriminant forms are isomorphic, or None above limit elements.

    Generators of D1 are sent one at a time to elements of D2 of the same
    order, q-value and pairings with the earlier images; the form being
    nondegenerate, such a map is injective, hence bijective.
    """
    if D1.invariant_factors != D2.invariant_factors:
        return False
    if D2.order > limit:
        return None
    factors = D2.invariant_factors
    elements = [list(c) for c in product(*(range(d) for d in factors))]

    def pair(x: Sequence[int], y: Sequence[int]) -> Fraction:
        return _mod(sum((a * _pairing(D2, x, j) for j, a in enumerate(y)), Fraction(0)), 1)

    def descend(images: List[List[int]]) -> bool:
        i = len(images)
        if i == len(factors):
            return True
        for y in elements:
            if _element_order(y, factors) != factors[i] or _value(D2, y) != D1.qform[i]:
                continue
            if any(pair(y, images[j]) != D1.bform[i][j] for j in range(i)):
                continue
            if descend(images + [y]):
                return True
        return False

    return descend([])
