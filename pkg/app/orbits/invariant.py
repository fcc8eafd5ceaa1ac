from itertools import groupby, product
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import divisors

from app.core.config import settings
from app.core.errors import PreconditionError, SearchExhaustedError, VerificationError
from app.lattice.core import saturate, saturation_index, span
from app.lattice.mukai import period_model
from app.embed.search import window_complement
from app.linalg import (
    IntMatrix,
    IntVector,
    content,
    det,
    kernel_basis,
    lll_reduce,
    matvec,
    reduce_modulo,
    small_vectors,
    solve_integer,
)
from app.logger.logger import setup_logger
from app.models.lattice import Lattice, Sublattice
from app.models.orbit import OrbitClass, normalize_kind
from app.orbits.classes import sigma_reasons

logger = setup_logger(__name__)


def _combine(coeffs: Sequence[int], basis: Sequence[Sequence[int]]) -> IntVector:
    width = len(basis[0])
    return [sum(c * row[j] for c, row in zip(coeffs, basis)) for j in range(width)]


def _complete_isotropic(gram: Sequence[Sequence[int]], u: Sequence[int]) -> Optional[IntVector]:
    """f with (u, f) = 1 and (f, f) = 0 for an isotropic u of divisibility one."""
    a = matvec(gram, u)
    t = solve_integer([a], [1])
    if t is None:
        return None
    tt = sum(x * y for x, y in zip(t, matvec(gram, t)))
    return [x - (tt // 2) * y for x, y in zip(t, u)]


def hyperbolic_basis(K: Sublattice) -> IntMatrix:
    """Rows (e', f') in the coordinates of K's basis with Gram [[0,1],[1,0]].

    For Gram [[A,B],[B,C]] with AC - B^2 = -1 the isotropic directions are
    (-B +- 1, A), so no search is needed.
    """
    gram = K.gram
    if K.rank != 2:
        raise PreconditionError(f"hyperbolic_basis needs rank 2, got {K.rank}")
    if gram[0][0] % 2 or gram[1][1] % 2 or det(gram) != -1:
        raise PreconditionError(f"Gram {gram} is not an even unimodular plane of signature (1,1)")
    A, B = gram[0][0], gram[0][1]
    if A == 0:
        u = [1, 0]
    else:
        u = [1 - B, A]
        g = gcd(*u)
        u = [x // g for x in u]
    f = _complete_isotropic(gram, u)
    P = [u, f]
    if K.ambient.gram_of([_combine(r, K.basis) for r in P]) != [[0, 1], [1, 0]]:
        raise VerificationError("hyperbolic basis check failed")
    return P


def split_hyperbolic_plane(
    L: Lattice, basis: Sequence[Sequence[int]], bound: int = settings.HYPERBOLIC_BOUND
) -> Tuple[IntVector, IntVector]:
    """A hyperbolic pair (e, f) of L inside the span of basis.

    Looks for an isotropic vector of divisibility one within the span, by
    increasing coefficient L1 norm; among hits of equal L1 norm the one with
    the smallest ambient Euclidean norm wins.
    """
    gram = L.gram_of(basis)
    shells = groupby(small_vectors(len(basis), bound), key=lambda c: sum(abs(x) for x in c))
    for _, shell in shells:
        hits = []
        for c in shell:
            gc = matvec(gram, c)
            if sum(x * y for x, y in zip(c, gc)) != 0 or content(gc) != 1:
                continue
            x = _combine(c, basis)
            hits.append((sum(a * a for a in x), c))
        if not hits:
            continue
        _, c = min(hits)
        f = _complete_isotropic(gram, list(c))
        e_vec, f_vec = _combine(c, basis), _combine(f, basis)
        if L.norm(e_vec) != 0 or L.norm(f_vec) != 0 or L.inner(e_vec, f_vec) != 1:
            raise VerificationError("hyperbolic pair check failed")
        return e_vec, f_vec
    logger.debug(f"split_hyperbolic_plane: изотропный вектор не найден (граница {bound})")
    raise SearchExhaustedError("split_hyperbolic_plane", bound, "no isotropic vector of divisibility one")


def _isotropic_generators(L: Lattice, blocks: Sequence[Tuple[int, int]], directions) -> IntMatrix:
    """Basis of a maximal isotropic sublattice of the given hyperbolic blocks.

    Blocks are paired up; reading H + H as 2x2 matrices with twice the
    determinant as norm, the rank one matrices p r^T for a fixed direction p
    form the plane spanned by p1 e_a - p2 f_b and p2 f_a + p1 e_b. An
    unpaired block contributes its e.
    """
    gens = []
    for k, p in enumerate(directions):
        (ea, fa), (eb, fb) = blocks[2 * k], blocks[2 * k + 1]
        g1, g2 = L.zero(), L.zero()
        g1[ea], g1[fb] = p[0], -p[1]
        g2[fa], g2[eb] = p[1], p[0]
        gens += [g1, g2]
    if len(blocks) % 2:
        gens.append(L.unit(blocks[-1][0]))
    return gens


def _directions(bound: int) -> List[Tuple[int, ...]]:
    return [c for c in small_vectors(2, bound) if gcd(*c) == 1 and next(a for a in c if a) > 0]


def construct_hyperbolic_pair(
    L: Lattice,
    blocks: Sequence[Tuple[int, int]],
    vectors: Sequence[Sequence[int]],
    bound: int = settings.PAIR_DIRECTION_BOUND,
) -> Tuple[IntVector, IntVector]:
    """A hyperbolic pair (e, f) supported on the blocks and orthogonal to vectors.

    e is a kernel vector of the pairing with vectors inside a maximal
    isotropic sublattice, so it is isotropic whatever the heights involved;
    f solves (f, vectors) = 0, (f, e) = 1 and is then made isotropic. All
    directions of height up to bound are tried and the pair of least
    Euclidean norm wins.
    """
    window = [i for block in blocks for i in block]
    Gw = [[L.gram[i][j] for j in window] for i in window]
    rows = [[Gy[i] for i in window] for Gy in (matvec(L.gram, y) for y in vectors)]
    hits = []
    for choice in product(_directions(bound), repeat=len(blocks) // 2):
        gens = [[g[i] for i in window] for g in _isotropic_generators(L, blocks, choice)]
        M = [[sum(a * b for a, b in zip(r, g)) for g in gens] for r in rows]
        for c in kernel_basis(M, width=len(gens)):
            e = _combine(c, gens)
            constraints = rows + [matvec(Gw, e)]
            f = solve_integer(constraints, [0] * len(rows) + [1])
            if f is None:
                continue
            f = reduce_modulo(f, kernel_basis(constraints))
            ff = sum(a * b for a, b in zip(f, matvec(Gw, f)))
            f = [a - (ff // 2) * b for a, b in zip(f, e)]
            hits.append((sum(a * a for a in e) + sum(a * a for a in f), e, f))
    if not hits:
        logger.warning(f"construct_hyperbolic_pair: пара не построена (граница {bound})")
        raise SearchExhaustedError("construct_hyperbolic_pair", bound, "no isotropic vector of divisibility one")
    _, e, f = min(hits)
    e_vec, f_vec = L.zero(), L.zero()
    for k, i in enumerate(window):
        e_vec[i], f_vec[i] = e[k], f[k]
    if (
        L.norm(e_vec) != 0
        or L.norm(f_vec) != 0
        or L.inner(e_vec, f_vec) != 1
        or any(L.inner(e_vec, y) or L.inner(f_vec, y) for y in vectors)
    ):
        raise VerificationError("constructed hyperbolic pair check failed")
    return e_vec, f_vec


def orthogonal_hyperbolic_pair(
    L: Lattice,
    blocks: Sequence[Tuple[int, int]],
    vectors: Sequence[Sequence[int]],
    bound: int = settings.HYPERBOLIC_BOUND,
) -> Tuple[IntVector, IntVector]:
    """Short search in the LLL-reduced complement on the blocks first, construction otherwise."""
    window = [i for block in blocks for i in block]
    complement = lll_reduce(window_complement(L, window, vectors))
    if complement:
        try:
            return split_hyperbolic_plane(L, complement, bound)
        except SearchExhaustedError:
            logger.debug("orthogonal_hyperbolic_pair: поиск не удался, пара строится")
    return construct_hyperbolic_pair(L, blocks, vectors)


def f_invariant_trace(n: int, kind: str, d: Sequence[int]) -> Dict:
    """f_invariant together with the saturation data it was computed from."""
    reasons = sigma_reasons(n, kind, d)
    if reasons:
        raise PreconditionError(f"not an exceptional class: {', '.join(reasons)}")
    model = period_model(int(n), normalize_kind(kind))
    y = model.iota(d)
    S = span(model.tilde, y, model.v)
    K = saturate(S)
    if K.rank != 2 or det(K.gram) != -1:
        raise VerificationError(f"saturation {K.gram} is not a hyperbolic plane")
    P = hyperbolic_basis(K)
    e_vec, f_vec = _combine(P[0], K.basis), _combine(P[1], K.basis)
    # y = a e' + b f'
    a, b = model.tilde.inner(y, f_vec), model.tilde.inner(y, e_vec)
    if 2 * a * b != model.norm_w:
        raise VerificationError(f"coordinates ({a}, {b}) do not reproduce the norm {model.norm_w}")
    c = OrbitClass.canonical(a, b, model.kind, model.n)
    logger.debug(f"f-инвариант: ({a}, {b}) -> {c.pair}")
    return {
        "orbit_class": c,
        "saturation_index": saturation_index(S),
        "saturation_basis": K.basis,
        "hyperbolic_pair": [e_vec, f_vec],
        "coordinates": [a, b],
    }


def f_invariant(n: int, kind: str, d: Sequence[int]) -> OrbitClass:
    return f_invariant_trace(n, kind, d)["orbit_class"]


def witness_delta(n: int, kind: str, c: OrbitClass, height: Optional[int] = None) -> IntVector:
    """An exceptional class with invariant c from the family 2m x e1 + 2m y f1 + z w.

    The norm condition reads z^2 = 4 m x y + 1, and the class only depends on
    z mod 2m, so z <= 4m + 1 reaches every class.
    """
    model = period_model(int(n), normalize_kind(kind))
    m = model.m
    height = height if height is not None else 4 * m + 1
    e1, f1 = model.h_blocks[0]
    for z in range(1, height + 1):
        if (z * z - 1) % (4 * m) != 0:
            continue
        xy = (z * z - 1) // (4 * m)
        pairs = [(0, 0)] if xy == 0 else [(x, xy // x) for x in divisors(xy) if x <= xy // x]
        for x, y in pairs:
            d = model.ambient.zero()
            d[e1], d[f1], d[model.w_index] = 2 * m * x, 2 * m * y, z
            if f_invariant(n, kind, d) == c:
                return d
    logger.warning(f"witness_delta: класс {c.pair} не найден (z <= {height})")
    raise SearchExhaustedError("witness_delta", height, f"class {c.pair}")

