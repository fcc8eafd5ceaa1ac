from typing import List, Optional, Tuple

import numpy as np

from app.core.config import settings
from app.core.errors import PreconditionError, SearchExhaustedError, VerificationError
from app.embed.search import embed_into_window, extend_isometry, window_complement
from app.lattice.core import is_saturated
from app.lattice.mukai import PeriodModel, period_model
from app.lattice.standard import HYPERBOLIC_GRAM
from app.linalg import IntVector, box, kernel_basis, matvec, reduce_modulo, solve_integer
from app.logger.logger import setup_logger
from app.models.lattice import Sublattice
from app.models.orbit import OrbitClass
from app.models.period import PeriodData, Realization
from app.orbits.classes import sigma_check
from app.orbits.invariant import f_invariant, orthogonal_hyperbolic_pair

logger = setup_logger(__name__)

GENERIC = "generic"
ANCHORED = "anchored"


def standard_period(n: int, kind: str) -> PeriodData:
    """T = diag(2, 2) embedded as e1 + f1, e2 + f2."""
    model = period_model(n, kind)
    basis = []
    for e, f in model.h_blocks[:2]:
        u = model.ambient.zero()
        u[e] = u[f] = 1
        basis.append(u)
    emb = Sublattice(model.ambient, basis)
    return PeriodData(model.n, model.kind, emb.as_lattice(name="T"), emb)


def period_from_basis(n: int, kind: str, basis) -> PeriodData:
    model = period_model(n, kind)
    emb = Sublattice(model.ambient, basis)
    return PeriodData(model.n, model.kind, emb.as_lattice(name="T"), emb)


def _check(pd: PeriodData, c: OrbitClass, delta: IntVector) -> bool:
    L = pd.emb.ambient
    return (
        all(L.inner(delta, t) == 0 for t in pd.emb.basis)
        and sigma_check(pd.n, pd.kind, delta)
        and f_invariant(pd.n, pd.kind, delta) == c
    )


def _generic_pair(pd: PeriodData, c: OrbitClass, model: PeriodModel) -> Optional[Tuple[IntVector, IntVector]]:
    """A hyperbolic pair (e, f) orthogonal to iota(T) with v = a e - b f.

    x0 pairs to one with v and zero with iota(T); moved off a hyperbolic
    pair (E, F) orthogonal to iota(T) + Zv and tuned along it, it becomes
    x with (x, v) = 2 a a* - 1 and (x, x) = -2 a* s, where a a* = 1 + b s.
    Then e = a* v + b x and f = s v + a x.
    """
    tilde, v = model.tilde, model.v
    targets = [model.iota(t) for t in pd.emb.basis]
    rows = [matvec(tilde.gram, y) for y in targets + [v]]
    x0 = solve_integer(rows, [0] * len(targets) + [1])
    if x0 is None:
        logger.debug("generic: iota(T) + Zv не насыщена")
        return None
    x0 = reduce_modulo(x0, kernel_basis(rows))
    blocks = model.h_blocks + [(model.w_index, model.w_index + 1)]
    try:
        E, F = orthogonal_hyperbolic_pair(tilde, blocks, targets + [v])
    except SearchExhaustedError:
        return None
    xe, xf = tilde.inner(x0, E), tilde.inner(x0, F)
    x0 = [x - xf * e - xe * f for x, e, f in zip(x0, E, F)]

    a, b = c.a, c.b
    a_star = pow(a, -1, abs(b))
    s = (a * a_star - 1) // b
    A, B = 2 * a * a_star - 1, -2 * a_star * s
    lam = (B - A * A * tilde.norm(x0)) // 2
    x = [A * p + lam * e + f for p, e, f in zip(x0, E, F)]
    e_new = [a_star * p + b * q for p, q in zip(v, x)]
    f_new = [s * p + a * q for p, q in zip(v, x)]
    return e_new, f_new


def _realize_generic(pd: PeriodData, c: OrbitClass, model: PeriodModel, bound: int) -> Optional[IntVector]:
    """T + H embedded as iota(T) and a pair (e, f); v1 = a e - b f is sent to v."""
    pair = _generic_pair(pd, c, model)
    if pair is None:
        return None
    tilde, v = model.tilde, model.v
    e, f = pair
    if tilde.gram_of([e, f]) != HYPERBOLIC_GRAM:
        raise VerificationError(f"generic pair for {c.pair} is not hyperbolic")
    targets = [model.iota(t) for t in pd.emb.basis]
    v1 = [c.a * x - c.b * y for x, y in zip(e, f)]
    delta1 = [c.a * x + c.b * y for x, y in zip(e, f)]
    S1 = Sublattice(tilde, targets + [v1])
    S2 = Sublattice(tilde, targets + [v])
    if not is_saturated(S2):
        return None
    g = extend_isometry(tilde, S1, S2, targets + [v], bound=bound)
    if g is None:
        return None
    return model.pull_back(g(delta1))


def _realize_anchored(pd: PeriodData, c: OrbitClass, model: PeriodModel, bound: int) -> Optional[IntVector]:
    """delta = 2m h + z w with h in the hyperbolic blocks, orthogonal to T and (h,h) = (z^2-1)/2m."""
    L, m = model.ambient, model.m
    coords = [i for block in model.h_blocks for i in block]
    K = window_complement(L, coords, pd.emb.basis)
    if not K:
        return None
    Kw = np.array([[row[i] for i in coords] for row in K], dtype=object)
    coeffs = np.vstack([np.zeros((1, len(K)), dtype=np.int64), box(len(K), bound)]).astype(object)
    H = coeffs @ Kw
    Gh = np.array([[L.gram[i][j] for j in coords] for i in coords], dtype=object)
    norms = ((H @ Gh) * H).sum(axis=1)
    for z in range(1, 4 * m + 2):
        if (z * z - 1) % (4 * m) != 0:
            continue
        target = (z * z - 1) // (2 * m)
        for idx in np.flatnonzero(norms == target):
            delta = L.zero()
            for k, i in enumerate(coords):
                delta[i] = 2 * m * int(H[idx][k])
            delta[model.w_index] = z
            if _check(pd, c, delta):
                return delta
    return None


def realize_orbit_with_stage(pd: PeriodData, c: OrbitClass, bound: int = settings.REALIZE_BOUND) -> Realization:
    """A class delta orthogonal to T with invariant c, and the stage that found it."""
    model = period_model(pd.n, pd.kind)
    if c.kind != model.kind or c.n != model.n:
        raise PreconditionError(f"orbit class {c} does not belong to n={model.n}, {model.kind}")
    for stage, build in ((GENERIC, _realize_generic), (ANCHORED, _realize_anchored)):
        delta = build(pd, c, model, bound)
        if delta is None:
            logger.debug(f"realize_orbit: этап {stage} не дал результата для {c.pair}")
            continue
        if not _check(pd, c, delta):
            raise VerificationError(f"{stage} realization of {c.pair} failed the independent check")
        return Realization(delta, stage, c)
    logger.warning(f"realize_orbit: класс {c.pair} не реализован (граница {bound})")
    raise SearchExhaustedError(ANCHORED, bound, f"class {c.pair}")


def realize_orbit(pd: PeriodData, c: OrbitClass, bound: int = settings.REALIZE_BOUND) -> IntVector:
    return realize_orbit_with_stage(pd, c, bound).delta


def brute_window(pd: PeriodData) -> List[int]:
    """The last three ambient coordinates outside the support of T."""
    used = {i for row in pd.emb.basis for i, a in enumerate(row) if a}
    free = [i for i in reversed(range(pd.emb.ambient.rank)) if i not in used]
    return free[:3]


def brute_delta_search(pd: PeriodData, c: OrbitClass, coord_bound: int) -> Optional[IntVector]:
    """First class with invariant c, orthogonal to T, among vectors on the brute window."""
    if coord_bound < 1:
        return None
    model = period_model(pd.n, pd.kind)
    L = model.ambient
    window = brute_window(pd)
    C = box(len(window), coord_bound).astype(object)
    Gw = np.array([[L.gram[i][j] for j in window] for i in window], dtype=object)
    mask = ((C @ Gw) * C).sum(axis=1) == model.norm_w
    for t in pd.emb.basis:
        Gt = [sum(L.gram[i][j] * t[j] for j in range(L.rank)) for i in window]
        mask &= C @ np.array(Gt, dtype=object) == 0
    for idx in np.flatnonzero(mask):
        delta = embed_into_window(L, window, C[idx])
        if sigma_check(pd.n, pd.kind, delta) and f_invariant(pd.n, pd.kind, delta) == c:
            return delta
    return None
