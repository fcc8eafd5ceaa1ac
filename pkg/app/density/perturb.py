from functools import lru_cache
from typing import Sequence, Tuple

from app.core.config import settings
from app.core.errors import PreconditionError, VerificationError
from app.lattice.core import is_saturated, span
from app.lattice.mukai import PeriodModel, period_model
from app.linalg import IntVector
from app.logger.logger import setup_logger
from app.models.period import Perturbation, SaturationCertificate
from app.orbits.invariant import orthogonal_hyperbolic_pair

logger = setup_logger(__name__)

# how far to look for a viable k when the perturbed plane is not positive
_K_SEARCH_FACTOR = 64


def _positive_definite(gram) -> bool:
    return gram[0][0] > 0 and gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0] > 0


def _shifted(k: int, y, e):
    return [k * a + b for a, b in zip(y, e)]


@lru_cache(maxsize=256)
def _pair(n: int, kind: str, y1: Tuple[int, ...], y2: Tuple[int, ...], bound: int) -> Tuple[IntVector, IntVector]:
    model = period_model(n, kind)
    blocks = model.h_blocks + [(model.w_index, model.w_index + 1)]
    return orthogonal_hyperbolic_pair(model.tilde, blocks, [list(y1), list(y2), model.v], bound)


def _perturb(model: PeriodModel, y1, y2, k: int, bound: int):
    # the complement of <y1, y2, v, e1, f1> in the window is negative definite,
    # so the second step reuses the first pair swapped
    e1, f1 = _pair(model.n, model.kind, tuple(y1), tuple(y2), bound)
    return _shifted(k, y1, e1), _shifted(k, y2, f1), (e1, f1)


def perturb_to_saturated(
    n: int,
    kind: str,
    u1: Sequence[int],
    u2: Sequence[int],
    k: int,
    bound: int = settings.HYPERBOLIC_BOUND,
) -> Perturbation:
    """u1' = k u1 + e, u2' = k u2 + f with span(u1', u2') + Zv saturated in the extended lattice.

    (e, f) is a hyperbolic pair orthogonal to u1, u2 and v, so the certificate
    (f, e) pairs to the identity for every k. Inputs and outputs are in
    ambient coordinates; the certificate vectors live in the extended lattice.
    """
    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}")
    model = period_model(n, kind)
    tilde, v = model.tilde, model.v
    y1, y2 = model.iota(u1), model.iota(u2)
    if not _positive_definite(tilde.gram_of([y1, y2])):
        raise PreconditionError("u1, u2 do not span a positive definite plane")

    p1, p2, (e1, f1) = _perturb(model, y1, y2, k, bound)
    if not _positive_definite(tilde.gram_of([p1, p2])):
        viable = next(
            (
                kk
                for kk in range(k + 1, k * _K_SEARCH_FACTOR + 1)
                if _positive_definite(tilde.gram_of(list(_perturb(model, y1, y2, kk, bound)[:2])))
            ),
            None,
        )
        raise PreconditionError(f"perturbed plane is not positive definite for k={k}; minimal viable k={viable}")

    c1, c2 = f1, e1
    pairing = [[tilde.inner(f, p) for p in (p1, p2)] for f in (c1, c2)]
    certificate = SaturationCertificate(c1, c2, pairing)
    if not certificate.is_valid or tilde.inner(c1, v) != 0 or tilde.inner(c2, v) != 0:
        raise VerificationError(f"saturation certificate failed: pairing {pairing}")
    if not is_saturated(span(tilde, p1, p2, v)):
        raise VerificationError("certificate and Smith form disagree on saturation")
    logger.debug(f"Возмущение k={k}: сертификат {pairing}")
    return Perturbation(model.pull_back(p1), model.pull_back(p2), certificate, k, pair=[e1, f1])
