from math import gcd
from typing import List, Sequence

from sympy import divisors, primefactors

from app.core.errors import PreconditionError
from app.lattice.core import divisibility, is_primitive
from app.lattice.mukai import period_model
from app.logger.logger import setup_logger
from app.models.orbit import HILBERT, OrbitClass, class_product, normalize_kind

logger = setup_logger(__name__)


def _require_n(n: int) -> int:
    if int(n) < 2:
        raise PreconditionError(f"n must be at least 2, got {n}")
    return int(n)


def enumerate_classes(n: int, kind: str) -> List[OrbitClass]:
    """Coprime factorisations a*b of 1-n (or -1-n) up to swap and sign."""
    n = _require_n(n)
    kind = normalize_kind(kind)
    product = -class_product(n, kind)
    classes = []
    for a in divisors(product):
        b = product // a
        if a > b:
            break
        if gcd(a, b) == 1:
            classes.append(OrbitClass(a, -b, kind, n))
    logger.debug(f"Классы орбит n={n}, {kind}: {[c.pair for c in classes]}")
    return classes


def orbit_count_formula(n: int, kind: str = HILBERT) -> int:
    """2^(rho-1) with rho the number of distinct primes of n-1 (n+1 for kummer)."""
    n = _require_n(n)
    product = -class_product(n, kind)
    if product == 1:
        return 1
    return 2 ** (len(primefactors(product)) - 1)


def sigma_reasons(n: int, kind: str, d: Sequence[int]) -> List[str]:
    """Empty list when d is an exceptional class; otherwise what fails."""
    model = period_model(_require_n(n), normalize_kind(kind))
    L = model.ambient
    if len(d) != L.rank:
        raise PreconditionError(f"vector of length {len(d)}, expected {L.rank}")
    if not any(d):
        raise PreconditionError("zero vector")
    reasons = []
    if not is_primitive(L, d):
        reasons.append("not primitive")
    norm = L.norm(d)
    if norm != model.norm_w:
        reasons.append(f"norm {norm} != {model.norm_w}")
    div = divisibility(L, d)
    if div % model.modulus != 0:
        reasons.append(f"divisibility {div} not divisible by {model.modulus}")
    return reasons


def sigma_check(n: int, kind: str, d: Sequence[int]) -> bool:
    return not sigma_reasons(n, kind, d)

