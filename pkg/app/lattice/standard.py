from typing import Callable, Dict, Optional

from app.core.errors import PreconditionError
from app.linalg import block_diag
from app.models.lattice import Lattice

# E8 Dynkin diagram edges (1-based), Bourbaki labelling
_E8_EDGES = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]

HYPERBOLIC_GRAM = [[0, 1], [1, 0]]

# Coordinates of Lambda(n): E8(-1) at 0..7 and 8..15, H at (16,17), (18,19), (20,21), w at 22
LAMBDA_H_BLOCKS = [(16, 17), (18, 19), (20, 21)]
LAMBDA_W = 22
K3_RANK = 22

# Mukai lattice: Lambda_K3 at 0..21, the extra H at (22, 23)
MUKAI_E, MUKAI_F = 22, 23

# KummerLambda(n): H at (0,1), (2,3), (4,5), w at 6; KummerTilde = H^4
KUMMER_H_BLOCKS = [(0, 1), (2, 3), (4, 5)]
KUMMER_W = 6
KUMMER_TILDE_E, KUMMER_TILDE_F = 6, 7


def _require_n(n: Optional[int]) -> int:
    if n is None:
        raise PreconditionError("parameter n is required")
    if int(n) < 2:
        raise PreconditionError(f"n must be at least 2, got {n}")
    return int(n)


def hyperbolic() -> Lattice:
    return Lattice(HYPERBOLIC_GRAM, name="H")


def e8_negative() -> Lattice:
    gram = [[0] * 8 for _ in range(8)]
    for i in range(8):
        gram[i][i] = -2
    for a, b in _E8_EDGES:
        gram[a - 1][b - 1] = gram[b - 1][a - 1] = 1
    return Lattice(gram, name="E8m")


def rank_one(d: int) -> Lattice:
    if d is None:
        raise PreconditionError("rank1 needs the value d")
    return Lattice([[int(d)]], name=f"rank1({d})")


def hyperbolic_power(k: int) -> Lattice:
    if k is None or int(k) < 1:
        raise PreconditionError(f"Hpow needs k >= 1, got {k}")
    return Lattice(block_diag(*([HYPERBOLIC_GRAM] * int(k))), name=f"Hpow({k})")


def lambda_k3() -> Lattice:
    e8 = e8_negative().gram
    return Lattice(block_diag(e8, e8, HYPERBOLIC_GRAM, HYPERBOLIC_GRAM, HYPERBOLIC_GRAM), name="LambdaK3")


def lambda_n(n: int) -> Lattice:
    n = _require_n(n)
    return Lattice(block_diag(lambda_k3().gram, [[2 - 2 * n]]), name=f"Lambda({n})")


def mukai() -> Lattice:
    return Lattice(block_diag(lambda_k3().gram, HYPERBOLIC_GRAM), name="Mukai")


def kummer_lambda(n: int) -> Lattice:
    n = _require_n(n)
    return Lattice(
        block_diag(HYPERBOLIC_GRAM, HYPERBOLIC_GRAM, HYPERBOLIC_GRAM, [[-2 - 2 * n]]),
        name=f"KummerLambda({n})",
    )


def kummer_tilde() -> Lattice:
    return Lattice(block_diag(*([HYPERBOLIC_GRAM] * 4)), name="KummerTilde")


_BUILDERS: Dict[str, Callable[[Optional[int]], Lattice]] = {
    "H": lambda n: hyperbolic(),
    "E8m": lambda n: e8_negative(),
    "rank1": rank_one,
    "LambdaK3": lambda n: lambda_k3(),
    "Lambda": lambda_n,
    "Mukai": lambda n: mukai(),
    "KummerLambda": kummer_lambda,
    "KummerTilde": lambda n: kummer_tilde(),
    "Hpow": hyperbolic_power,
}

STANDARD_NAMES = list(_BUILDERS)


def make_standard(name: str, n: Optional[int] = None) -> Lattice:
    """Build a standard lattice; n is the entry d for rank1 and the power k for Hpow."""
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise PreconditionError(f"unknown standard lattice: {name} (known: {', '.join(STANDARD_NAMES)})")
    return builder(n)
