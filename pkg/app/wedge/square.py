from math import gcd
from typing import List, Sequence, Tuple

from sympy import primefactors
from sympy.combinatorics import Permutation

from app.core.errors import PreconditionError
from app.isometry.group import NEGATIVE, POSITIVE, chi, det_char, in_N, in_W, orientation_char, reflection
from app.linalg import IntMatrix, block_diag, det, identity, matmul, matvec, shape
from app.logger.logger import setup_logger
from app.models.isometry import Isometry
from app.models.lattice import Lattice
from app.schemas.wedge import (
    BlockStructureSchema,
    ConventionReportSchema,
    TauReportSchema,
    UnitCheckSchema,
    WedgeReportSchema,
)

logger = setup_logger(__name__)

WEDGE_BASIS = ["e12", "e34", "e13", "e24", "e14", "e23"]
# index pairs (i, j) of e_i ^ e_j, zero based, in basis order
WEDGE_PAIRS = [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)]

ALPHA = [1, -1, 0, 0, 0, 0]
BETA = [0, 0, 1, 1, 0, 0]
GAMMA = [0, 0, 0, 0, 1, -1]


class WedgeSquareLattice(Lattice):
    """Second exterior power of Z^4 paired by the volume form, scaled by sign."""

    def __init__(self, sign: int = -1):
        if sign not in (1, -1):
            raise PreconditionError(f"sign convention must be +1 or -1, got {sign}")
        self.sign = sign
        super().__init__([[sign * a for a in row] for row in phi()], name=f"wedge({sign:+d})")

    def positive_frame(self) -> IntMatrix:
        return _frames(self.sign)[0]

    def negative_frame(self) -> IntMatrix:
        return _frames(self.sign)[1]


def _volume(p: Tuple[int, int], q: Tuple[int, int]) -> int:
    """e_p ^ e_q against e1 ^ e2 ^ e3 ^ e4."""
    indices = list(p) + list(q)
    if len(set(indices)) < 4:
        return 0
    return Permutation(indices).signature()


def _frames(sign: int) -> Tuple[IntMatrix, IntMatrix]:
    plus = [[1, 1, 0, 0, 0, 0], [0, 0, 1, -1, 0, 0], [0, 0, 0, 0, 1, 1]]
    minus = [ALPHA, BETA, GAMMA]
    return (plus, minus) if sign == 1 else (minus, plus)


def wedge_gram(s: int = -1) -> WedgeSquareLattice:
    return WedgeSquareLattice(s)


def phi() -> IntMatrix:
    """phi(a)(b) = vol(a ^ b), as a matrix from the basis to the dual basis."""
    return [[_volume(p, q) for q in WEDGE_PAIRS] for p in WEDGE_PAIRS]


def psi() -> IntMatrix:
    """phi read as an endomorphism of the wedge square.

    The basis is orthonormal for the standard form on Z^4, so lowering
    indices sends e_ij* to e_ij and the matrix of psi is the matrix of phi.
    """
    return phi()


def wedge_sq_of(A: Sequence[Sequence[int]]) -> IntMatrix:
    """Matrix of the induced map on the second exterior power (2x2 minors)."""
    if shape(A) != (4, 4):
        raise PreconditionError(f"expected a 4x4 matrix, got {shape(A)}")
    if abs(det(A)) != 1:
        raise PreconditionError(f"det A = {det(A)}, expected +-1")
    return [
        [A[k][i] * A[l][j] - A[k][j] * A[l][i] for i, j in WEDGE_PAIRS]
        for k, l in WEDGE_PAIRS
    ]


def _convention_report(s: int, target: IntMatrix) -> ConventionReportSchema:
    L = wedge_gram(s)
    product = matmul(matmul(reflection(L, ALPHA).matrix, reflection(L, BETA).matrix), reflection(L, GAMMA).matrix)
    g = Isometry(L, target)
    return ConventionReportSchema(
        sign=s,
        norms={"alpha": L.norm(ALPHA), "beta": L.norm(BETA), "gamma": L.norm(GAMMA)},
        decomposition_holds=product == target,
        orientation_positive=orientation_char(g, POSITIVE, L.positive_frame()),
        orientation_negative=orientation_char(g, NEGATIVE, L.negative_frame()),
    )


def _definite(gram: Sequence[Sequence[int]]) -> bool:
    return all(det([row[:k] for row in gram[:k]]) > 0 for k in range(1, len(gram) + 1))


def block_structure() -> BlockStructureSchema:
    """psi is the identity on one definite 3-space and minus the identity on the other."""
    matrix = psi()
    L = wedge_gram(1)
    fixed, negated = L.positive_frame(), L.negative_frame()
    return BlockStructureSchema(
        fixed_frame=fixed,
        negated_frame=negated,
        fixed_definite=_definite(L.gram_of(fixed)),
        negated_definite=_definite([[-a for a in row] for row in L.gram_of(negated)]),
        identity_on_fixed=all(matvec(matrix, x) == x for x in fixed),
        minus_identity_on_negated=all(matvec(matrix, x) == [-a for a in x] for x in negated),
    )


def verify_psi_decomposition() -> WedgeReportSchema:
    """psi against R_alpha R_beta R_gamma under both sign conventions."""
    matrix = psi()
    conventions = [_convention_report(s, matrix) for s in (1, -1)]
    discrepancies = []
    for c in conventions:
        if not c.decomposition_holds:
            discrepancies.append(f"s={c.sign:+d}: psi != R_alpha R_beta R_gamma")
        if not c.norms["alpha"] == c.norms["gamma"] == -c.norms["beta"]:
            discrepancies.append(
                f"s={c.sign:+d}: norms (alpha, beta, gamma) = "
                f"({c.norms['alpha']}, {c.norms['beta']}, {c.norms['gamma']}), "
                "no convention gives beta the opposite sign"
            )
    det_psi = det(matrix)
    if det_psi != -1:
        discrepancies.append(f"det psi = {det_psi}")
    blocks = block_structure()
    if not blocks.holds:
        discrepancies.append("psi is not +1 and -1 on complementary definite 3-spaces")
    negative = next(c for c in conventions if c.sign == -1)
    reverses = negative.orientation_positive == -1 and negative.orientation_negative == 1
    for d in discrepancies:
        logger.warning(f"Разложение psi: {d}")
    return WedgeReportSchema(
        basis=WEDGE_BASIS,
        psi=matrix,
        psi_squared_is_identity=matmul(matrix, matrix) == identity(6),
        det_psi=det_psi,
        block_structure=blocks,
        reverses_positive_cone=reverses,
        conventions=conventions,
        discrepancies=discrepancies,
    )


def tau_lattice(n: int, s: int = -1) -> Lattice:
    if n < 2:
        raise PreconditionError(f"n must be at least 2, got {n}")
    return Lattice(block_diag(wedge_gram(s).gram, [[-2 - 2 * n]]), name=f"wedge({s:+d})+<{-2 - 2 * n}>")


def tau(n: int, s: int = -1) -> Isometry:
    """-psi on the wedge block, identity on the diagonal class."""
    minus_psi = [[-a for a in row] for row in psi()]
    return Isometry(tau_lattice(n, s), block_diag(minus_psi, [[1]]))


def _pad(frame: IntMatrix) -> IntMatrix:
    return [list(p) + [0] for p in frame]


def tau_report(n: int, s: int = -1) -> TauReportSchema:
    g = tau(n, s)
    W = wedge_gram(s)
    plus, minus = _pad(W.positive_frame()), _pad(W.negative_frame())
    return TauReportSchema(
        n=n,
        sign=s,
        matrix=g.matrix,
        det=det_char(g),
        chi=chi(g),
        orientation_positive=orientation_char(g, POSITIVE, plus),
        orientation_negative=orientation_char(g, NEGATIVE, minus),
        in_W=in_W(g, plus),
        in_N=in_N(g, plus),
        involution=(g @ g).matrix == identity(g.lattice.rank),
    )


def form_units(n: int) -> List[int]:
    """Units u mod 2n+2 preserving the discriminant form: u^2 = 1 mod 4(n+1)."""
    modulus = 2 * n + 2
    return [u for u in range(1, modulus) if gcd(u, modulus) == 1 and (u * u - 1) % (4 * (n + 1)) == 0]


def prime_power_unit_check(n: int) -> UnitCheckSchema:
    if n < 2:
        raise PreconditionError(f"n must be at least 2, got {n}")
    units = form_units(n)
    is_prime_power = len(primefactors(n + 1)) == 1
    return UnitCheckSchema(
        n=n,
        units=units,
        count=len(units),
        is_prime_power=is_prime_power,
        agree=(len(units) == 2) == is_prime_power,
    )
