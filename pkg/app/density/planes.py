from math import gcd
from typing import List, Sequence, Tuple

import numpy as np
import scipy.linalg

from app.core.config import settings
from app.core.errors import PreconditionError
from app.linalg import IntVector
from app.models.lattice import Lattice
from app.models.period import RealPlane


def _form(L: Lattice) -> np.ndarray:
    return np.array(L.gram, dtype=float)


def plane_gram(L: Lattice, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    G = _form(L)
    B = np.vstack([x, y])
    return B @ G @ B.T


def validate_period(x: Sequence[float], y: Sequence[float], L: Lattice, tol: float = settings.POSITIVITY_TOL) -> RealPlane:
    """Rotate (x, y) inside their plane to an orthogonal pair of equal positive norm."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != (L.rank,) or y.shape != (L.rank,):
        raise PreconditionError(f"period vectors must have length {L.rank}")
    Q = plane_gram(L, x, y)
    scale = max(1.0, float(np.abs(Q).max()))
    if Q[0, 0] <= tol * scale or np.linalg.det(Q) <= tol * scale * scale:
        raise PreconditionError(f"plane is not positive definite: Gram {Q.tolist()}")
    # Gram-Schmidt in the form, then rescale y to the norm of x
    y_perp = y - (Q[0, 1] / Q[0, 0]) * x
    norm_perp = float(plane_gram(L, y_perp, y_perp)[0, 0])
    y_perp = y_perp * np.sqrt(Q[0, 0] / norm_perp)
    return RealPlane(x, y_perp, float(Q[0, 0]))


def condition_number(L: Lattice, x: np.ndarray, y: np.ndarray) -> float:
    return float(np.linalg.cond(plane_gram(L, x, y)))


def principal_angle_eig(U: np.ndarray, V: np.ndarray) -> float:
    """Largest principal angle from the eigenvalues of the projected Gram."""
    Qu, _ = np.linalg.qr(np.atleast_2d(U).T)
    Qv, _ = np.linalg.qr(np.atleast_2d(V).T)
    M = Qu.T @ Qv
    cos2 = np.clip(np.linalg.eigvalsh(M @ M.T), 0.0, 1.0)
    return float(np.arccos(np.sqrt(cos2.min())))


def principal_angle_svd(U: np.ndarray, V: np.ndarray) -> float:
    """Largest principal angle from the singular values of the basis overlap."""
    Uo = scipy.linalg.orth(np.atleast_2d(U).T)
    Vo = scipy.linalg.orth(np.atleast_2d(V).T)
    s = scipy.linalg.svd(Uo.T @ Vo, compute_uv=False)
    s = np.clip(s, 0, 1)
    return float(np.arccos(s.min()))


def principal_angle(U: np.ndarray, V: np.ndarray) -> float:
    return principal_angle_svd(U, V)


def rational_round(x: Sequence[float], cap: int = settings.DENOMINATOR_CAP) -> IntVector:
    """Primitive integer vector along x, with one shared denominator q <= cap.

    x is scaled to unit max-norm; q is the smallest denominator whose
    rounding error is within 1/cap, else the one with the smallest error.
    """
    x = np.asarray(x, dtype=float)
    top = float(np.abs(x).max()) if x.size else 0.0
    if top == 0.0:
        raise PreconditionError("rounded vector is zero")
    x = x / top
    q = np.arange(1, cap + 1, dtype=float)[:, None]
    scaled = q * x
    errors = np.abs(scaled - np.rint(scaled)).max(axis=1)
    good = np.flatnonzero(errors <= 1.0 / cap)
    best = int(good[0]) if good.size else int(np.argmin(errors))
    ints = [int(a) for a in np.rint(scaled[best])]
    g = 0
    for a in ints:
        g = gcd(g, a)
    return [a // g for a in ints]


def sample_plane(
    L: Lattice,
    frame: Sequence[Sequence[int]],
    rng: np.random.Generator,
    noise: float = settings.SAMPLING_NOISE,
) -> Tuple[np.ndarray, np.ndarray]:
    """Gaussian combinations of a positive frame plus Gaussian noise on every coordinate."""
    F = np.array(frame, dtype=float)
    vectors: List[np.ndarray] = []
    for _ in range(2):
        v = rng.standard_normal(len(F)) @ F
        vectors.append(v + noise * rng.standard_normal(L.rank))
    return vectors[0], vectors[1]
