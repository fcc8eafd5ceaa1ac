import csv
import time
from multiprocessing import Pool
from typing import Iterable, List, Optional, TextIO, Tuple

import numpy as np

from app.core.config import settings
from app.core.errors import LatticeError
from app.density.perturb import perturb_to_saturated
from app.density.planes import condition_number, principal_angle, rational_round, sample_plane, validate_period
from app.density.realize import period_from_basis, realize_orbit_with_stage
from app.lattice.core import is_saturated, span
from app.lattice.mukai import PeriodModel, period_model
from app.logger.logger import setup_logger
from app.models.lattice import Lattice
from app.models.period import Perturbation
from app.orbits.classes import enumerate_classes
from app.schemas.density import CSV_COLUMNS, DensityRowSchema

logger = setup_logger(__name__)

MAX_RESAMPLES = 100


def _positive(gram) -> bool:
    return gram[0][0] > 0 and gram[0][0] * gram[1][1] - gram[0][1] ** 2 > 0


def _sample_rational_plane(
    model: PeriodModel, rng: np.random.Generator, cap: int = settings.DENOMINATOR_CAP
) -> Tuple[List[int], List[int], int]:
    """Rejection-sample a positive plane of the ambient space and round it with denominators up to cap."""
    L: Lattice = model.ambient
    frame = model.positive_frame()
    resamples = 0
    while resamples <= MAX_RESAMPLES:
        x, y = sample_plane(L, frame, rng)
        try:
            if condition_number(L, x, y) > settings.CONDITION_LIMIT:
                raise LatticeError("ill-conditioned plane")
            plane = validate_period(x, y, L)
            u1, u2 = rational_round(plane.x, cap), rational_round(plane.y, cap)
            if _positive(L.gram_of([u1, u2])):
                return u1, u2, resamples
        except LatticeError:
            pass
        resamples += 1
    raise LatticeError(f"no positive plane after {MAX_RESAMPLES} resamples")


def _approximate(model: PeriodModel, u1, u2, epsilon: float, kmax: int) -> Tuple[Optional[Perturbation], Optional[float]]:
    source = np.array([u1, u2], dtype=float)
    best: Tuple[Optional[Perturbation], Optional[float]] = (None, None)
    k = 1
    while k <= kmax:
        try:
            p = perturb_to_saturated(model.n, model.kind, u1, u2, k)
        except LatticeError as e:
            logger.debug(f"k={k}: возмущение не удалось: {str(e)}")
        else:
            angle = principal_angle(source, np.array([p.u1, p.u2], dtype=float))
            best = (p, angle)
            if angle <= epsilon:
                break
        k *= 2
    return best


def run_trial(
    n: int,
    kind: str,
    trial: int,
    epsilon: float,
    seed: int,
    kmax: int,
    timing: bool = True,
    denominator_cap: int = settings.DENOMINATOR_CAP,
) -> DensityRowSchema:
    """One trial; every failure is recorded in the row."""
    started = time.perf_counter()
    model = period_model(n, kind)
    classes = enumerate_classes(model.n, model.kind)
    row = DensityRowSchema(trial=trial, classes_requested=len(classes))
    rng = np.random.default_rng([seed, trial])
    try:
        u1, u2, row.resamples = _sample_rational_plane(model, rng, denominator_cap)
        row.already_saturated = is_saturated(span(model.tilde, model.iota(u1), model.iota(u2), model.v))
        p, angle = _approximate(model, u1, u2, epsilon, kmax)
        if p is None:
            raise LatticeError(f"no saturated perturbation up to k={kmax}")
        row.k_used, row.angle_achieved = p.k, angle
        if angle > epsilon:
            row.error = f"epsilon not reached up to k={kmax}"
        pd = period_from_basis(model.n, model.kind, [p.u1, p.u2])
        for c in classes:
            try:
                realization = realize_orbit_with_stage(pd, c)
            except LatticeError as e:
                logger.warning(f"Испытание {trial}: класс {c.pair} не реализован: {str(e)}")
                continue
            row.classes_realized += 1
            row.max_height = max(row.max_height, realization.height)
            row.stages.append(realization.stage)
    except LatticeError as e:
        logger.error(f"Испытание {trial}: {str(e)}")
        row.error = str(e)
    if timing:
        row.millis = int((time.perf_counter() - started) * 1000)
    return row


def _run_trial_args(args) -> DensityRowSchema:
    return run_trial(*args)


def density_experiment(
    n: int,
    kind: str,
    trials: int,
    epsilon: float,
    seed: Optional[int] = None,
    kmax: int = settings.DENSITY_KMAX,
    workers: int = settings.DENSITY_WORKERS,
    timing: bool = True,
    denominator_cap: int = settings.DENOMINATOR_CAP,
) -> List[DensityRowSchema]:
    """Seeded density experiment; rows come back in trial order."""
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    seed = settings.LATDENSE_SEED if seed is None else seed
    logger.info(f"Эксперимент плотности: n={n}, {kind}, испытаний {trials}, seed={seed}")
    jobs = [(n, kind, t, epsilon, seed, kmax, timing, denominator_cap) for t in range(trials)]
    if workers > 1:
        with Pool(workers) as pool:
            return list(pool.imap(_run_trial_args, jobs))
    return [_run_trial_args(job) for job in jobs]


def write_csv(rows: Iterable[DensityRowSchema], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.csv_row())
