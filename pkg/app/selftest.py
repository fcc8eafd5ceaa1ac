"""Compact acceptance sweep runnable without pytest."""
import time
from typing import Callable, List, Tuple

from app.core.errors import LatticeError
from app.density.experiment import density_experiment
from app.density.perturb import perturb_to_saturated
from app.density.realize import GENERIC, realize_orbit_with_stage, standard_period
from app.isometry.group import disc_action, in_N, reflection
from app.lattice.core import disc_group, is_saturated, span
from app.lattice.mukai import period_model
from app.lattice.standard import kummer_lambda, lambda_n
from app.logger.logger import setup_logger
from app.models.orbit import HILBERT, KUMMER
from app.orbits.classes import enumerate_classes, orbit_count_formula, sigma_check
from app.orbits.invariant import f_invariant, witness_delta
from app.schemas.selftest import CheckResultSchema, SelftestReportSchema
from app.wedge.square import prime_power_unit_check, psi, tau_report, verify_psi_decomposition

logger = setup_logger(__name__)

Check = Callable[[], Tuple[bool, str]]


def check_orbit_counts() -> Tuple[bool, str]:
    bad = [n for n in range(2, 201) if len(enumerate_classes(n, HILBERT)) != orbit_count_formula(n, HILBERT)]
    return not bad, f"disagree at n={bad}" if bad else "2 <= n <= 200"


def check_discriminants() -> Tuple[bool, str]:
    bad = []
    for n in range(2, 51):
        if disc_group(lambda_n(n)).invariant_factors != [2 * n - 2]:
            bad.append(("Lambda", n))
        if disc_group(kummer_lambda(n)).invariant_factors != [2 * n + 2]:
            bad.append(("KummerLambda", n))
    return not bad, f"{bad}" if bad else "cyclic of order 2n-2 and 2n+2"


def check_psi() -> Tuple[bool, str]:
    report = verify_psi_decomposition()
    table = psi()
    # psi(e12) = e34, psi(e13) = -e24
    columns_ok = [row[0] for row in table] == [0, 1, 0, 0, 0, 0] and [row[2] for row in table] == [0, 0, 0, -1, 0, 0]
    ok = columns_ok and report.det_psi == -1 and all(c.decomposition_holds for c in report.conventions)
    minus = next(c for c in report.conventions if c.sign == -1)
    ok = ok and minus.orientation_positive == -1 and minus.orientation_negative == 1
    return ok, f"det {report.det_psi}, s=-1 cones ({minus.orientation_positive}, {minus.orientation_negative})"


def check_kummer_reflections() -> Tuple[bool, str]:
    bad = []
    for n in range(2, 21):
        model = period_model(n, KUMMER)
        for c in enumerate_classes(n, KUMMER):
            d = witness_delta(n, KUMMER, c)
            R = reflection(model.ambient, d)
            if (disc_action(R) + 1) % model.modulus != 0 or not in_N(R):
                bad.append((n, c.pair))
    return not bad, f"{bad}" if bad else "disc action -1 and in N"


def check_realization() -> Tuple[bool, str]:
    bad = []
    for kind in (HILBERT, KUMMER):
        for n in (2, 3, 4, 7):
            pd = standard_period(n, kind)
            for c in enumerate_classes(n, kind):
                try:
                    realization = realize_orbit_with_stage(pd, c)
                except LatticeError as e:
                    bad.append((kind, n, c.pair, str(e)))
                    continue
                d = realization.delta
                if realization.stage != GENERIC:
                    bad.append((kind, n, c.pair, realization.stage))
                if not sigma_check(n, kind, d) or f_invariant(n, kind, d) != c:
                    bad.append((kind, n, c.pair, "verification"))
    return not bad, f"{bad}" if bad else "every class realized"


def check_perturbation() -> Tuple[bool, str]:
    for kind in (HILBERT, KUMMER):
        model = period_model(2, kind)
        u1, u2 = model.positive_frame()[:2]
        p = perturb_to_saturated(2, kind, u1, u2, 3)
        y = [model.iota(p.u1), model.iota(p.u2)]
        if not p.certificate.is_valid or not is_saturated(span(model.tilde, *y, model.v)):
            return False, f"{kind}: certificate {p.certificate.pairing}"
    return True, "certificates and Smith form agree"


def check_units() -> Tuple[bool, str]:
    bad = [n for n in range(2, 201) if not prime_power_unit_check(n).agree]
    return not bad, f"disagree at n={bad}" if bad else "2 <= n <= 200"


def check_tau() -> Tuple[bool, str]:
    bad = []
    for n in range(2, 11):
        report = tau_report(n, -1)
        if report.det * report.chi != -1 or report.orientation_positive != 1 or not report.in_W or report.in_N:
            bad.append(n)
    return not bad, f"n={bad}" if bad else "in W, not in N"


def check_determinism() -> Tuple[bool, str]:
    first = [r.csv_row() for r in density_experiment(2, HILBERT, 2, 0.5, seed=42, timing=False)]
    second = [r.csv_row() for r in density_experiment(2, HILBERT, 2, 0.5, seed=42, timing=False)]
    return first == second, "identical rows" if first == second else "rows differ"


CHECKS: List[Tuple[str, Check]] = [
    ("orbit counts", check_orbit_counts),
    ("discriminant groups", check_discriminants),
    ("psi table and decomposition", check_psi),
    ("kummer reflections", check_kummer_reflections),
    ("orbit realization", check_realization),
    ("perturbation", check_perturbation),
    ("unit criterion", check_units),
    ("tau witness", check_tau),
    ("determinism", check_determinism),
]


def run_selftest() -> SelftestReportSchema:
    results = []
    for name, check in CHECKS:
        started = time.perf_counter()
        try:
            passed, detail = check()
        except LatticeError as e:
            passed, detail = False, f"{type(e).__name__}: {str(e)}"
        elapsed = time.perf_counter() - started
        level = "debug" if passed else "error"
        getattr(logger, level)(f"Самопроверка '{name}': {'OK' if passed else 'ОШИБКА'} ({elapsed:.2f} с)")
        results.append(CheckResultSchema(name=name, passed=passed, detail=detail))
    return SelftestReportSchema(passed=all(r.passed for r in results), checks=results)
