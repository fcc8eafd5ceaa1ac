import io
import statistics

import numpy as np
import pytest

from app.core.errors import PreconditionError
from app.density.experiment import density_experiment, run_trial, write_csv
from app.density.perturb import perturb_to_saturated
from app.density.planes import (
    principal_angle,
    principal_angle_eig,
    principal_angle_svd,
    rational_round,
    sample_plane,
    validate_period,
)
from app.density.realize import (
    ANCHORED,
    GENERIC,
    brute_delta_search,
    brute_window,
    period_from_basis,
    realize_orbit,
    realize_orbit_with_stage,
    standard_period,
)
from app.lattice.core import is_saturated, span
from app.lattice.mukai import period_model
from app.models.orbit import HILBERT, KUMMER, OrbitClass
from app.orbits.classes import enumerate_classes, sigma_check
from app.orbits.invariant import f_invariant
from app.schemas.density import CSV_COLUMNS, DensityRowSchema


def test_standard_period(kind):
    pd = standard_period(7, kind)
    assert pd.T.gram == [[2, 0], [0, 2]]
    assert pd.emb.gram == [[2, 0], [0, 2]]


def test_period_data_rejects_indefinite():
    model = period_model(3, HILBERT)
    e1 = model.ambient.unit(16)
    f1 = model.ambient.unit(17)
    with pytest.raises(PreconditionError):
        period_from_basis(3, HILBERT, [e1, f1])


@pytest.mark.parametrize("n", [2, 3, 4, 7])
def test_realize_every_class(n, kind):
    pd = standard_period(n, kind)
    for c in enumerate_classes(n, kind):
        d = realize_orbit(pd, c)
        assert sigma_check(n, kind, d)
        assert all(pd.emb.ambient.inner(d, t) == 0 for t in pd.emb.basis)
        assert f_invariant(n, kind, d) == c


def test_realization_reports_stage():
    pd = standard_period(7, HILBERT)
    realization = realize_orbit_with_stage(pd, OrbitClass(2, -3, HILBERT, 7))
    assert realization.stage == GENERIC
    assert realization.height >= 1


@pytest.mark.parametrize("n", [2, 3, 4, 7])
def test_generic_stage_realizes_every_class(n, kind):
    pd = standard_period(n, kind)
    for c in enumerate_classes(n, kind):
        realization = realize_orbit_with_stage(pd, c)
        assert realization.stage == GENERIC, c.pair
        assert f_invariant(n, kind, realization.delta) == c


def test_generic_stage_on_a_tall_period():
    model = period_model(7, HILBERT)
    u1 = [0] * 16 + [3, 5, 1, 1, 0, 0, 0]
    u2 = [1] + [0] * 15 + [0, 0, 2, 7, 1, 1, 0]
    p = perturb_to_saturated(7, HILBERT, u1, u2, 1000)
    pd = period_from_basis(7, HILBERT, [p.u1, p.u2])
    for c in enumerate_classes(7, HILBERT):
        realization = realize_orbit_with_stage(pd, c)
        assert realization.stage == GENERIC
        assert all(model.ambient.inner(realization.delta, t) == 0 for t in pd.emb.basis)


def test_unsaturated_period_falls_back_to_anchored_stage():
    model = period_model(2, HILBERT)
    u1, u2 = model.positive_frame()[:2]
    pd = period_from_basis(2, HILBERT, [[2 * a for a in u1], u2])
    realization = realize_orbit_with_stage(pd, OrbitClass(1, -1, HILBERT, 2))
    assert realization.stage == ANCHORED
    assert realization.delta == model.w()


def test_realize_rejects_foreign_class():
    pd = standard_period(7, HILBERT)
    with pytest.raises(PreconditionError):
        realize_orbit(pd, OrbitClass(1, -8, KUMMER, 7))


def test_brute_window_avoids_support():
    pd = standard_period(7, HILBERT)
    assert brute_window(pd) == [22, 21, 20]


def test_brute_delta_search_n7():
    pd = standard_period(7, HILBERT)
    c = OrbitClass(2, -3, HILBERT, 7)
    d = brute_delta_search(pd, c, 12)
    assert d is not None
    assert f_invariant(7, HILBERT, d) == c
    assert sorted(abs(a) for a in d if a) == [5, 12, 12]
    assert brute_delta_search(pd, c, 11) is None
    assert brute_delta_search(pd, OrbitClass(1, -6, HILBERT, 7), 1) == pd.emb.ambient.unit(22)


@pytest.mark.parametrize("n", [2, 3, 4, 7])
def test_brute_search_agrees_with_realization(n, kind):
    pd = standard_period(n, kind)
    for c in enumerate_classes(n, kind):
        d = brute_delta_search(pd, c, min(3 * n, 12))
        if d is not None:
            assert sigma_check(n, kind, d)
            assert f_invariant(n, kind, d) == c


def test_validate_period_orthonormalises(lambda7):
    frame = period_model(7, HILBERT).positive_frame()
    x = np.array(frame[0], dtype=float)
    y = np.array(frame[0], dtype=float) + np.array(frame[1], dtype=float)
    plane = validate_period(x, y, lambda7)
    G = np.array(lambda7.gram, dtype=float)
    assert plane.x @ G @ plane.y == pytest.approx(0.0, abs=1e-9)
    assert plane.y @ G @ plane.y == pytest.approx(plane.norm)


def test_validate_period_rejects_negative(lambda7):
    with pytest.raises(PreconditionError):
        validate_period(np.eye(23)[0], np.eye(23)[1], lambda7)


def test_principal_angles_agree():
    rng = np.random.default_rng(7)
    for _ in range(20):
        U, V = rng.standard_normal((2, 6)), rng.standard_normal((2, 6))
        assert principal_angle_eig(U, V) == pytest.approx(principal_angle_svd(U, V), abs=1e-6)
    U = rng.standard_normal((2, 6))
    assert principal_angle(U, U[::-1]) == pytest.approx(0.0, abs=1e-6)


def test_rational_round():
    assert rational_round([0.5, 0.25, 0.0]) == [2, 1, 0]
    assert rational_round([3.0, 6.0]) == [1, 2]
    with pytest.raises(PreconditionError):
        rational_round([0.0, 0.0])


def test_sample_plane_covers_every_coordinate(lambda7):
    model = period_model(7, HILBERT)
    x, y = sample_plane(lambda7, model.positive_frame(), np.random.default_rng(1))
    assert x.shape == y.shape == (23,)
    assert np.all(x != 0) and np.all(y != 0)


def test_perturb_full_support_plane(kind):
    model = period_model(3, kind)
    L = model.ambient
    rng = np.random.default_rng(4)
    while True:
        x, y = sample_plane(L, model.positive_frame(), rng)
        u1, u2 = rational_round(x, 8), rational_round(y, 8)
        g = L.gram_of([u1, u2])
        if g[0][0] > 0 and g[0][0] * g[1][1] - g[0][1] ** 2 > 0 and all(u1) and all(u2):
            break
    p = perturb_to_saturated(3, kind, u1, u2, 64)
    assert p.certificate.is_valid
    assert p.certificate.pairing == [[1, 0], [0, 1]]
    assert is_saturated(span(model.tilde, model.iota(p.u1), model.iota(p.u2), model.v))


def test_perturb_frame_plane(kind):
    model = period_model(2, kind)
    u1, u2 = model.positive_frame()[:2]
    p = perturb_to_saturated(2, kind, u1, u2, 3)
    assert p.certificate.is_valid
    ys = [model.iota(p.u1), model.iota(p.u2)]
    assert is_saturated(span(model.tilde, *ys, model.v))
    for f in (p.certificate.f1, p.certificate.f2):
        assert model.tilde.inner(f, model.v) == 0


def test_perturb_preconditions():
    model = period_model(2, HILBERT)
    u1, u2 = model.positive_frame()[:2]
    with pytest.raises(PreconditionError):
        perturb_to_saturated(2, HILBERT, u1, u2, 0)
    with pytest.raises(PreconditionError):
        perturb_to_saturated(2, HILBERT, model.ambient.unit(16), model.ambient.unit(17), 2)


def _random_planes(kind, count, seed):
    model = period_model(2, kind)
    L = model.ambient
    rng = np.random.default_rng(seed)
    coords = [i for block in model.h_blocks[:2] for i in block]
    frame = model.positive_frame()[:2]
    planes = []
    while len(planes) < count:
        u1, u2 = list(frame[0]), list(frame[1])
        for u in (u1, u2):
            for i in coords:
                u[i] = 3 * u[i] + int(rng.integers(-2, 3))
        g = L.gram_of([u1, u2])
        if g[0][0] > 0 and g[0][0] * g[1][1] - g[0][1] ** 2 > 0:
            planes.append((u1, u2))
    return model, planes


def _angles(kind, k, planes):
    angles = []
    for u1, u2 in planes:
        try:
            p = perturb_to_saturated(2, kind, u1, u2, k)
        except PreconditionError:
            continue
        assert p.certificate.is_valid
        source = np.array([u1, u2], dtype=float)
        angles.append(principal_angle(source, np.array([p.u1, p.u2], dtype=float)))
    return angles


@pytest.mark.parametrize("trials", [100])
def test_perturbation_angle_shrinks_with_k(kind, trials):
    _, planes = _random_planes(kind, trials, 11)
    at_k = _angles(kind, 8, planes)
    at_2k = _angles(kind, 16, planes)
    assert len(at_k) >= trials // 2 and len(at_2k) >= trials // 2
    assert statistics.median(at_2k) <= 0.6 * statistics.median(at_k)


@pytest.mark.slow
def test_perturbation_certificates_long(kind):
    model, planes = _random_planes(kind, 100, 5)
    for u1, u2 in planes:
        p = perturb_to_saturated(2, kind, u1, u2, 4)
        ys = [model.iota(p.u1), model.iota(p.u2)]
        assert p.certificate.is_valid
        assert is_saturated(span(model.tilde, *ys, model.v))


def test_run_trial_row():
    row = run_trial(2, HILBERT, 0, 0.5, 42, 2**30, timing=False, denominator_cap=8)
    assert row.trial == 0
    assert row.classes_requested == row.classes_realized == 1
    assert row.millis == 0
    assert row.error is None
    assert row.k_used >= 1
    assert row.angle_achieved <= 0.5
    assert row.stages == [GENERIC]


def test_density_realizes_every_class_n7():
    rows = density_experiment(7, HILBERT, 3, 0.05, seed=3, timing=False, workers=1)
    for row in rows:
        assert row.error is None
        assert row.classes_realized == row.classes_requested == 2
        assert row.stages == [GENERIC, GENERIC]


def test_halving_epsilon_doubles_median_k():
    def median_k(epsilon):
        rows = density_experiment(
            2, KUMMER, 30, epsilon, seed=9, kmax=2**20, timing=False, workers=1, denominator_cap=8
        )
        assert all(row.angle_achieved <= epsilon for row in rows)
        return statistics.median(row.k_used for row in rows)

    coarse, fine = median_k(0.01), median_k(0.005)
    assert coarse >= 2
    assert fine >= 2 * coarse


def test_density_csv_records_trial_diagnostics():
    row = DensityRowSchema(trial=3, classes_requested=2, already_saturated=False, stages=[GENERIC], error="boom")
    cells = row.csv_row()
    assert len(cells) == len(CSV_COLUMNS)
    named = dict(zip(CSV_COLUMNS, cells))
    assert named["already_saturated"] == "false"
    assert named["stages"] == GENERIC
    assert named["error"] == "boom"
    assert dict(zip(CSV_COLUMNS, DensityRowSchema(trial=0, classes_requested=1).csv_row()))["already_saturated"] == ""


def test_density_csv_is_deterministic():
    def render():
        buffer = io.StringIO()
        write_csv(density_experiment(2, KUMMER, 3, 0.5, seed=42, kmax=8, timing=False), buffer)
        return buffer.getvalue()

    first = render()
    assert first == render()
    lines = first.splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 4


def test_density_experiment_preconditions():
    with pytest.raises(ValueError):
        density_experiment(2, HILBERT, 0, 0.5, seed=1)
    with pytest.raises(ValueError):
        density_experiment(2, HILBERT, 1, 0.0, seed=1)
