import math

import numpy as np
import pytest

from jcdisorder import (
    DisorderSpec,
    QuenchPlan,
    ValidationError,
    discrete_atoms,
    distribution_quartiles,
    quench_average,
    quenched_series,
    sample_delta,
    sample_deltas,
)

KINDS = ("gaussian", "uniform", "discrete", "cauchy")
BIG = QuenchPlan(samples=100_000, master_seed=11)


def _cos_rows(deltas, tb):
    return np.cos(np.outer(1.0 + deltas[0], tb))


def test_spec_validation():
    with pytest.raises(ValidationError):
        DisorderSpec("triangular", 0.1)
    with pytest.raises(ValidationError):
        DisorderSpec("gaussian", -0.5)
    with pytest.raises(ValidationError):
        DisorderSpec("gaussian", float("nan"))
    assert DisorderSpec("uniform", 0).strength == 0.0


def test_plan_validation():
    with pytest.raises(ValidationError):
        QuenchPlan(samples=0)
    with pytest.raises(ValidationError):
        QuenchPlan(estimator="mode")
    with pytest.raises(ValidationError):
        QuenchPlan(master_seed=-1)
    with pytest.raises(ValidationError):
        QuenchPlan(rel_tol=0.0)


def test_cauchy_requires_median():
    spec = DisorderSpec("cauchy", 0.1)
    with pytest.raises(ValidationError):
        quenched_series(_cos_rows, spec, QuenchPlan(samples=8, estimator="mean"), [0.0, 1.0])
    est, _ = quenched_series(_cos_rows, spec, QuenchPlan(samples=8, estimator="median"), [0.0, 1.0])
    assert est.shape == (2,)


@pytest.mark.parametrize("kind", KINDS)
def test_draws_deterministic_and_chunkable(kind):
    spec = DisorderSpec(kind, 0.2)
    plan = QuenchPlan(samples=1000, master_seed=42)
    full = sample_deltas(spec, plan)
    assert np.array_equal(sample_deltas(spec, plan), full)
    # any split into contiguous ranges reproduces the same stream
    parts = [sample_deltas(spec, plan, start=a, count=c) for a, c in ((0, 137), (137, 363), (500, 500))]
    assert np.array_equal(np.concatenate(parts), full)
    for i in (0, 1, 137, 999):
        assert sample_delta(spec, plan, i) == full[i]


def test_streams_and_seeds_decouple():
    spec = DisorderSpec("gaussian", 0.2)
    plan = QuenchPlan(samples=64, master_seed=7)
    a = sample_deltas(spec, plan, stream=0)
    b = sample_deltas(spec, plan, stream=1)
    assert not np.array_equal(a, b)
    assert not np.array_equal(a, sample_deltas(spec, QuenchPlan(samples=64, master_seed=8)))


def test_range_checks():
    spec = DisorderSpec("gaussian", 0.2)
    plan = QuenchPlan(samples=10)
    with pytest.raises(ValidationError):
        sample_deltas(spec, plan, start=5, count=6)
    with pytest.raises(ValidationError):
        sample_delta(spec, plan, 10)


def test_zero_strength_draws_are_zero():
    for kind in KINDS:
        x = sample_deltas(DisorderSpec(kind, 0.0), QuenchPlan(samples=32, master_seed=1))
        assert np.array_equal(x, np.zeros(32))


@pytest.mark.parametrize("kind", KINDS)
def test_symmetry_and_quartiles(kind):
    s = 0.25
    spec = DisorderSpec(kind, s)
    q1, q2, q3 = distribution_quartiles(spec)
    assert q2 == 0.0 and q3 == -q1 and q3 > 0.0
    x = sample_deltas(spec, BIG)
    e1, e2, e3 = np.percentile(x, [25.0, 50.0, 75.0])
    # quartiles are robust for every kind, the heavy-tailed one included
    assert abs(e1 - q1) < 0.03 * s
    assert abs(e3 - q3) < 0.03 * s
    if kind == "discrete":
        # the sample median of a +-s coin flip sits on one of the atoms
        assert abs(e2) <= s
    else:
        assert abs(e2) < 0.02 * s


@pytest.mark.parametrize("kind", ("gaussian", "uniform", "discrete"))
def test_first_two_moments(kind):
    s = 0.3
    x = sample_deltas(DisorderSpec(kind, s), BIG)
    assert abs(x.mean()) < 4.0 * s / math.sqrt(x.size)
    assert abs(np.var(x, ddof=1) - s * s) < 0.02 * s * s


def test_discrete_atoms():
    atoms, wts = discrete_atoms(DisorderSpec("discrete", 0.4))
    assert np.array_equal(atoms, [-0.4, 0.4])
    assert np.array_equal(wts, [0.5, 0.5])
    with pytest.raises(ValidationError):
        discrete_atoms(DisorderSpec("gaussian", 0.4))


def test_quench_average_examples():
    est, se = quench_average([0.5], "mean")
    assert est == 0.5 and se == 0.0
    est, se = quench_average([1.0, 2.0, 3.0], "mean")
    assert est == 2.0
    assert se == math.sqrt(1.0 / 3.0)
    est, se = quench_average([1.0, 2.0, 3.0, 100.0], "median")
    assert est == 2.5
    assert se > 0.0
    est, se = quench_average([7.0], "median")
    assert est == 7.0 and se == 0.0
    with pytest.raises(ValidationError):
        quench_average([], "mean")
    with pytest.raises(ValidationError):
        quench_average([1.0], "mode")


def test_median_ignores_tail_corruption():
    x = sample_deltas(DisorderSpec("gaussian", 0.2), QuenchPlan(samples=4001, master_seed=3))
    bad = x.copy()
    bad[np.argsort(bad)[-40:]] *= 1e6
    med, _ = quench_average(x, "median")
    med_bad, _ = quench_average(bad, "median")
    assert med_bad == med
    mean, _ = quench_average(x, "mean")
    mean_bad, _ = quench_average(bad, "mean")
    assert abs(mean_bad - mean) > 1.0


def test_median_order_independent():
    x = sample_deltas(DisorderSpec("cauchy", 1.0), QuenchPlan(samples=501, master_seed=9))
    assert quench_average(x, "median") == quench_average(x[::-1].copy(), "median")


def test_series_mean_matches_direct_average():
    spec = DisorderSpec("gaussian", 0.1)
    plan = QuenchPlan(samples=700, master_seed=5)
    t = np.linspace(0.0, 20.0, 31)
    est, spread = quenched_series(_cos_rows, spec, plan, t)
    rows = _cos_rows((sample_deltas(spec, plan),), t)
    assert np.allclose(est, rows.mean(axis=0), rtol=0, atol=1e-12)
    se = rows.std(axis=0, ddof=1) / math.sqrt(plan.samples)
    assert np.allclose(spread, se, rtol=1e-6, atol=1e-15)


def test_series_median_matches_numpy():
    spec = DisorderSpec("cauchy", 0.3)
    plan = QuenchPlan(samples=301, estimator="median", master_seed=6)
    t = np.linspace(0.0, 5.0, 7)
    est, spread = quenched_series(_cos_rows, spec, plan, t)
    rows = _cos_rows((sample_deltas(spec, plan),), t)
    assert np.array_equal(est, np.median(rows, axis=0))
    assert np.all(spread >= 0.0)


def test_series_thread_count_never_changes_bits():
    spec = DisorderSpec("gaussian", 0.1)
    t = np.linspace(0.0, 20.0, 17)
    for estimator in ("mean", "median"):
        plan = QuenchPlan(samples=1000, master_seed=5, estimator=estimator)
        base = quenched_series(_cos_rows, spec, plan, t, threads=1)
        for k in (2, 3, 7):
            est, spread = quenched_series(_cos_rows, spec, plan, t, threads=k)
            assert np.array_equal(est, base[0])
            assert np.array_equal(spread, base[1])


def test_series_gaussian_closed_form_within_errorbars():
    # average of cos((1+d)t) over gaussian d is exp(-s^2 t^2 / 2) cos(t)
    s = 0.2
    plan = QuenchPlan(samples=20_000, master_seed=12)
    t = np.array([0.5, 1.0, 3.0, 7.0])
    est, spread = quenched_series(_cos_rows, DisorderSpec("gaussian", s), plan, t)
    exact = np.exp(-0.5 * s * s * t * t) * np.cos(t)
    assert np.all(np.abs(est - exact) < 4.0 * spread + 1e-12)


def test_series_two_streams():
    spec = DisorderSpec("uniform", 0.3)
    plan = QuenchPlan(samples=16, master_seed=2)

    def rows(deltas, tb):
        da, db = deltas
        return np.outer(da - db, np.ones(tb.size))

    est, _ = quenched_series(rows, (spec, spec), plan, [0.0])
    da = sample_deltas(spec, plan, stream=0)
    db = sample_deltas(spec, plan, stream=1)
    assert est[0] == pytest.approx(float((da - db).mean()), abs=1e-15)


def test_series_shape_and_validation():
    spec = DisorderSpec("gaussian", 0.1)
    plan = QuenchPlan(samples=8, master_seed=1)
    est, spread = quenched_series(_cos_rows, spec, plan, 2.0)
    assert est.shape == () and spread.shape == ()
    with pytest.raises(ValidationError):
        quenched_series(lambda d, tb: np.zeros((3, tb.size)), spec, plan, [0.0, 1.0])
    with pytest.raises(ValidationError):
        quenched_series(_cos_rows, (), plan, [0.0])
    with pytest.raises(ValidationError):
        quenched_series(_cos_rows, (spec,), plan, [0.0], streams=(0, 1))
