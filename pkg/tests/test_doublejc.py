import math

import numpy as np
import pytest

from jcdisorder import (
    DisorderSpec,
    DoubleJcConfig,
    QuenchPlan,
    ValidationError,
    concurrence_clean,
    concurrence_general,
    concurrence_quenched,
    concurrence_realization,
    detect_esd,
    esd_region_scan,
    sample_deltas,
    two_atom_density,
)


def test_config_validation():
    with pytest.raises(ValidationError):
        DoubleJcConfig(alpha=-0.1)
    with pytest.raises(ValidationError):
        DoubleJcConfig(alpha=2.0)
    with pytest.raises(ValidationError):
        DoubleJcConfig(alpha=0.5, family="chi")
    with pytest.raises(ValidationError):
        DoubleJcConfig(alpha=0.5, ga=0.0)


def test_initial_concurrence():
    for family in ("psi", "phi"):
        for alpha in (0.0, 0.3, math.pi / 4, math.pi / 2):
            cfg = DoubleJcConfig(alpha=alpha, family=family)
            assert concurrence_clean(cfg, 0.0) == pytest.approx(abs(math.sin(2 * alpha)), abs=1e-12)


def test_psi_family_product_form():
    cfg = DoubleJcConfig(alpha=0.4, ga=1.3, gb=0.7, family="psi")
    t = np.linspace(0.0, 10.0, 200)
    want = abs(math.sin(0.8)) * np.abs(np.cos(1.3 * t) * np.cos(0.7 * t))
    assert np.allclose(concurrence_clean(cfg, t), want, rtol=0, atol=1e-14)


def test_phi_alpha_pi4_is_quartic():
    cfg = DoubleJcConfig(alpha=math.pi / 4, family="phi")
    t = np.linspace(0.0, 8.0, 300)
    assert np.allclose(concurrence_clean(cfg, t), np.cos(t) ** 4, rtol=0, atol=1e-12)


def test_phi_factorization_identity():
    # equal couplings: C(t) = cos^2(gt) max{0, sin 2a - 2 cos^2 a sin^2(gt)}
    t = np.linspace(0.0, 25.0, 2501)
    for alpha in (0.2, math.pi / 6, 0.7):
        cfg = DoubleJcConfig(alpha=alpha, family="phi")
        lhs = concurrence_clean(cfg, t)
        rhs = np.cos(t) ** 2 * np.maximum(
            0.0, math.sin(2 * alpha) - 2.0 * math.cos(alpha) ** 2 * np.sin(t) ** 2
        )
        assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_density_matrix_oracle():
    rng = np.random.default_rng(17)
    for _ in range(60):
        family = "psi" if rng.uniform() < 0.5 else "phi"
        cfg = DoubleJcConfig(
            alpha=rng.uniform(0.0, math.pi / 2),
            ga=rng.uniform(0.5, 1.5),
            gb=rng.uniform(0.5, 1.5),
            family=family,
        )
        da, db = rng.normal(0.0, 0.2, 2)
        tt = rng.uniform(0.0, 20.0)
        rho = two_atom_density(cfg, da, db, tt)
        assert abs(np.trace(rho).real - 1.0) < 1e-12
        assert np.linalg.eigvalsh(rho).min() > -1e-12
        c = concurrence_realization(cfg, da, db, tt)
        # the rank-2 structure of these states limits the general formula
        # to sqrt(eigenvalue noise), about 1e-8
        assert abs(concurrence_general(rho) - c) < 5e-8


def test_realization_zero_disorder_is_clean():
    cfg = DoubleJcConfig(alpha=0.6, family="phi")
    t = np.linspace(0.0, 12.0, 100)
    assert np.array_equal(concurrence_realization(cfg, 0.0, 0.0, t), concurrence_clean(cfg, t))


def test_detect_esd_synthetic():
    t = np.arange(0.0, 10.0 + 0.002, 0.004)
    v = np.full(t.size, 0.5)
    v[(t >= 2.0) & (t <= 3.0)] = 0.0   # long run hitting zero: a death interval
    v[(t >= 6.0) & (t <= 6.02)] = 0.0  # run shorter than min_gap: a touch
    v[t <= 0.3] = 0.0                  # run at the grid edge: neither
    rep = detect_esd(t, v)
    assert len(rep.death_intervals) == 1
    lo, hi = rep.death_intervals[0]
    assert lo == pytest.approx(2.0, abs=0.005)
    assert hi == pytest.approx(3.0, abs=0.005)
    assert len(rep.touch_points) == 1
    assert rep.touch_points[0] == pytest.approx(6.0, abs=0.025)
    assert rep.horizon == t[-1]


def test_detect_esd_requires_exact_zero():
    # a long graze below eps that never reaches zero is still a touch
    t = np.arange(0.0, 10.0 + 0.002, 0.004)
    v = np.full(t.size, 0.5)
    v[(t >= 2.0) & (t <= 3.0)] = 5e-5
    rep = detect_esd(t, v)
    assert rep.death_intervals == ()
    assert len(rep.touch_points) == 1


def test_detect_esd_grid_validation():
    with pytest.raises(ValidationError):
        detect_esd(np.arange(0.0, 5.0, 0.02), np.zeros(250))
    with pytest.raises(ValidationError):
        detect_esd([0.0, 0.004, 0.012], [1.0, 1.0, 1.0])
    with pytest.raises(ValidationError):
        detect_esd([0.0, 0.004], [1.0, 1.0])
    with pytest.raises(ValidationError):
        detect_esd(np.arange(0.0, 5.0, 0.004), np.zeros(10))


def test_clean_phi_death_and_revival_roots():
    cfg = DoubleJcConfig(alpha=math.pi / 6, family="phi")
    t = np.arange(0.0, 4.0 + 0.002, 0.004)
    rep = detect_esd(t, concurrence_clean(cfg, t))
    assert len(rep.death_intervals) == 1
    lo, hi = rep.death_intervals[0]
    t_death = math.asin(math.sqrt(math.tan(math.pi / 6)))
    assert abs(lo - t_death) <= 0.004 + 1e-9
    assert abs(hi - (math.pi - t_death)) <= 0.004 + 1e-9


def test_clean_psi_never_dies():
    cfg = DoubleJcConfig(alpha=math.pi / 6, family="psi")
    t = np.arange(0.0, 8.0 + 0.002, 0.004)
    rep = detect_esd(t, concurrence_clean(cfg, t))
    assert rep.death_intervals == ()
    assert len(rep.touch_points) >= 2
    assert min(abs(p - math.pi / 2) for p in rep.touch_points) < 0.01


def test_clean_phi_no_esd_at_large_alpha():
    t = np.arange(0.0, 8.0 + 0.002, 0.004)
    for alpha in (math.pi / 4, math.pi / 3, 1.3):
        rep = detect_esd(t, concurrence_clean(DoubleJcConfig(alpha=alpha), t))
        assert rep.death_intervals == ()


def test_quenched_matches_manual_average():
    cfg = DoubleJcConfig(alpha=math.pi / 6, family="phi")
    sa = DisorderSpec("gaussian", 0.1)
    sb = DisorderSpec("uniform", 0.2)
    plan = QuenchPlan(samples=300, master_seed=21)
    t = np.linspace(0.0, 10.0, 41)
    est, spread = concurrence_quenched(cfg, sa, sb, plan, t)
    da = sample_deltas(sa, plan, stream=0)
    db = sample_deltas(sb, plan, stream=1)
    rows = np.stack([concurrence_realization(cfg, a, b, t) for a, b in zip(da, db)])
    assert np.allclose(est, rows.mean(axis=0), rtol=0, atol=1e-12)
    assert np.all(spread >= 0.0)


def test_quenched_psi_never_dies():
    cfg = DoubleJcConfig(alpha=math.pi / 6, family="psi")
    plan = QuenchPlan(samples=200, master_seed=5)
    t = np.arange(0.0, 25.0 + 0.0025, 0.005)
    for s in (0.05, 0.2, 0.6):
        spec = DisorderSpec("gaussian", s)
        est, _ = concurrence_quenched(cfg, spec, spec, plan, t, threads=2)
        assert detect_esd(t, est).death_intervals == ()


def test_region_scan_smoke():
    plan = QuenchPlan(samples=48, master_seed=77)
    grid = [0.0, 0.3]
    alphas = [math.pi / 6, math.pi / 3]
    res = esd_region_scan(grid, grid, alphas, "gaussian", plan, horizon=8.0, threads=2)
    assert res.esd.shape == (2, 2, 2)
    assert res.esd.dtype == bool
    assert res.esd[0, 0, 0]        # clean curve dies below the threshold angle
    assert not res.esd[0, 0, 1]    # and survives above it
    assert res.fractional_volume() == pytest.approx(res.esd.mean())
    again = esd_region_scan(grid, grid, alphas, "gaussian", plan, horizon=8.0, threads=5)
    assert np.array_equal(res.esd, again.esd)


def test_region_scan_psi_is_empty():
    plan = QuenchPlan(samples=16, master_seed=3)
    res = esd_region_scan([0.0, 0.5], [0.0], [math.pi / 6], "gaussian", plan,
                          horizon=6.0, family="psi")
    assert not res.esd.any()


def test_region_scan_validation():
    plan = QuenchPlan(samples=8, master_seed=1)
    with pytest.raises(ValidationError):
        esd_region_scan([-0.1], [0.0], [0.5], "gaussian", plan)
    with pytest.raises(ValidationError):
        esd_region_scan([0.0], [0.0], [2.0], "gaussian", plan)
    with pytest.raises(ValidationError):
        esd_region_scan([0.0], [0.0], [0.5], "cauchy", plan)
    with pytest.raises(ValidationError):
        esd_region_scan([[0.0]], [0.0], [0.5], "gaussian", plan)
