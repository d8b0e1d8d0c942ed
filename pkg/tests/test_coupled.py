import math

import numpy as np
import pytest

from jcdisorder import (
    CoupledConfig,
    DisorderSpec,
    DoubleJcConfig,
    ISING_BASIS,
    QuenchPlan,
    ValidationError,
    XY_BASIS,
    basis_for,
    build_hamiltonian,
    concurrence_general,
    concurrence_realization,
    coupled_concurrence,
    coupled_concurrence_quenched,
    evolve,
    initial_state,
    partial_trace_cavities,
    sample_deltas,
    saturation_value,
)

ALPHA = math.pi / 6


def test_basis_labels():
    assert ISING_BASIS.dim == 5
    assert XY_BASIS.dim == 9
    assert ISING_BASIS.labels[0] == (1, 1, 0, 0)
    assert ISING_BASIS.labels[-1] == (0, 0, 0, 0)
    assert XY_BASIS.labels[6] == (0, 0, 0, 2)
    assert XY_BASIS.labels[7] == (0, 0, 2, 0)
    assert basis_for("ising") is ISING_BASIS
    assert basis_for("xy") is XY_BASIS
    with pytest.raises(ValidationError):
        basis_for("heisenberg")


def test_ising_hamiltonian_elements():
    cfg = CoupledConfig(interaction="ising", alpha=ALPHA, jz=0.2)
    h = build_hamiltonian(cfg, da=0.25, db=-0.1)
    assert np.array_equal(h, h.T)
    assert h[0, 1] == pytest.approx(1.25, abs=1e-15)
    assert h[0, 2] == pytest.approx(0.9, abs=1e-15)
    assert h[1, 3] == pytest.approx(0.9, abs=1e-15)
    assert h[2, 3] == pytest.approx(1.25, abs=1e-15)
    assert h[0, 3] == 0.0
    # sz_A sz_B over the five labels alternates +,-,-,+,+
    assert np.allclose(np.diag(h), 0.2 * np.array([1.0, -1.0, -1.0, 1.0, 1.0]), atol=1e-15)


def test_xy_hamiltonian_elements():
    cfg = CoupledConfig(interaction="xy", alpha=ALPHA, j=0.05, gamma=0.5)
    h = build_hamiltonian(cfg)
    assert np.array_equal(h, h.T)
    assert h[0, 8] == pytest.approx(0.05, abs=1e-15)   # double flip, 2 J gamma
    assert h[1, 3] == pytest.approx(0.1, abs=1e-15)    # flip-flop, 2 J
    assert h[2, 4] == pytest.approx(0.1, abs=1e-15)
    assert h[3, 7] == pytest.approx(math.sqrt(2.0), abs=1e-15)
    assert h[4, 6] == pytest.approx(math.sqrt(2.0), abs=1e-15)
    assert np.allclose(np.diag(h), 0.0, atol=1e-15)


def test_bare_frequency_convention():
    # omega adds omega/2 per ground atom (via sz) and omega per photon
    cfg = CoupledConfig(interaction="ising", alpha=ALPHA, omega=2.0)
    h = build_hamiltonian(cfg)
    assert np.allclose(np.diag(h), [-2.0, 2.0, 2.0, 6.0, 2.0], atol=1e-14)


def test_initial_state():
    psi = initial_state("ising", ALPHA)
    assert psi.shape == (5,)
    assert psi[0] == pytest.approx(math.cos(ALPHA), rel=1e-15)
    assert psi[-1] == pytest.approx(math.sin(ALPHA), rel=1e-15)
    assert np.linalg.norm(psi) == pytest.approx(1.0, abs=1e-15)
    assert not psi[1:-1].any()


def test_evolve_basics():
    cfg = CoupledConfig(interaction="xy", alpha=0.7, j=0.1, gamma=0.3)
    h = build_hamiltonian(cfg, 0.1, -0.2)
    psi0 = initial_state("xy", 0.7)
    assert np.allclose(evolve(h, psi0, 0.0), psi0, atol=1e-13)
    t = np.linspace(0.0, 100.0, 500)
    amps = evolve(h, psi0, t)
    assert amps.shape == (500, 9)
    norms = np.linalg.norm(amps, axis=1)
    assert np.max(np.abs(norms - 1.0)) < 1e-12
    energy = np.einsum("ti,ij,tj->t", amps.conj(), h, amps).real
    assert np.max(np.abs(energy - energy[0])) < 1e-10


def test_ising_vacuum_amplitude_constant():
    # nothing couples to the doubly-ground, empty-cavity component
    cfg = CoupledConfig(interaction="ising", alpha=0.7, jz=0.8)
    amps = evolve(build_hamiltonian(cfg, 0.3, -0.2), initial_state("ising", 0.7),
                  np.linspace(0.0, 50.0, 400))
    assert np.max(np.abs(np.abs(amps[:, -1]) - abs(math.sin(0.7)))) < 1e-12


def test_evolve_validation():
    h = build_hamiltonian(CoupledConfig(interaction="ising", alpha=0.3))
    psi0 = initial_state("ising", 0.3)
    with pytest.raises(ValidationError):
        evolve(h, psi0, [-1.0])
    with pytest.raises(ValidationError):
        evolve(h, 2.0 * psi0, [0.0])
    with pytest.raises(ValidationError):
        evolve(h[:4, :], psi0, [0.0])
    bad = h.copy()
    bad[0, 1] += 1e-6
    with pytest.raises(ValidationError):
        evolve(bad, psi0, [0.0])


def test_uncoupled_matches_two_pair_model():
    # with the atom-atom term off the pair factorizes into two JC pairs
    t = np.linspace(0.0, 25.0, 600)
    ref = concurrence_realization(DoubleJcConfig(alpha=ALPHA, family="phi"), 0.13, -0.07, t)
    for interaction, kw in (("ising", {"jz": 0.0}), ("xy", {"j": 0.0, "gamma": 0.9})):
        cfg = CoupledConfig(interaction=interaction, alpha=ALPHA, **kw)
        got = coupled_concurrence(cfg, 0.13, -0.07, t)
        assert np.max(np.abs(got - ref)) < 1e-10


def test_xstate_form_matches_general_concurrence():
    rng = np.random.default_rng(23)
    for _ in range(40):
        interaction = "ising" if rng.uniform() < 0.5 else "xy"
        cfg = CoupledConfig(
            interaction=interaction,
            alpha=rng.uniform(0.0, math.pi / 2),
            jz=rng.uniform(-1.0, 1.0),
            j=rng.uniform(-0.25, 0.25),
            gamma=rng.uniform(0.0, 1.0),
        )
        da, db = rng.normal(0.0, 0.3, 2)
        tt = rng.uniform(0.0, 30.0)
        amp = evolve(build_hamiltonian(cfg, da, db), initial_state(interaction, cfg.alpha), tt)
        rho = partial_trace_cavities(amp, basis_for(interaction).labels)
        got = coupled_concurrence(cfg, da, db, tt)
        # mixed cavity records keep these densities away from rank
        # deficiency less reliably; allow the sqrt-noise floor
        assert abs(got - concurrence_general(rho)) < 5e-8


def test_quenched_matches_manual_mean():
    cfg = CoupledConfig(interaction="ising", alpha=ALPHA, jz=0.1)
    spec = DisorderSpec("gaussian", 0.5)
    plan = QuenchPlan(samples=40, master_seed=15)
    t = np.linspace(0.0, 10.0, 21)
    est, spread = coupled_concurrence_quenched(cfg, spec, spec, plan, t)
    da = sample_deltas(spec, plan, stream=0)
    db = sample_deltas(spec, plan, stream=1)
    rows = np.stack([coupled_concurrence(cfg, a, b, t) for a, b in zip(da, db)])
    assert np.allclose(est, rows.mean(axis=0), rtol=0, atol=1e-12)
    assert np.all(spread >= 0.0)


def test_quenched_thread_identity():
    cfg = CoupledConfig(interaction="xy", alpha=ALPHA, j=0.1, gamma=0.5)
    spec = DisorderSpec("gaussian", 0.5)
    plan = QuenchPlan(samples=520, master_seed=19)
    t = np.linspace(0.0, 30.0, 60)
    a = coupled_concurrence_quenched(cfg, spec, spec, plan, t, threads=1)
    b = coupled_concurrence_quenched(cfg, spec, spec, plan, t, threads=4)
    assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])


def test_non_gaussian_disorder_warns():
    cfg = CoupledConfig(interaction="ising", alpha=ALPHA, jz=0.1)
    spec = DisorderSpec("uniform", 0.2)
    with pytest.warns(UserWarning):
        coupled_concurrence_quenched(cfg, spec, spec, QuenchPlan(samples=8, master_seed=1), [0.0, 1.0])


def test_config_validation_and_xy_warning():
    with pytest.raises(ValidationError):
        CoupledConfig(interaction="zz", alpha=0.3)
    with pytest.raises(ValidationError):
        CoupledConfig(interaction="ising", alpha=3.2)
    with pytest.raises(ValidationError):
        CoupledConfig(interaction="ising", alpha=0.3, g=0.0)
    with pytest.warns(UserWarning):
        CoupledConfig(interaction="xy", alpha=0.3, j=0.5)


def test_saturation_value():
    t = np.linspace(0.0, 10.0, 11)
    assert saturation_value(t, t) == pytest.approx(9.0, abs=1e-12)
    assert saturation_value(t, np.ones(11), fraction=1.0) == 1.0
    with pytest.raises(ValidationError):
        saturation_value(t, t[:5])
    with pytest.raises(ValidationError):
        saturation_value(t, t, fraction=0.0)
