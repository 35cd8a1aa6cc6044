import json

import numpy as np
import pytest

from conftest import rand_connected
from pinopt.generators import gen_complete, gen_path, gen_star
from pinopt.graphs import ground, laplacian
from pinopt.spectra import lambda1
from pinopt.sync import (
    SimConfig,
    SimResult,
    chua,
    check_criterion,
    linear_stability_oracle,
    linear_unstable,
    simulate,
)


def _exact_linear_error(g, pins, a, c, d, e0, t):
    # e' = (a I - c (L + D)) e, symmetric, so expm is an eigendecomposition away
    m = a * np.eye(g.n) - c * laplacian(g)
    for i in pins:
        m[i, i] -= c * d
    vals, vecs = np.linalg.eigh(m)
    return vecs @ (np.exp(vals * t) * (vecs.T @ e0))


def test_rk4_matches_matrix_exponential():
    g = gen_path(5)
    pins = (0,)
    a, c, d, t_end = 0.8, 1.0, 2.0, 2.0
    cfg = SimConfig(controller="linear", c=c, d=d, dt=1e-3, t_end=t_end, seed=9)
    res = simulate(g, pins, linear_unstable(a), cfg)
    x0 = np.random.default_rng(9).uniform(-1.0, 1.0, size=(5, 1))[:, 0]
    exact = _exact_linear_error(g, pins, a, c, d, x0, t_end)
    assert np.abs(res.error_norms[-1] - np.abs(exact)).max() < 1e-8


def test_rk4_fourth_order_convergence():
    g = gen_path(5)
    pins = (0,)
    a, c, d, t_end = 0.8, 1.0, 2.0, 2.0
    x0 = np.random.default_rng(9).uniform(-1.0, 1.0, size=(5, 1))[:, 0]
    exact = np.abs(_exact_linear_error(g, pins, a, c, d, x0, t_end))

    def defect(dt):
        cfg = SimConfig(controller="linear", c=c, d=d, dt=dt, t_end=t_end, seed=9)
        res = simulate(g, pins, linear_unstable(a), cfg)
        return np.abs(res.error_norms[-1] - exact).max()

    ratio = defect(0.05) / defect(0.025)
    assert 8.0 < ratio < 40.0, f"halving dt should cut the defect ~16x, got {ratio:.1f}"


def test_simulate_converges_when_criterion_holds():
    g = gen_complete(4)
    dyn = linear_unstable(0.5)
    c = 2.0
    assert check_criterion(g, [0], dyn.alpha, c)
    cfg = SimConfig(controller="linear", c=c, d=5.0, dt=1e-3, t_end=40.0, seed=3)
    res = simulate(g, [0], dyn, cfg)
    assert res.converged
    assert res.final_error < cfg.tol_sync
    assert res.blowup_time is None


def test_simulate_adaptive_gains_grow_until_sync():
    g = gen_star(6)
    dyn = linear_unstable(0.3)
    cfg = SimConfig(controller="adaptive", c=1.0, h=2.0, dt=1e-3, t_end=150.0, seed=5)
    res = simulate(g, [0, 1], dyn, cfg)
    assert res.gains is not None and res.gains.shape[1] == 2
    assert np.all(np.diff(res.gains, axis=0) >= -1e-12)  # nondecreasing
    assert res.converged
    # gains settle once the error is gone
    assert np.abs(res.gains[-1] - res.gains[-10]).max() < 1e-6


def test_simulate_blowup_detected():
    g = gen_path(4)
    dyn = linear_unstable(3.0)
    cfg = SimConfig(controller="linear", c=0.01, d=0.0, dt=1e-2, t_end=30.0, seed=1)
    res = simulate(g, [0], dyn, cfg)
    assert not res.converged
    assert res.blowup_time is not None and res.blowup_time <= 30.0
    assert np.all(np.isfinite(res.error_norms))


def test_simulate_is_seed_reproducible():
    rng = np.random.default_rng(51)
    g = rand_connected(rng, 8, extra=4)
    cfg = SimConfig(controller="adaptive", c=1.5, dt=1e-2, t_end=5.0, seed=12)
    r1 = simulate(g, [0, 3], linear_unstable(0.4), cfg)
    r2 = simulate(g, [0, 3], linear_unstable(0.4), cfg)
    assert np.array_equal(r1.error_norms, r2.error_norms)
    assert np.array_equal(r1.gains, r2.gains)
    assert r1.to_csv() == r2.to_csv()


def test_simulate_recording_grid():
    g = gen_path(3)
    cfg = SimConfig(controller="linear", c=1.0, d=1.0, dt=0.1, t_end=1.0, record_every=4, seed=0)
    res = simulate(g, [0], linear_unstable(0.1), cfg)
    assert res.times.tolist() == [0.0, pytest.approx(0.4), pytest.approx(0.8), pytest.approx(1.0)]


def test_sim_config_validation():
    with pytest.raises(ValueError):
        SimConfig(controller="pid", c=1.0)
    with pytest.raises(ValueError):
        SimConfig(controller="linear", c=0.0)
    with pytest.raises(ValueError):
        SimConfig(controller="linear", c=1.0, dt=-1.0)
    g = gen_path(3)
    with pytest.raises(ValueError, match="s0"):
        simulate(g, [0], linear_unstable(0.1), SimConfig(controller="linear", c=1.0, s0=np.zeros(2), t_end=0.01))


def test_sim_result_csv_shape():
    g = gen_path(3)
    cfg = SimConfig(controller="adaptive", c=1.0, dt=0.1, t_end=0.5, record_every=1, seed=2)
    res = simulate(g, [1], linear_unstable(0.2), cfg)
    lines = res.to_csv().splitlines()
    assert lines[0] == "t,e0,e1,e2,d1"
    assert len(lines) == 1 + len(res.times)
    summary = json.loads(res.summary_json())
    assert set(summary) >= {"converged", "final_error"}


def test_check_criterion_is_the_spectral_test():
    rng = np.random.default_rng(52)
    for _ in range(10):
        n = int(rng.integers(3, 12))
        g = rand_connected(rng, n, extra=3)
        pins = [0]
        lam = lambda1(ground(g, pins).matrix)
        c = float(rng.uniform(0.5, 2.0))
        assert check_criterion(g, pins, c * lam - 1e-6, c)
        assert not check_criterion(g, pins, c * lam + 1e-6, c)


def test_linear_stability_oracle_growth_rate():
    g = gen_path(4)
    pins = (0, 2)
    a, c, d = 0.7, 1.3, 2.0
    m = a * np.eye(4) - c * laplacian(g)
    m[0, 0] -= c * d
    m[2, 2] -= c * d
    expect = np.linalg.eigvalsh(m)[-1]
    assert linear_stability_oracle(g, pins, a, c, d) == pytest.approx(expect, abs=1e-12)


def test_linear_stability_oracle_sign_predicts_outcome():
    g = gen_star(5)
    a, c = 0.3, 1.0
    stable_d, weak_d = 4.0, 0.01
    assert linear_stability_oracle(g, [0], a, c, stable_d) < 0
    assert linear_stability_oracle(g, [0], a, c, weak_d) > 0
    ok = simulate(g, [0], linear_unstable(a), SimConfig(controller="linear", c=c, d=stable_d, dt=5e-3, t_end=120.0, seed=4))
    bad = simulate(g, [0], linear_unstable(a), SimConfig(controller="linear", c=c, d=weak_d, dt=5e-3, t_end=120.0, seed=4))
    assert ok.converged and not bad.converged


def test_chua_one_sided_growth_certificate():
    dyn = chua()
    rng = np.random.default_rng(53)
    y = rng.uniform(-3, 3, size=(500, 3))
    z = rng.uniform(-3, 3, size=(500, 3))
    lhs = np.einsum("ij,ij->i", y - z, dyn.f(y) - dyn.f(z))
    rhs = dyn.alpha_min * np.einsum("ij,ij->i", y - z, y - z)
    assert np.all(lhs <= rhs + 1e-9)
    assert dyn.alpha > dyn.alpha_min
    assert dyn.dim == 3 and dyn.default_s0.shape == (3,)


def test_chua_trajectory_stays_bounded_briefly():
    # double-scroll orbits are bounded; a short free run must not blow up
    dyn = chua()
    g = gen_path(3)
    cfg = SimConfig(controller="linear", c=1e-6, d=0.0, dt=1e-3, t_end=5.0, seed=6,
                    init_low=-0.5, init_high=0.5)
    res = simulate(g, [0], dyn, cfg)
    assert res.blowup_time is None
    assert np.all(np.isfinite(res.error_norms))
