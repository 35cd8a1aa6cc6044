"""Pinned-synchronization simulation with adaptive or constant feedback.

Integrates N coupled copies of a node dynamic toward a reference
trajectory, controlling only the pinned nodes. Fixed-step RK4; the
reference is integrated alongside the nodes so controller errors are
consistent within each stage.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .graphs import Graph, ground, laplacian, pin_set
from .spectra import eig_sym, lambda1

__all__ = [
    "NodeDynamics",
    "linear_unstable",
    "chua",
    "SimConfig",
    "SimResult",
    "simulate",
    "check_criterion",
    "linear_stability_oracle",
]

BLOWUP_LIMIT = 1e12


@dataclass(frozen=True)
class NodeDynamics:
    """An isolated node vector field with a one-sided growth certificate.

    For all y, z:  (y-z)' (f(y) - f(z))  <=  alpha_min * |y-z|^2,
    so the synchronization criterion holds with any alpha > alpha_min;
    `alpha` is alpha_min plus a fixed margin, ready to use. `p` is the
    (SPD) inner-product weight used by the controllers.
    """

    name: str
    dim: int
    f: Callable[[np.ndarray], np.ndarray]  # rows are node states, (N, dim) -> (N, dim)
    p: np.ndarray
    alpha_min: float
    alpha: float
    default_s0: np.ndarray


def linear_unstable(a: float) -> NodeDynamics:
    """Scalar dynamic f(x) = a*x; unstable for a > 0. alpha_min = a exactly."""

    def f(x: np.ndarray) -> np.ndarray:
        return a * x

    return NodeDynamics(
        name="linear_unstable",
        dim=1,
        f=f,
        p=np.eye(1),
        alpha_min=float(a),
        alpha=float(a) + 0.5,
        default_s0=np.zeros(1),
    )


def chua(
    a_p: float = 9.0,
    b_p: float = 100.0 / 7.0,
    m0: float = -8.0 / 7.0,
    m1: float = -5.0 / 7.0,
) -> NodeDynamics:
    """Chua circuit with the piecewise-linear diode, double-scroll defaults.

    The growth certificate is the largest eigenvalue of the symmetrized
    Jacobian, maximized over the two diode slopes (the Jacobian is
    affine in the slope, so the endpoints dominate).
    """

    def f(x: np.ndarray) -> np.ndarray:
        u, v, w = x[..., 0], x[..., 1], x[..., 2]
        phi = m1 * u + 0.5 * (m0 - m1) * (np.abs(u + 1) - np.abs(u - 1))
        return np.stack([a_p * (v - u - phi), u - v + w, -b_p * v], axis=-1)

    def mu2(slope: float) -> float:
        jac = np.array([
            [-a_p * (1.0 + slope), a_p, 0.0],
            [1.0, -1.0, 1.0],
            [0.0, -b_p, 0.0],
        ])
        return float(eig_sym((jac + jac.T) / 2.0)[-1])

    alpha_min = max(mu2(m0), mu2(m1))
    return NodeDynamics(
        name="chua",
        dim=3,
        f=f,
        p=np.eye(3),
        alpha_min=alpha_min,
        alpha=alpha_min + 0.5,
        default_s0=np.array([0.7, 0.0, 0.0]),
    )


@dataclass(frozen=True)
class SimConfig:
    """Simulation parameters.

    controller: "adaptive" (per-node gains d_i, d_i' = h * e_i' P e_i)
    or "linear" (constant u_i = -c * d * P e_i on pinned nodes).
    States start uniform in [init_low, init_high]^dim under `seed`; the
    reference starts at s0 (dynamics default when None).
    """

    controller: str
    c: float
    h: float = 1.0
    d: float = 0.0
    dt: float = 1e-3
    t_end: float = 50.0
    seed: int = 0
    init_low: float = -1.0
    init_high: float = 1.0
    s0: np.ndarray | None = None
    tol_sync: float = 1e-6
    record_every: int = 10

    def __post_init__(self):
        if self.controller not in ("adaptive", "linear"):
            raise ValueError(f"controller must be 'adaptive' or 'linear', got {self.controller!r}")
        if self.c <= 0:
            raise ValueError(f"coupling strength must be positive, got c={self.c}")
        if self.dt <= 0 or self.t_end <= 0:
            raise ValueError("dt and t_end must be positive")
        if self.record_every < 1:
            raise ValueError("record_every must be >= 1")


@dataclass(frozen=True)
class SimResult:
    """Recorded per-node error norms (and adaptive gains) over time."""

    times: np.ndarray
    error_norms: np.ndarray  # (samples, N)
    gains: np.ndarray | None  # (samples, l) in adaptive mode
    pins: tuple[int, ...]
    converged: bool
    final_error: float
    blowup_time: float | None

    def to_csv(self) -> str:
        n = self.error_norms.shape[1]
        cols = ["t"] + [f"e{i}" for i in range(n)]
        if self.gains is not None:
            cols += [f"d{i}" for i in self.pins]
        lines = [",".join(cols)]
        for k in range(len(self.times)):
            row = [f"{self.times[k]:.10g}"]
            row += [f"{x:.10g}" for x in self.error_norms[k]]
            if self.gains is not None:
                row += [f"{x:.10g}" for x in self.gains[k]]
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"

    def summary(self) -> dict:
        out = {"converged": self.converged, "final_error": self.final_error}
        if self.blowup_time is not None:
            out["blowup_time"] = self.blowup_time
        return out

    def summary_json(self) -> str:
        return json.dumps(self.summary())


def simulate(g: Graph, s: Iterable[int], dyn: NodeDynamics, cfg: SimConfig) -> SimResult:
    """Integrate the pinned network and report error trajectories.

    Convergence means the largest per-node error norm at the end of the
    run is below cfg.tol_sync. A state magnitude beyond 1e12 (or any
    non-finite value) stops the run early and is reported as a blowup.
    """
    pins = pin_set(g, s)
    pin_idx = np.array(pins, dtype=np.int64)
    lap = laplacian(g)
    p = dyn.p
    c = cfg.c
    adaptive = cfg.controller == "adaptive"

    rng = np.random.default_rng(cfg.seed)
    x = rng.uniform(cfg.init_low, cfg.init_high, size=(g.n, dyn.dim))
    sv = np.array(cfg.s0 if cfg.s0 is not None else dyn.default_s0, dtype=np.float64)
    if sv.shape != (dyn.dim,):
        raise ValueError(f"s0 must have shape ({dyn.dim},), got {sv.shape}")
    dvec = np.zeros(len(pins))

    def rhs(xs: np.ndarray, ss: np.ndarray, ds: np.ndarray):
        err_p = (xs - ss)[pin_idx] @ p
        dx = dyn.f(xs) - c * (lap @ xs) @ p
        if adaptive:
            dx[pin_idx] -= ds[:, None] * err_p
            dd = cfg.h * np.einsum("ij,ij->i", (xs - ss)[pin_idx], err_p)
        else:
            dx[pin_idx] -= c * cfg.d * err_p
            dd = np.zeros_like(ds)
        return dx, dyn.f(ss[None, :])[0], dd

    steps = max(1, round(cfg.t_end / cfg.dt))
    times: list[float] = []
    errs: list[np.ndarray] = []
    gains: list[np.ndarray] = []

    def record(k: int):
        times.append(k * cfg.dt)
        errs.append(np.linalg.norm(x - sv, axis=1))
        if adaptive:
            gains.append(dvec.copy())

    record(0)
    blowup_time: float | None = None
    dt = cfg.dt
    with np.errstate(over="ignore", invalid="ignore"):
        for k in range(1, steps + 1):
            k1x, k1s, k1d = rhs(x, sv, dvec)
            k2x, k2s, k2d = rhs(x + 0.5 * dt * k1x, sv + 0.5 * dt * k1s, dvec + 0.5 * dt * k1d)
            k3x, k3s, k3d = rhs(x + 0.5 * dt * k2x, sv + 0.5 * dt * k2s, dvec + 0.5 * dt * k2d)
            k4x, k4s, k4d = rhs(x + dt * k3x, sv + dt * k3s, dvec + dt * k3d)
            x = x + (dt / 6.0) * (k1x + 2 * k2x + 2 * k3x + k4x)
            sv = sv + (dt / 6.0) * (k1s + 2 * k2s + 2 * k3s + k4s)
            dvec = dvec + (dt / 6.0) * (k1d + 2 * k2d + 2 * k3d + k4d)
            if not np.all(np.isfinite(x)) or np.max(np.abs(x)) > BLOWUP_LIMIT:
                blowup_time = k * cfg.dt
                break
            if k % cfg.record_every == 0 or k == steps:
                record(k)

    error_norms = np.array(errs)
    final_error = float(error_norms[-1].max())
    return SimResult(
        times=np.array(times),
        error_norms=error_norms,
        gains=np.array(gains) if adaptive else None,
        pins=pins,
        converged=blowup_time is None and final_error < cfg.tol_sync,
        final_error=final_error,
        blowup_time=blowup_time,
    )


def check_criterion(g: Graph, s: Iterable[int], alpha: float, c: float) -> bool:
    """Sufficient synchronization test: c * lambda1(grounded) > alpha."""
    if c <= 0:
        raise ValueError(f"coupling strength must be positive, got c={c}")
    return bool(c * lambda1(ground(g, s).matrix) > alpha)


def linear_stability_oracle(g: Graph, s: Iterable[int], a: float, c: float, d: float) -> float:
    """Exact growth rate for scalar linear dynamics under constant gains.

    Largest eigenvalue of a*I - c*(L + D) with D carrying d at pinned
    diagonal entries; negative means every error mode decays.
    """
    pins = pin_set(g, s)
    m = -c * laplacian(g)
    for i in pins:
        m[i, i] -= c * d
    m[np.diag_indices(g.n)] += a
    return float(eig_sym(m)[-1])
