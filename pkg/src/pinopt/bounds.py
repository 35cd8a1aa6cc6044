"""Spectral bounds on the smallest grounded eigenvalue, and the feedback gain bound.

For a connected graph with pin set S of size l, the smallest eigenvalue
lambda1 of the grounded Laplacian is sandwiched:

    min boundary weight  <=  lambda1  <=  min((l+1)-th Laplacian eigenvalue,
                                              min degree of uncontrolled nodes,
                                              mean boundary weight)

where the boundary weight of an uncontrolled node counts its pinned
neighbors. All bounds here are cheap relative to the grounded
eigensolve and are reported together for cross-checking.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, asdict
from typing import Iterable

import numpy as np

from .graphs import Graph, ground, laplacian, pin_set
from .spectra import eig_sym, lambda1 as _lambda1

__all__ = [
    "BoundReport",
    "upper_by_spectrum",
    "upper_by_min_degree",
    "boundary_bounds",
    "upper_single_pin",
    "necessary_lambda2",
    "feedback_gain_bound",
    "bound_report",
]


def upper_by_spectrum(g: Graph, l: int) -> float:
    """(l+1)-th smallest eigenvalue of the full Laplacian.

    Interlacing: deleting l rows/cols cannot push the smallest grounded
    eigenvalue above this, whichever l nodes are pinned.
    """
    if not (1 <= l <= g.n - 1):
        raise ValueError(f"need 1 <= l <= n-1, got l={l} for n={g.n}")
    return float(eig_sym(laplacian(g))[l])


def upper_by_min_degree(g: Graph, s: Iterable[int]) -> float:
    """Minimum degree among uncontrolled nodes; lambda1 never exceeds it."""
    pins = set(pin_set(g, s))
    return float(min(int(g.degrees[v]) for v in range(g.n) if v not in pins))


def boundary_bounds(g: Graph, s: Iterable[int]) -> tuple[float, float]:
    """(min, mean) boundary weight over uncontrolled nodes.

    The min is a lower bound on lambda1, the mean an upper bound.
    """
    w = ground(g, s).weights
    return float(w.min()), float(w.mean())


def upper_single_pin(g: Graph, i: int) -> float:
    """Upper bound deg(i)/(n-1) on lambda1 when only node i is pinned.

    Always <= 1, so single-node pinning cannot reach criterion
    thresholds above 1 on simple graphs.
    """
    if not (0 <= i < g.n):
        raise ValueError(f"node {i} out of range for n={g.n}")
    if g.n < 2:
        raise ValueError("need at least two nodes")
    return float(g.degrees[i]) / (g.n - 1)


def necessary_lambda2(g: Graph, alpha_over_c: float) -> bool:
    """Whether the algebraic connectivity exceeds alpha/c.

    If it does not, no single pinned node can satisfy the criterion
    lambda1 > alpha/c; this is necessary for l=1, not sufficient.
    """
    return bool(eig_sym(laplacian(g))[1] > alpha_over_c)


def feedback_gain_bound(g: Graph, s: Iterable[int], alpha: float, c: float) -> float:
    """Smallest constant feedback gain that certifies synchronization.

    For coupling strength c and node-dynamics constant alpha with
    c * lambda1(grounded) > alpha, any uniform pinned gain d above the
    returned value makes c*(L + D) - alpha*I positive definite (D has
    c*d at pinned diagonal entries), via the Schur complement on the
    pinned block. The inner inverse is applied through a dense solve;
    no matrix inverse is formed.
    """
    if c <= 0:
        raise ValueError(f"coupling strength must be positive, got c={c}")
    pins = pin_set(g, s)
    grounded = ground(g, pins)
    if c * _lambda1(grounded.matrix) <= alpha:
        raise ValueError(
            "gain bound needs c * lambda1(grounded) > alpha; "
            f"got c*lambda1={c * _lambda1(grounded.matrix):.6g} vs alpha={alpha:.6g}"
        )
    lap = laplacian(g)
    p = np.array(pins, dtype=np.int64)
    r = np.array(grounded.retained, dtype=np.int64)
    l_pp = lap[np.ix_(p, p)]
    l_pr = lap[np.ix_(p, r)]
    # Schur block: c^2 * L_pr (c*L_rr - alpha I)^{-1} L_rp - c*L_pp
    core = c * grounded.matrix - alpha * np.eye(len(r))
    solved = np.linalg.solve(core, l_pr.T)
    block = c * c * (l_pr @ solved) - c * l_pp
    block = (block + block.T) / 2.0
    return float((eig_sym(block)[-1] + alpha) / c)


@dataclass(frozen=True)
class BoundReport:
    """All bounds for one (graph, pin set) pair, plus the exact lambda1.

    upper_single_pin is populated only when l == 1; satisfied is the
    criterion lambda1 > alpha_over_c, populated only when a threshold
    was given.
    """

    lambda1: float
    lower_min_boundary: float
    upper_spectrum: float
    upper_kmin: float
    upper_avg_boundary: float
    upper_single_pin: float | None
    alpha_over_c: float | None
    satisfied: bool | None

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def bound_report(g: Graph, s: Iterable[int], alpha_over_c: float | None = None) -> BoundReport:
    """Evaluate lambda1 and every applicable bound for one pin set."""
    pins = pin_set(g, s)
    lam = _lambda1(ground(g, pins).matrix)
    lo, avg = boundary_bounds(g, pins)
    return BoundReport(
        lambda1=lam,
        lower_min_boundary=lo,
        upper_spectrum=upper_by_spectrum(g, len(pins)),
        upper_kmin=upper_by_min_degree(g, pins),
        upper_avg_boundary=avg,
        upper_single_pin=upper_single_pin(g, pins[0]) if len(pins) == 1 else None,
        alpha_over_c=alpha_over_c,
        satisfied=None if alpha_over_c is None else bool(lam > alpha_over_c),
    )
