"""Deterministic graph generators for the test families.

Random families take an integer seed and produce bit-identical edge
sets across runs for the same arguments.
"""

from __future__ import annotations

import numpy as np

from .graphs import Graph, build_graph

__all__ = [
    "gen_star",
    "gen_double_star",
    "gen_complete",
    "gen_path",
    "gen_ba",
    "gen_nw",
    "gen_erdos_renyi",
]


def gen_star(n: int) -> Graph:
    """Star on n nodes, node 0 the center."""
    if n < 3:
        raise ValueError(f"star needs n >= 3, got n={n}")
    return build_graph(n, [(0, i) for i in range(1, n)])


def gen_double_star(k: int) -> Graph:
    """Two stars with k leaves each, hubs joined through a bridge node.

    Node 0 is the bridge, nodes 1 and k+2 are the hubs, nodes 2..k+1
    and k+3..2k+2 their leaves; n = 2k+3 in total.
    """
    if k < 1:
        raise ValueError(f"double star needs k >= 1 leaves per hub, got k={k}")
    hub_a, hub_b = 1, k + 2
    edges = [(0, hub_a), (0, hub_b)]
    edges += [(hub_a, i) for i in range(2, k + 2)]
    edges += [(hub_b, i) for i in range(k + 3, 2 * k + 3)]
    return build_graph(2 * k + 3, edges)


def gen_complete(n: int) -> Graph:
    if n < 2:
        raise ValueError(f"complete graph needs n >= 2, got n={n}")
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def gen_path(n: int) -> Graph:
    if n < 2:
        raise ValueError(f"path needs n >= 2, got n={n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_ba(n: int, m0: int, m: int, seed: int) -> Graph:
    """Preferential-attachment graph grown from a fully connected seed.

    Starts from the clique on nodes 0..m0-1; each later node attaches to
    m distinct existing nodes sampled with probability proportional to
    current degree (an urn holding one slot per unit of degree, with
    resampling of duplicates within a step). Edge count is therefore
    m0*(m0-1)/2 + m*(n-m0). While every existing node still has degree
    zero (only possible for m0 = 1) the draw falls back to uniform.
    """
    if not (1 <= m <= m0 < n):
        raise ValueError(f"need 1 <= m <= m0 < n, got m={m}, m0={m0}, n={n}")
    rng = np.random.default_rng(seed)
    edges = [(u, v) for u in range(m0) for v in range(u + 1, m0)]
    # one entry per endpoint per edge: node i appears deg(i) times
    urn: list[int] = [e for edge in edges for e in edge]
    for new in range(m0, n):
        chosen: set[int] = set()
        while len(chosen) < m:
            if urn:
                pick = urn[rng.integers(len(urn))]
            else:
                pick = int(rng.integers(new))
            chosen.add(pick)
        for tgt in sorted(chosen):
            edges.append((tgt, new))
            urn.append(tgt)
            urn.append(new)
    return build_graph(n, edges)


def _pair_mask_graph(n: int, keep_pairs: np.ndarray) -> Graph:
    iu, ju = np.triu_indices(n, k=1)
    return build_graph(n, list(zip(iu[keep_pairs].tolist(), ju[keep_pairs].tolist())))


def gen_nw(n: int, k: int, p: float, seed: int) -> Graph:
    """Ring lattice plus random shortcuts (small-world without rewiring).

    Every node is wired to its k/2 nearest neighbors on each side of a
    ring; each remaining pair is then added independently with
    probability p. No lattice edge is ever removed, so the minimum
    degree stays >= k.
    """
    if k % 2 != 0 or k < 2:
        raise ValueError(f"lattice degree k must be even and >= 2, got k={k}")
    if not (k < n):
        raise ValueError(f"need k < n, got k={k}, n={n}")
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"shortcut probability must be in [0, 1], got p={p}")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    dist = ju - iu
    ring = np.minimum(dist, n - dist)
    lattice = ring <= k // 2
    draws = rng.random(iu.shape[0])
    return _pair_mask_graph(n, lattice | (~lattice & (draws < p)))


def gen_erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """Independent edges with probability p on each of the n*(n-1)/2 pairs."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"edge probability must be in [0, 1], got p={p}")
    rng = np.random.default_rng(seed)
    iu, _ = np.triu_indices(n, k=1)
    draws = rng.random(iu.shape[0])
    return _pair_mask_graph(n, draws < p)
