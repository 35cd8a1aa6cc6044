"""Undirected graphs, Laplacians, and grounded (pinned) Laplacians.

Graphs are simple and unweighted, with nodes 0..n-1 and a dense numpy
representation throughout; everything here targets networks of up to a
few thousand nodes, where dense linear algebra is the fast path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Graph",
    "GroundedLaplacian",
    "build_graph",
    "laplacian",
    "pin_set",
    "ground",
    "boundary_weights",
    "induced_subgraph",
    "connected_components",
    "is_connected",
    "parse_edge_list",
    "format_edge_list",
    "read_edge_list",
    "write_edge_list",
]


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on nodes 0..n-1.

    Edges are stored canonically as a sorted tuple of (u, v) pairs with
    u < v, no duplicates, no self loops. Build instances through
    :func:`build_graph`, which validates and canonicalizes.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def degrees(self) -> np.ndarray:
        d = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            d[u] += 1
            d[v] += 1
        return d

    @cached_property
    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.float64)
        for u, v in self.edges:
            a[u, v] = 1.0
            a[v, u] = 1.0
        return a

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        lists: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            lists[u].append(v)
            lists[v].append(u)
        return tuple(tuple(sorted(l)) for l in lists)

    @property
    def m(self) -> int:
        return len(self.edges)


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate and canonicalize an edge list into a Graph.

    Node ids must lie in 0..n-1, self loops are rejected, duplicate
    edges (in either orientation) collapse to one.
    """
    if n < 1:
        raise ValueError(f"graph needs at least one node, got n={n}")
    canon: set[tuple[int, int]] = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self loop at node {u} not allowed")
        canon.add((u, v) if u < v else (v, u))
    return Graph(n=n, edges=tuple(sorted(canon)))


def laplacian(g: Graph) -> np.ndarray:
    """Combinatorial Laplacian L = D - A as a dense float array."""
    lap = -g.adjacency.copy()
    lap[np.diag_indices(g.n)] = g.degrees.astype(np.float64)
    return lap


def pin_set(g: Graph, nodes: Iterable[int]) -> tuple[int, ...]:
    """Normalize a collection of pinned (controlled) nodes.

    Returns the sorted tuple of distinct node ids; requires
    1 <= l <= n-1 so that the grounded matrix is nonempty.
    """
    s = sorted({int(v) for v in nodes})
    if not s:
        raise ValueError("pin set is empty")
    if s[0] < 0 or s[-1] >= g.n:
        raise ValueError(f"pin set {s} out of range for n={g.n}")
    if len(s) >= g.n:
        raise ValueError("pin set must leave at least one node uncontrolled")
    return tuple(s)


@dataclass(frozen=True)
class GroundedLaplacian:
    """Principal submatrix of the Laplacian after deleting pinned rows/cols.

    `retained` lists the surviving original node ids in ascending order;
    row/col i of `matrix` corresponds to retained[i]. `weights[i]` counts
    the pinned neighbors of retained[i]; the matrix equals the Laplacian
    of the induced uncontrolled subgraph plus diag(weights).
    """

    matrix: np.ndarray
    retained: tuple[int, ...]
    weights: np.ndarray

    @property
    def size(self) -> int:
        return len(self.retained)


def ground(g: Graph, s: Iterable[int]) -> GroundedLaplacian:
    """Delete the rows and columns of the pinned nodes from laplacian(g)."""
    pins = pin_set(g, s)
    keep = np.array([v for v in range(g.n) if v not in set(pins)], dtype=np.int64)
    lap = laplacian(g)
    sub = lap[np.ix_(keep, keep)]
    w = boundary_weights(g, pins)
    return GroundedLaplacian(matrix=sub, retained=tuple(int(v) for v in keep), weights=w)


def boundary_weights(g: Graph, s: Iterable[int]) -> np.ndarray:
    """Per retained node, the number of its pinned neighbors.

    Ordered like GroundedLaplacian.retained (ascending original id).
    """
    pins = set(pin_set(g, s))
    out = []
    for v in range(g.n):
        if v in pins:
            continue
        out.append(sum(1 for u in g.neighbors[v] if u in pins))
    return np.array(out, dtype=np.int64)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on `keep`, relabeled 0..|keep|-1.

    Returns (subgraph, index_map) where index_map[new_id] = original id;
    all and only the edges internal to `keep` are retained. `keep` is
    deduplicated and sorted.
    """
    kept = sorted({int(v) for v in keep})
    if not kept:
        raise ValueError("cannot induce a subgraph on zero nodes")
    if kept[0] < 0 or kept[-1] >= g.n:
        raise ValueError(f"keep list {kept} out of range for n={g.n}")
    relabel = {v: i for i, v in enumerate(kept)}
    kept_set = set(kept)
    edges = [
        (relabel[u], relabel[v]) for u, v in g.edges if u in kept_set and v in kept_set
    ]
    return build_graph(len(kept), edges), tuple(kept)


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components as sorted node lists, ordered by smallest member."""
    seen = np.zeros(g.n, dtype=bool)
    comps: list[list[int]] = []
    for root in range(g.n):
        if seen[root]:
            continue
        stack = [root]
        seen[root] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.neighbors[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


# ---------------------------------------------------------------------------
# Edge-list text format: first non-comment line is the node count, every
# following line is one edge "u v" (0-based, whitespace separated), and '#'
# starts a comment anywhere on a line.
# ---------------------------------------------------------------------------


class EdgeListError(ValueError):
    """Malformed edge-list text; message carries the 1-based line number."""


def parse_edge_list(text: str) -> Graph:
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise EdgeListError(
                    f"line {lineno}: expected the node count alone, got {raw!r}"
                )
            try:
                n = int(parts[0])
            except ValueError:
                raise EdgeListError(f"line {lineno}: node count {parts[0]!r} is not an integer") from None
            continue
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: edge endpoints must be integers, got {raw!r}") from None
        edges.append((u, v))
    if n is None:
        raise EdgeListError("empty input: missing node count line")
    try:
        return build_graph(n, edges)
    except ValueError as exc:
        raise EdgeListError(str(exc)) from None


def format_edge_list(g: Graph, header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.append(str(g.n))
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path, header: str | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(g, header=header))
