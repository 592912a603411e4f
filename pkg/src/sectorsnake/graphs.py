"""Driver graphs on the n-bit state space and their (normalized) Laplacians.

Three constructions: the one-bit-flip hypercube, the dense sector graph
joining all states whose Hamming weights differ by at most one, and the
path-window graph joining states that are close both in an ordering's path
coordinate and in weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

import numpy as np

from .bits import weight
from .ordering import Ordering

Edge = Tuple[int, int]


@dataclass(frozen=True)
class GraphSpec:
    """Simple undirected graph on the 2^n states."""

    n: int
    edges: FrozenSet[Edge]
    kind: str
    params: Optional[dict] = None

    def __post_init__(self) -> None:
        size = 1 << self.n
        for u, v in self.edges:
            if not (0 <= u < v < size):
                raise ValueError(f"bad edge ({u}, {v}) for n={self.n}")

    @property
    def num_vertices(self) -> int:
        return 1 << self.n

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.num_vertices, self.num_vertices))
        for u, v in self.edges:
            a[u, v] = 1.0
            a[v, u] = 1.0
        return a

    def is_connected(self) -> bool:
        size = self.num_vertices
        if size == 1:
            return True
        nbrs: list[list[int]] = [[] for _ in range(size)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        seen = bytearray(size)
        stack = [0]
        seen[0] = 1
        count = 1
        while stack:
            u = stack.pop()
            for v in nbrs[u]:
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    stack.append(v)
        return count == size


def _check_graph_n(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= 9:
        raise ValueError(f"graph construction supports 1 <= n <= 9, got {n!r}")


def hypercube_graph(n: int) -> GraphSpec:
    """All pairs at Hamming distance one; n * 2^(n-1) edges."""
    _check_graph_n(n)
    edges = set()
    for x in range(1 << n):
        for b in range(n):
            y = x | (1 << b)
            if y != x:
                edges.add((x, y))
    return GraphSpec(n=n, edges=frozenset(edges), kind="hypercube")


def sector_graph(n: int) -> GraphSpec:
    """All pairs whose Hamming weights differ by at most one."""
    _check_graph_n(n)
    size = 1 << n
    wts = [weight(x) for x in range(size)]
    edges = set()
    for x in range(size):
        for y in range(x + 1, size):
            if abs(wts[x] - wts[y]) <= 1:
                edges.add((x, y))
    return GraphSpec(n=n, edges=frozenset(edges), kind="sector")


def path_window_graph(ordering: Ordering, w: int) -> GraphSpec:
    """Pairs within path distance w and weight difference at most one."""
    if w < 1:
        raise ValueError(f"window must be >= 1, got {w}")
    states = ordering.states
    size = len(states)
    wts = [weight(x) for x in states]
    edges = set()
    for t in range(size):
        for d in range(1, w + 1):
            u = t + d
            if u >= size:
                break
            if abs(wts[t] - wts[u]) <= 1:
                x, y = states[t], states[u]
                edges.add((x, y) if x < y else (y, x))
    return GraphSpec(
        n=ordering.n,
        edges=frozenset(edges),
        kind="path_window",
        params={"ordering_kind": ordering.kind, "seed": ordering.seed, "w": w},
    )


@dataclass(frozen=True)
class LaplacianOperator:
    """Dense symmetric L = D - A, optionally scaled to unit spectral norm."""

    matrix: np.ndarray
    lambda_max: float
    normalized: bool

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def laplacian(graph: GraphSpec, normalize: bool = True) -> LaplacianOperator:
    """Build L = D - A; normalization divides by the largest eigenvalue."""
    if not graph.edges:
        raise ValueError("degenerate graph with no edges: Laplacian normalization undefined")
    a = graph.adjacency()
    lap = np.diag(a.sum(axis=1)) - a
    lam_max = float(np.linalg.eigvalsh(lap)[-1])
    if normalize:
        return LaplacianOperator(matrix=lap / lam_max, lambda_max=lam_max, normalized=True)
    return LaplacianOperator(matrix=lap, lambda_max=lam_max, normalized=False)
