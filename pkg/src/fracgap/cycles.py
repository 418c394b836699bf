"""Odd girth, fixed-length cycle enumeration and the uniform odd-cycle decomposition."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from .config import DEFAULT
from .decomposition import FractionalDecomposition
from .errors import BipartiteGraphError, InputError, NonUniformCycleCountError, SearchLimitExceeded
from .graph import Edge, Graph, distance_matrix, is_connected, norm_edge


@dataclass(frozen=True)
class CycleList:
    length: int
    cycles: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cycles)

    def edge_sets(self) -> list[tuple[Edge, ...]]:
        return [cycle_edges(c) for c in self.cycles]

    def to_json(self) -> dict:
        return {"length": self.length, "count": len(self.cycles), "cycles": [list(c) for c in self.cycles]}


def cycle_edges(cyc) -> tuple[Edge, ...]:
    L = len(cyc)
    return tuple(sorted(norm_edge(cyc[i], cyc[(i + 1) % L]) for i in range(L)))


def odd_girth(g: Graph) -> int | None:
    """Length of a shortest odd cycle, or None for bipartite graphs.

    BFS in the bipartite double cover: the distance from (v, 0) to (v, 1) is
    the length of a shortest odd closed walk through v, and a shortest odd
    closed walk overall is a cycle.
    """
    if not is_connected(g):
        raise InputError("odd_girth needs a connected graph")
    best = None
    for s in range(g.n):
        dist = [[-1] * g.n, [-1] * g.n]
        dist[0][s] = 0
        queue = deque([(s, 0)])
        while queue:
            u, side = queue.popleft()
            du = dist[side][u]
            if best is not None and du >= best:
                break
            for w in g.neighbors[u]:
                if dist[1 - side][w] < 0:
                    dist[1 - side][w] = du + 1
                    queue.append((w, 1 - side))
            if dist[1][s] >= 0:
                break
        if dist[1][s] >= 0 and (best is None or dist[1][s] < best):
            best = dist[1][s]
    return best


def _csr(g: Graph):
    indptr = np.zeros(g.n + 1, dtype=np.intc)
    indptr[1:] = np.cumsum(g.degrees)
    indices = np.fromiter((w for nb in g.neighbors for w in nb), dtype=np.intc, count=int(indptr[-1]))
    return indptr, indices


def enumerate_cycles(g: Graph, length: int, node_limit: int = DEFAULT.node_limit, kernel=None) -> CycleList:
    """All simple cycles of ``length`` vertices, each once as (min vertex, smaller neighbor, ...), sorted."""
    if length < 3:
        raise InputError("cycle length must be at least 3")
    if length > g.n:
        return CycleList(length, ())
    indptr, indices = _csr(g)
    dist = distance_matrix(g)
    enum = kernel.enumerate_cycles if kernel is not None else _kernels.enumerate_cycles
    found, _nodes, aborted = enum(indptr, indices, dist, g.n, length, node_limit)
    if aborted:
        raise SearchLimitExceeded(f"enumerate_cycles(L={length})", node_limit)
    return CycleList(length, tuple(sorted(found)))


@dataclass(frozen=True)
class EdgeCycleCounts:
    length: int
    counts: dict[Edge, int]

    @property
    def uniform(self) -> bool:
        return len(set(self.counts.values())) <= 1

    @property
    def value(self) -> int | None:
        vals = set(self.counts.values())
        return vals.pop() if len(vals) == 1 else None


def cycles_per_edge(g: Graph, length: int, cycles: CycleList | None = None) -> EdgeCycleCounts:
    if cycles is None:
        cycles = enumerate_cycles(g, length)
    counts = {e: 0 for e in g.edges}
    for c in cycles.cycles:
        for e in cycle_edges(c):
            counts[e] += 1
    return EdgeCycleCounts(length, counts)


def odd_cycle_decomposition(g: Graph) -> FractionalDecomposition:
    """All shortest odd cycles, each with weight 1/m where m is the per-edge cycle count.

    Requires every edge to lie on the same number of shortest odd cycles.
    """
    og = odd_girth(g)
    if og is None:
        raise BipartiteGraphError("graph is bipartite; it has no odd cycles")
    cycles = enumerate_cycles(g, og)
    per_edge = cycles_per_edge(g, og, cycles)
    if not per_edge.uniform:
        lo, hi = min(per_edge.counts.values()), max(per_edge.counts.values())
        raise NonUniformCycleCountError(
            f"edges lie on between {lo} and {hi} cycles of length {og}",
            details={"length": og, "min": lo, "max": hi},
        )
    m = per_edge.value
    weight = float(Fraction(1, m))
    return FractionalDecomposition.build(g.n, [(edges, weight) for edges in cycles.edge_sets()])
