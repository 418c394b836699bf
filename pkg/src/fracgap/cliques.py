"""Maximal clique enumeration (Bron-Kerbosch with Tomita pivoting)."""

from __future__ import annotations

from .config import DEFAULT
from .errors import SearchLimitExceeded
from .graph import Graph


def maximal_cliques(g: Graph, node_limit: int = DEFAULT.node_limit) -> list[tuple[int, ...]]:
    """Every maximal clique as a sorted tuple, in sorted order."""
    adj = [set(nb) for nb in g.neighbors]
    out: list[tuple[int, ...]] = []
    calls = 0

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        nonlocal calls
        calls += 1
        if calls > node_limit:
            raise SearchLimitExceeded("maximal_cliques", node_limit)
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: (len(adj[u] & p), -u))
        for v in sorted(p - adj[pivot]):
            expand(r + [v], p & adj[v], x & adj[v])
            p.discard(v)
            x.add(v)

    expand([], set(range(g.n)), set())
    return sorted(out)
