"""Simple undirected graphs on vertices 0..n-1, text formats and generators."""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import GraphFormatError, InputError

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise InputError("vertex count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise InputError(f"bad edge {(u, v)} for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph, collapsing duplicate edges. Self-loops and out-of-range ids raise."""
        out = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u < 0 or v < 0:
                raise InputError(f"negative vertex id in edge {(u, v)}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if u >= n or v >= n:
                raise InputError(f"edge {(u, v)} out of range for n={n}")
            out.add(norm_edge(u, v))
        return cls(n, frozenset(out))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.neighbors)

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=float)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, frozenset(norm_edge(perm[u], perm[v]) for u, v in self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------- predicates

def is_regular(g: Graph) -> int | None:
    """Common degree, or None if degrees differ (the empty graph on 0 vertices has none)."""
    if g.n == 0:
        return None
    degs = set(g.degrees)
    return degs.pop() if len(degs) == 1 else None


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def two_coloring(g: Graph) -> list[int] | None:
    """A proper 2-coloring by BFS, or None when some component has an odd cycle."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs BFS distances as an int32 matrix; -1 marks unreachable pairs."""
    d = np.empty((g.n, g.n), dtype=np.int32)
    for s in range(g.n):
        d[s] = bfs_distances(g, s)
    return d


# ---------------------------------------------------------------- edge list

_HEADER = re.compile(r"^n\s+(\d+)$")


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines with an optional leading ``n N`` line; ``#`` starts a comment.

    Without a header the vertex count is one more than the largest id, so gaps
    in the ids become isolated vertices.
    """
    declared: int | None = None
    pairs: list[Edge] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        header = _HEADER.match(line)
        if header and not seen_content:
            declared = int(header.group(1))
            seen_content = True
            continue
        seen_content = True
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id in {raw!r}") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        if declared is not None and (u >= declared or v >= declared):
            raise GraphFormatError(f"line {lineno}: vertex id >= declared n={declared}")
        pairs.append((u, v))
    n = declared if declared is not None else 1 + max((max(p) for p in pairs), default=-1)
    return Graph.from_edges(n, pairs)


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.sorted_edges]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- graph6

GRAPH6_MAX_N = 62


def emit_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise InputError(f"graph6 output supports n <= {GRAPH6_MAX_N}, got n={g.n}")
    bits = [1 if (i, j) in g.edges else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("graph6: truncated input (empty)")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"graph6: invalid character {ch!r}")
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_N:
        raise GraphFormatError(f"graph6: only n <= {GRAPH6_MAX_N} is supported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise GraphFormatError(f"graph6: truncated bit vector ({len(body)} of {nbytes} bytes)")
    if len(body) > nbytes:
        raise GraphFormatError("graph6: trailing characters after bit vector")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    pairs = ((i, j) for j in range(1, n) for i in range(j))
    edges = [p for p, b in zip(pairs, bits) if b]
    return Graph.from_edges(n, edges)


_G6_LINE = re.compile(r"^(>>graph6<<)?[\x3f-\x7e]+$")


def parse_graph(text: str) -> Graph:
    """Auto-detect: a single line in the graph6 alphabet is graph6, anything else an edge list."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) == 1 and _G6_LINE.match(lines[0]) and " " not in lines[0]:
        return parse_graph6(lines[0])
    return parse_edge_list(text)


# ---------------------------------------------------------------- generators

def _positive(name: str, *values: int) -> None:
    for v in values:
        if int(v) != v or v < 1:
            raise InputError(f"{name}: parameters must be positive integers, got {values}")


def cycle(n: int) -> Graph:
    _positive("cycle", n)
    if n < 3:
        raise InputError("cycle: n must be at least 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    _positive("complete", n)
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    _positive("complete_bipartite", a, b)
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def hypercube(d: int) -> Graph:
    _positive("hypercube", d)
    n = 1 << d
    return Graph.from_edges(n, ((v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)))


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of ``g`` in sorted order; adjacent when sharing an endpoint."""
    if g.m < 1:
        raise InputError("line_graph: input must have at least one edge")
    index = {e: i for i, e in enumerate(g.sorted_edges)}
    out = []
    for v in range(g.n):
        inc = [index[norm_edge(v, w)] for w in g.neighbors[v]]
        out.extend(itertools.combinations(inc, 2))
    return Graph.from_edges(g.m, out)


def blow_up_odd_cycle(h: int, k: int) -> Graph:
    """C_{2h+1} with each vertex replaced by k independent copies, labelled v*k + i."""
    _positive("blow_up_odd_cycle", h, k)
    length = 2 * h + 1
    out = []
    for v in range(length):
        w = (v + 1) % length
        out.extend((v * k + i, w * k + j) for i in range(k) for j in range(k))
    return Graph.from_edges(length * k, out)


FAMILIES = {
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "petersen": (petersen, 0),
    "hypercube": (hypercube, 1),
    "blow_up_odd_cycle": (blow_up_odd_cycle, 2),
}


def generate(family: str, *params: int, base: Graph | None = None) -> Graph:
    """Dispatch by family name; ``line_graph`` takes the graph ``base`` instead of integers."""
    name = family.replace("-", "_").lower()
    if name in ("blow_up", "blowup"):
        name = "blow_up_odd_cycle"
    if name == "line_graph":
        if base is None:
            raise InputError("line_graph needs a base graph")
        return line_graph(base)
    if name not in FAMILIES:
        raise InputError(f"unknown family {family!r}; choose from {sorted(FAMILIES) + ['line_graph']}")
    fn, arity = FAMILIES[name]
    if len(params) != arity:
        raise InputError(f"{name} takes {arity} integer parameter(s), got {len(params)}")
    return fn(*params)
