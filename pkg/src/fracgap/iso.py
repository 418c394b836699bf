"""Canonical labeling of small graphs.

Equitable-partition refinement followed by individualization. Every leaf of
the search tree is a vertex ordering; the canonical form is the largest
adjacency bit string over all leaves. Two leaves with the same string differ
by an automorphism, which is recorded and used to skip equivalent siblings.
"""

from __future__ import annotations

from .config import DEFAULT
from .errors import InputError
from .graph import Graph


class IsoSizeError(InputError):
    stage = "classify"


def _refine(adj: list[set[int]], cells: list[list[int]]) -> list[list[int]]:
    while True:
        where = {}
        for i, cell in enumerate(cells):
            for v in cell:
                where[v] = i
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in adj[v]:
                    counts[where[w]] += 1
                groups.setdefault(tuple(counts), []).append(v)
            out.extend(groups[key] for key in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _bits(adj: list[set[int]], order: list[int]) -> str:
    n = len(order)
    return "".join("1" if order[j] in adj[order[i]] else "0" for i in range(n) for j in range(i + 1, n))


class _Search:
    def __init__(self, g: Graph):
        self.adj = [set(nb) for nb in g.neighbors]
        self.best: str | None = None
        self.leaves: dict[str, tuple[list[int], list[int]]] = {}
        self.autos: list[list[int]] = []

    def _orbit_rep(self, fixed: list[int], n: int):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for perm in self.autos:
            if all(perm[v] == v for v in fixed):
                for x in range(n):
                    a, b = find(x), find(perm[x])
                    if a != b:
                        parent[a] = b
        return find

    def run(self, cells: list[list[int]], prefix: list[int]) -> int | None:
        """Explore below ``prefix``; a returned depth asks callers to unwind to that node."""
        cells = _refine(self.adj, cells)
        pos = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if pos is None:
            order = [c[0] for c in cells]
            cert = _bits(self.adj, order)
            if self.best is None or cert > self.best:
                self.best = cert
            if cert not in self.leaves:
                self.leaves[cert] = (order, prefix)
                return None
            seen, seen_prefix = self.leaves[cert]
            perm = [0] * len(order)
            for a, b in zip(seen, order):
                perm[a] = b
            self.autos.append(perm)
            # the automorphism carries the earlier branch at the common ancestor onto this one
            common = 0
            while common < min(len(prefix), len(seen_prefix)) and prefix[common] == seen_prefix[common]:
                common += 1
            return common
        target = sorted(cells[pos])
        tried: list[int] = []
        n = len(self.adj)
        depth = len(prefix)
        for v in target:
            if tried:
                find = self._orbit_rep(prefix, n)
                if any(find(v) == find(t) for t in tried):
                    continue
            tried.append(v)
            rest = [w for w in cells[pos] if w != v]
            back = self.run(cells[:pos] + [[v], rest] + cells[pos + 1:], prefix + [v])
            if back is not None and back < depth:
                return back
        return None


def canonical_form(g: Graph, max_vertices: int = DEFAULT.iso_max_vertices) -> str:
    """A string equal for two graphs iff they are isomorphic."""
    if g.n > max_vertices:
        raise IsoSizeError(f"canonical_form is capped at {max_vertices} vertices, got {g.n}")
    if g.n == 0:
        return "0:"
    search = _Search(g)
    search.run([list(range(g.n))], [])
    bits = search.best or ""
    width = (len(bits) + 3) // 4
    hexdigits = format(int(bits, 2), f"0{width}x") if bits else ""
    return f"{g.n}:{hexdigits}"


def isomorphic(a: Graph, b: Graph, max_vertices: int = DEFAULT.iso_max_vertices) -> bool:
    if a.n != b.n or a.m != b.m or sorted(a.degrees) != sorted(b.degrees):
        return False
    return canonical_form(a, max_vertices) == canonical_form(b, max_vertices)
