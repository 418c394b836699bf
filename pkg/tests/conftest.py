from __future__ import annotations

import itertools

import numpy as np
import pytest

from fracgap import _kernels
from fracgap import graph as G
from fracgap.cycles import odd_cycle_decomposition
from fracgap.decomposition import FractionalDecomposition, line_graph_star_decomposition
from fracgap.optimizer import build_decomposition_lp, optimize_bound, standard_families
from fracgap.simplex import LinearProgram, solve_lp


ACCEPTANCE_KEY = pytest.StashKey[dict]()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(ACCEPTANCE_KEY, None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        ok, doc, why = results[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {doc}")
        if why:
            terminalreporter.write_line(f"    {why}")


@pytest.fixture(params=sorted(_kernels.backends()))
def kernel(request):
    return _kernels.backends()[request.param]


def c5_plus_chord() -> G.Graph:
    return G.Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])


def k4_triangles(weight: float = 0.5) -> FractionalDecomposition:
    tris = itertools.combinations(range(4), 3)
    return FractionalDecomposition.build(4, [(list(itertools.combinations(t, 2)), weight) for t in tris])


def line_petersen_family():
    lp = G.line_graph(G.petersen())
    return lp, standard_families(lp, "cycles=3,5")


def line_petersen_alpha(alpha: float):
    """Triangles at weight alpha, the twelve pentagons at (1 - alpha) / 2."""
    lp, fam = line_petersen_family()
    parts = []
    for edges in fam.parts:
        w = alpha if len(edges) == 3 else (1 - alpha) / 2
        if w > 0:
            parts.append((edges, w))
    return lp, FractionalDecomposition.build(lp.n, parts)


def random_feasible_point(g, fam, rng, draws: int = 3) -> FractionalDecomposition:
    """Convex combination of LP vertices reached from random objectives."""
    lp = build_decomposition_lp(g, fam)
    xs = []
    for _ in range(draws):
        sol = solve_lp(LinearProgram(rng.normal(size=lp.num_vars), lp.A, lp.b))
        assert sol.optimal
        xs.append(sol.x)
    mix = rng.dirichlet(np.ones(draws))
    x = sum(m * xi for m, xi in zip(mix, xs))
    return FractionalDecomposition.build(g.n, [(fam.parts[i], a) for i, a in enumerate(x) if a > 1e-12])


def corpus():
    """(name, host, decomposition) triples that pass every check."""
    out = []
    for n in (3, 5, 7, 9):
        g = G.cycle(n)
        out.append((f"C{n}", g, odd_cycle_decomposition(g)))
    out.append(("K4/triangles", G.complete(4), k4_triangles()))
    out.append(("K5/triangles", G.complete(5), odd_cycle_decomposition(G.complete(5))))
    out.append(("Petersen/C5", G.petersen(), odd_cycle_decomposition(G.petersen())))
    for h in (1, 2, 3):
        for k in (1, 2, 3):
            g = G.blow_up_odd_cycle(h, k)
            out.append((f"blowup({h},{k})", g, odd_cycle_decomposition(g)))
    for alpha in (0.0, 0.25, 0.5, 1.0):
        lg, d = line_petersen_alpha(alpha)
        out.append((f"L(P)/alpha={alpha}", lg, d))
    for name, h in (("K4", G.complete(4)), ("P", G.petersen()), ("Q3", G.hypercube(3))):
        lg, d = line_graph_star_decomposition(h)
        out.append((f"L({name})/stars", lg, d))
    lg, fam = line_petersen_family()
    out.append(("L(P)/LP", lg, optimize_bound(lg, fam)[0]))
    rng = np.random.default_rng(20261016)
    for i in range(3):
        out.append((f"L(P)/random{i}", lg, random_feasible_point(lg, fam, rng)))
    lk4 = G.line_graph(G.complete(4))
    fam_k4 = standard_families(lk4, "maximal-cliques")
    for i in range(2):
        out.append((f"L(K4)/random{i}", lk4, random_feasible_point(lk4, fam_k4, rng)))
    return out
