"""Acceptance suite: one check per numbered criterion, each at its stated tolerance.

Under pytest a PASS/FAIL line per criterion is printed in the terminal summary.
Run directly (``python tests/test_acceptance.py``) to get the same lines without pytest.
"""
from __future__ import annotations

import io
import json
import math
import sys
import traceback

import numpy as np
import pytest
from conftest import ACCEPTANCE_KEY, c5_plus_chord, corpus, line_petersen_alpha, line_petersen_family

from fracgap import graph as G
from fracgap.cli import run
from fracgap.cliques import maximal_cliques
from fracgap.cycles import cycles_per_edge, enumerate_cycles, odd_cycle_decomposition
from fracgap.decomposition import (
    ClassReport,
    FractionalDecomposition,
    certify,
    classify,
    compute_bound,
    degree_sum,
    line_graph_star_decomposition,
    replay_proof_chain,
    support,
)
from fracgap.drg import (
    check_distance_regular,
    common_distance_q,
    corollary_bound,
    path_count_p,
    predicted_cycle_count,
    taylor_minorant,
)
from fracgap.errors import InfeasibleFamilyError, NonRegularPartError, NonUniformCycleCountError
from fracgap.optimizer import CandidateFamily, optimize_bound, solve_family, standard_families
from fracgap.spectral import spectral_summary

SQ5 = math.sqrt(5)


def close(a, b, tol, what=""):
    assert abs(a - b) <= tol, f"{what}: |{a!r} - {b!r}| = {abs(a - b):.3e} > {tol:.0e}"


def criterion_1():
    """Two-class bound arithmetic: C3 at s=3/2 with C5 at s=1/2."""
    rep = ClassReport.from_classes([(G.cycle(3), 1.5), (G.cycle(5), 0.5)])
    close(compute_bound(rep), (9 - SQ5) / 4, 1e-9, "bound")
    close(compute_bound(rep), 1.690983005625, 1e-9, "bound literal")


def criterion_2():
    """L(Petersen) with triangles at alpha and pentagons at (1-alpha)/2, and the LP optimum."""
    for alpha in (0.0, 0.25, 0.5, 1.0):
        lg, d = line_petersen_alpha(alpha)
        cert = certify(lg, d)
        assert cert.valid, cert.message
        close(cert.bound, 3 - SQ5 + alpha * (SQ5 - 1), 1e-8, f"alpha={alpha}")
    lg, fam = line_petersen_family()
    assert len(fam) == 22
    sol = solve_family(lg, fam)
    assert sol.optimal
    close(sol.objective, 2.0, 1e-7, "LP objective")
    _, cert = optimize_bound(lg, fam)
    close(cert.bound, 2.0, 1e-7, "re-certified LP bound")
    delta = spectral_summary(lg).delta
    close(delta, 2.0, 1e-8, "delta(L(P))")
    close(delta - cert.bound, 0.0, 1e-7, "slack")


def criterion_3():
    """Clique decompositions of line graphs give 2(k-2), and lambda_min(L(H)) = -2."""
    for h in (G.complete(4), G.petersen(), G.hypercube(3)):
        k = G.is_regular(h)
        assert h.m > h.n
        lg, d = line_graph_star_decomposition(h)
        cliques = set(maximal_cliques(lg))
        assert all(support(p.edges).vertices in cliques for p in d.parts), "star parts are maximal cliques"
        cert = certify(lg, d, compute_actual=True)
        assert cert.valid, cert.message
        close(cert.bound, 2 * (k - 2), 1e-8, f"bound for L({h!r})")
        close(spectral_summary(lg).lambda_min, -2.0, 1e-8, f"lambda_min(L({h!r}))")
        # LP over every maximal clique reaches the same value
        _, best = optimize_bound(lg, standard_families(lg, "maximal-cliques"))
        close(best.bound, 2 * (k - 2), 1e-8, f"LP bound for L({h!r})")


def criterion_4():
    """Blow-ups of odd cycles: the odd-cycle certificate is tight."""
    for h in (1, 2, 3):
        for k in (1, 2, 3):
            g = G.blow_up_odd_cycle(h, k)
            cert = certify(g, odd_cycle_decomposition(g), compute_actual=True)
            assert cert.valid, cert.message
            assert abs(cert.slack) <= 1e-8, f"blow-up ({h},{k}) slack {cert.slack:.3e}"


def criterion_5():
    """Petersen: path and common-distance counts, twelve pentagons, corollary value."""
    p_graph = G.petersen()
    chk = check_distance_regular(p_graph)
    assert chk.distance_regular
    p, q = path_count_p(chk.array, 2), common_distance_q(p_graph, 2)
    assert (p, q, predicted_cycle_count(p, q)) == (1, 4, 4)
    per_edge = cycles_per_edge(p_graph, 5)
    assert per_edge.uniform and per_edge.value == 4
    assert len(enumerate_cycles(p_graph, 5)) == 12
    d = odd_cycle_decomposition(p_graph)
    assert len(d.parts) == 12 and all(part.weight == 0.25 for part in d.parts)
    cert = certify(p_graph, d, compute_actual=True)
    assert cert.valid and all(cert.checks.values())
    close(cert.bound, corollary_bound(3, 2), 1e-8, "bound vs corollary")
    close(cert.bound, 0.572949017, 1e-8, "bound literal")
    close(cert.delta_actual, 1.0, 1e-8, "delta(Petersen)")
    assert cert.delta_actual >= cert.bound


def criterion_6():
    """Corollary value strictly above its polynomial minorant; tight on odd cycles."""
    for h in range(1, 51):
        for k in (2, 3, 10):
            assert corollary_bound(k, h) > taylor_minorant(k, h), (k, h)
    for h in range(1, 21):
        close(spectral_summary(G.cycle(2 * h + 1)).delta, corollary_bound(2, h), 1e-8, f"C_{2 * h + 1}")


def criterion_7():
    """Soundness and proof replay over the whole corpus."""
    pairs = corpus()
    assert len(pairs) >= 25
    for name, g, d in pairs:
        cert = certify(g, d, compute_actual=True)
        assert cert.valid, f"{name}: {cert.message}"
        assert cert.bound <= cert.delta_actual + 1e-7, f"{name}: bound {cert.bound} > delta {cert.delta_actual}"
        assert replay_proof_chain(g, d).ok, f"{name}: proof replay failed"


def criterion_8():
    """Degree identity sum d_j s_j = k on every corpus certificate."""
    for name, g, d in corpus():
        cert = certify(g, d)
        assert cert.valid, f"{name}: {cert.message}"
        close(degree_sum(cert.report), cert.k, 1e-9, name)


def criterion_9():
    """Eigensolver against closed-form cycle spectra; bipartite gap is zero."""
    for n in range(3, 21):
        ours = np.sort(spectral_summary(G.cycle(n)).eigenvalues)
        ref = np.sort([2 * math.cos(2 * math.pi * j / n) for j in range(n)])
        assert np.max(np.abs(ours - ref)) <= 1e-8, f"C_{n}"
    for g in (G.cycle(4), G.cycle(6), G.complete_bipartite(3, 3)):
        close(spectral_summary(g).delta, 0.0, 1e-8, repr(g))


def _cli(argv, stdin):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, json.loads(out.getvalue()), json.loads(err.getvalue())


def criterion_10(tmp_dir):
    """Three failing inputs, each stopping at the named stage with exit code 1."""
    chord = c5_plus_chord()
    with pytest.raises(NonUniformCycleCountError):
        odd_cycle_decomposition(chord)
    code, out, err = _cli(["drg-bound"], G.emit_edge_list(chord))
    assert (code, out["stage"], err["stage"]) == (1, "odd_cycle_decomposition", "odd_cycle_decomposition")

    paths = FractionalDecomposition.build(4, [([(0, 1), (1, 2)], 1.0), ([(2, 3), (3, 0)], 1.0)])
    with pytest.raises(NonRegularPartError):
        classify(G.cycle(4), paths)
    decomp_path = f"{tmp_dir}/c4_paths.json"
    with open(decomp_path, "w") as fh:
        json.dump(paths.to_json(), fh)
    code, out, err = _cli(["bound", "--decomp", decomp_path], G.emit_edge_list(G.cycle(4)))
    assert (code, out["stage"], err["stage"]) == (1, "classify", "classify")

    triangle = [[0, 1], [1, 2], [0, 2]]
    with pytest.raises(InfeasibleFamilyError):
        optimize_bound(G.complete(4), CandidateFamily.from_parts([[tuple(e) for e in triangle]]))
    fam_path = f"{tmp_dir}/one_triangle.json"
    with open(fam_path, "w") as fh:
        json.dump({"parts": [{"edges": triangle}]}, fh)
    code, out, err = _cli(["optimize", "--family", f"file={fam_path}"], G.emit_edge_list(G.complete(4)))
    assert (code, out["stage"], err["stage"]) == (1, "lp", "lp")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def _call(fn, tmp_dir):
    return fn(tmp_dir) if fn is criterion_10 else fn()


@pytest.mark.parametrize("fn", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 11)])
def test_criterion(fn, request, tmp_path):
    results = request.config.stash.setdefault(ACCEPTANCE_KEY, {})
    num = int(fn.__name__.rsplit("_", 1)[1])
    try:
        _call(fn, tmp_path)
    except BaseException as exc:
        results[num] = (False, fn.__doc__, f"{type(exc).__name__}: {exc}")
        raise
    results[num] = (True, fn.__doc__, "")


def main() -> int:
    import tempfile

    failed = 0
    with tempfile.TemporaryDirectory() as tmp:
        for i, fn in enumerate(CRITERIA, 1):
            try:
                _call(fn, tmp)
                print(f"criterion {i:2d}: PASS  {fn.__doc__}")
            except Exception:
                failed += 1
                print(f"criterion {i:2d}: FAIL  {fn.__doc__}")
                traceback.print_exc(limit=3)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
