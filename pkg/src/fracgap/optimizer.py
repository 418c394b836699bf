"""Choose decomposition weights that maximize the certified bound.

Variables are the part weights alpha_i >= 0. Constraints: every host edge
carries weight 1, and for every class j and vertex v != 0 the class mass at
v equals the class mass at vertex 0. The objective is the bound expressed
through the masses at vertex 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .cliques import maximal_cliques
from .config import DEFAULT, Tolerances
from .cycles import cycle_edges, enumerate_cycles, odd_girth
from .decomposition import BoundCertificate, ClassReport, FractionalDecomposition, classify_parts, certify
from .errors import BipartiteGraphError, CheckFailure, InfeasibleFamilyError, InputError, LPBreakdown
from .graph import Edge, Graph, norm_edge
from .simplex import INFEASIBLE, UNBOUNDED, LinearProgram, LPSolution, solve_lp

BASE_VERTEX = 0


@dataclass(frozen=True)
class CandidateFamily:
    parts: tuple[tuple[Edge, ...], ...]
    class_of: tuple[int, ...]
    report: ClassReport  # representative, d_j, delta(H_j) per class; s unset
    supports: tuple[frozenset[int], ...]

    @classmethod
    def from_parts(cls, parts: Sequence[Sequence[Sequence[int]]], tol: Tolerances = DEFAULT) -> "CandidateFamily":
        normed = []
        for idx, edges in enumerate(parts):
            es = tuple(sorted({norm_edge(int(u), int(v)) for u, v in edges}))
            if not es:
                raise InputError(f"candidate part {idx} has no edges")
            normed.append(es)
        if not normed:
            raise InputError("candidate family is empty")
        report, class_of, supports = classify_parts(normed, tol)
        return cls(tuple(normed), tuple(class_of), report, tuple(frozenset(s.vertices) for s in supports))

    def __len__(self) -> int:
        return len(self.parts)

    def __add__(self, other: "CandidateFamily") -> "CandidateFamily":
        return CandidateFamily.from_parts(self.parts + other.parts)


def build_decomposition_lp(g: Graph, fam: CandidateFamily) -> LinearProgram:
    """Edge rows first (sorted host edges), then one row per (vertex != 0, class); all-zero rows dropped."""
    nvar = len(fam)
    edge_index = {e: r for r, e in enumerate(g.sorted_edges)}
    A_edge = np.zeros((g.m, nvar))
    for i, edges in enumerate(fam.parts):
        for e in edges:
            if e not in edge_index:
                raise InputError(f"candidate part {i} uses {e}, which is not a host edge")
            A_edge[edge_index[e], i] = 1.0
    labels: list = [("edge", e) for e in g.sorted_edges]

    rows = []
    for v in range(g.n):
        if v == BASE_VERTEX:
            continue
        for j in range(fam.report.t):
            row = np.zeros(nvar)
            for i, sup in enumerate(fam.supports):
                if fam.class_of[i] != j:
                    continue
                row[i] = (v in sup) - (BASE_VERTEX in sup)
            if np.any(row):
                rows.append(row)
                labels.append(("homogeneity", v, j))
    A = np.vstack([A_edge] + rows) if rows else A_edge
    b = np.concatenate([np.ones(g.m), np.zeros(len(rows))])
    c = np.array([
        fam.report.classes[fam.class_of[i]].delta if BASE_VERTEX in fam.supports[i] else 0.0
        for i in range(nvar)
    ])
    return LinearProgram(c, A, b, labels)


def optimize_bound(
    g: Graph, fam: CandidateFamily, tol: Tolerances = DEFAULT
) -> tuple[FractionalDecomposition, BoundCertificate]:
    """Solve the LP, drop negligible weights, and certify the result from scratch."""
    lp = build_decomposition_lp(g, fam)
    sol = solve_lp(lp, tol)
    if sol.status == INFEASIBLE:
        raise InfeasibleFamilyError(
            "no homogeneous fractional decomposition exists within this family",
            details={"parts": len(fam), "rows": lp.num_rows},
        )
    if sol.status == UNBOUNDED:
        raise LPBreakdown("LP reported unbounded; the model is wrong")
    kept = [(fam.parts[i], float(a)) for i, a in enumerate(sol.x) if a > tol.lp_drop]
    decomp = FractionalDecomposition.build(g.n, kept)
    cert = certify(g, decomp, compute_actual=True, tol=tol.lp_recertify, tolerances=tol)
    if not cert.valid:
        raise CheckFailure(f"LP optimum failed re-certification at {cert.failed_stage}", stage=cert.failed_stage)
    if abs(cert.bound - sol.objective) > tol.lp_recertify:
        raise LPBreakdown(f"certified bound {cert.bound!r} differs from LP objective {sol.objective!r}")
    return decomp, cert


def solve_family(g: Graph, fam: CandidateFamily, tol: Tolerances = DEFAULT) -> LPSolution:
    return solve_lp(build_decomposition_lp(g, fam), tol)


def _clique_edges(clique: Sequence[int]) -> tuple[Edge, ...]:
    return tuple((a, b) for i, a in enumerate(clique) for b in clique[i + 1:])


def _parse_kind(kind: str) -> tuple[str, str | None]:
    name, _, arg = kind.partition("=")
    if not arg and "(" in name and name.endswith(")"):
        name, arg = name[:-1].split("(", 1)
    return name.strip().lower(), (arg.strip() or None)


def standard_families(g: Graph, kind: str, tol: Tolerances = DEFAULT) -> CandidateFamily:
    """Candidate family by name.

    ``odd-girth-cycles``; ``cycles=L`` or ``cycles=L1,L2``; ``maximal-cliques``
    (cliques of size >= 2); ``file=PATH`` with JSON ``{"parts": [{"edges": ...}]}``
    where weights, if present, are ignored.
    """
    name, arg = _parse_kind(kind)
    if name == "odd-girth-cycles":
        og = odd_girth(g)
        if og is None:
            raise BipartiteGraphError("graph is bipartite; there are no odd cycles")
        parts = [cycle_edges(c) for c in enumerate_cycles(g, og, tol.node_limit).cycles]
    elif name == "cycles":
        if arg is None:
            raise InputError("cycles family needs lengths, e.g. cycles=5")
        try:
            lengths = [int(x) for x in arg.split(",")]
        except ValueError:
            raise InputError(f"bad cycle lengths {arg!r}") from None
        parts = [cycle_edges(c) for L in lengths for c in enumerate_cycles(g, L, tol.node_limit).cycles]
    elif name == "maximal-cliques":
        parts = [_clique_edges(c) for c in maximal_cliques(g, tol.node_limit) if len(c) >= 2]
    elif name == "file":
        if arg is None:
            raise InputError("file family needs a path, e.g. file=parts.json")
        try:
            data = json.loads(Path(arg).read_text())
            parts = [p["edges"] for p in data["parts"]]
        except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
            raise InputError(f"cannot read family file {arg!r}: {exc}") from None
    else:
        raise InputError(f"unknown family kind {kind!r}")
    if not parts:
        raise InputError(f"family {kind!r} is empty on this graph")
    return CandidateFamily.from_parts(parts, tol)
