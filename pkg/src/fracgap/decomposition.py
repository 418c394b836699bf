"""Homogeneous fractional decompositions and the certified gap bound.

A decomposition is a list of weighted edge subsets of a host graph. It
certifies ``delta(G) >= sum_j delta(H_j) * s_j`` once four checks pass:
every host edge carries total weight 1, every part's support is regular,
each isomorphism class puts the same weight mass ``s_j`` on every vertex,
and ``sum_j d_j s_j`` equals the host degree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from .config import DEFAULT, Tolerances
from .errors import CheckFailure, ForeignEdgeError, InputError, NonRegularPartError
from .graph import Edge, Graph, is_connected, is_regular, line_graph, norm_edge
from .iso import canonical_form
from .spectral import spectral_summary


@dataclass(frozen=True)
class Part:
    edges: tuple[Edge, ...]
    weight: float


@dataclass(frozen=True)
class FractionalDecomposition:
    host_n: int
    parts: tuple[Part, ...]

    @classmethod
    def build(cls, host_n: int, parts: Iterable[tuple[Iterable[Sequence[int]], float]]) -> "FractionalDecomposition":
        """Validate and normalize. Duplicate edges inside a part and nonpositive weights are errors."""
        out = []
        for idx, (edges, weight) in enumerate(parts):
            weight = float(weight)
            if not np.isfinite(weight) or weight <= 0:
                raise InputError(f"part {idx}: weight must be positive, got {weight}")
            seen = set()
            for e in edges:
                if len(e) != 2:
                    raise InputError(f"part {idx}: malformed edge {e!r}")
                u, v = int(e[0]), int(e[1])
                if u == v:
                    raise InputError(f"part {idx}: self-loop at {u}")
                if not (0 <= u < host_n and 0 <= v < host_n):
                    raise InputError(f"part {idx}: edge {(u, v)} outside host of order {host_n}")
                key = norm_edge(u, v)
                if key in seen:
                    raise InputError(f"part {idx}: duplicate edge {key}")
                seen.add(key)
            if not seen:
                raise InputError(f"part {idx}: no edges")
            out.append(Part(tuple(sorted(seen)), weight))
        if not out:
            raise InputError("decomposition has no parts")
        return cls(host_n, tuple(out))

    def scaled(self, factor: float) -> "FractionalDecomposition":
        return FractionalDecomposition(self.host_n, tuple(Part(p.edges, p.weight * factor) for p in self.parts))

    def relabel(self, perm: Sequence[int]) -> "FractionalDecomposition":
        return FractionalDecomposition(
            self.host_n,
            tuple(Part(tuple(sorted(norm_edge(perm[u], perm[v]) for u, v in p.edges)), p.weight) for p in self.parts),
        )

    def to_json(self) -> dict:
        return {
            "host_n": self.host_n,
            "parts": [{"edges": [list(e) for e in p.edges], "weight": p.weight} for p in self.parts],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FractionalDecomposition":
        try:
            host_n = int(data["host_n"])
            raw = [(p["edges"], p["weight"]) for p in data["parts"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed decomposition JSON: {exc}") from None
        return cls.build(host_n, raw)

    @classmethod
    def loads(cls, text: str) -> "FractionalDecomposition":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"decomposition file is not JSON: {exc}") from None
        return cls.from_json(data)


# ---------------------------------------------------------------- support

@dataclass(frozen=True)
class Support:
    vertices: tuple[int, ...]  # V_i, sorted host labels
    graph: Graph  # G_i' on 0..|V_i|-1, vertex j is host vertex vertices[j]

    @property
    def label_map(self) -> dict[int, int]:
        return {v: j for j, v in enumerate(self.vertices)}


def support(edges: Sequence[Edge]) -> Support:
    if not edges:
        raise InputError("support of an empty part")
    verts = tuple(sorted({x for e in edges for x in e}))
    index = {v: j for j, v in enumerate(verts)}
    return Support(verts, Graph.from_edges(len(verts), ((index[u], index[v]) for u, v in edges)))


# ---------------------------------------------------------------- edge condition

@dataclass
class EdgeConditionResult:
    ok: bool
    violations: list[tuple[Edge, float]]

    def __bool__(self) -> bool:
        return self.ok


def edge_weight_sums(g: Graph, d: FractionalDecomposition) -> dict[Edge, float]:
    sums = {e: 0.0 for e in g.edges}
    for idx, part in enumerate(d.parts):
        for e in part.edges:
            if e not in sums:
                raise ForeignEdgeError(f"part {idx} uses {e}, which is not a host edge", details={"part": idx, "edge": list(e)})
            sums[e] += part.weight
    return sums


def verify_edge_condition(g: Graph, d: FractionalDecomposition, tol: float = DEFAULT.internal_weight) -> EdgeConditionResult:
    """Every host edge must carry total weight 1 within ``tol``."""
    if d.host_n != g.n:
        raise InputError(f"decomposition is for n={d.host_n}, host has n={g.n}")
    sums = edge_weight_sums(g, d)
    bad = [(e, s) for e, s in sorted(sums.items()) if abs(s - 1.0) > tol]
    return EdgeConditionResult(not bad, bad)


# ---------------------------------------------------------------- classes

@dataclass(frozen=True)
class ClassInfo:
    iso: str
    representative: Graph
    d: int
    lambda_min: float
    delta: float
    members: tuple[int, ...] = ()
    s: float | None = None

    def to_json(self) -> dict:
        return {"iso": self.iso, "d": self.d, "s": self.s, "delta_H": self.delta, "members": len(self.members)}


@dataclass(frozen=True)
class ClassReport:
    classes: tuple[ClassInfo, ...]

    @property
    def t(self) -> int:
        return len(self.classes)

    @classmethod
    def from_classes(cls, data: Iterable[tuple[Graph, float]]) -> "ClassReport":
        """Report from (regular graph, s) pairs, without a host; used for bound arithmetic."""
        out = []
        for rep, s in data:
            k = is_regular(rep)
            if k is None:
                raise NonRegularPartError("class representative is not regular")
            summary = spectral_summary(rep)
            out.append(ClassInfo(canonical_form(rep), rep, k, summary.lambda_min, summary.delta, (), float(s)))
        return cls(tuple(out))


def class_info_for(rep: Graph, tol: Tolerances = DEFAULT) -> ClassInfo:
    k = is_regular(rep)
    if k is None:
        raise NonRegularPartError("support is not regular")
    summary = spectral_summary(rep, tol)
    return ClassInfo(canonical_form(rep, tol.iso_max_vertices), rep, k, summary.lambda_min, summary.delta)


def classify_parts(parts: Sequence[Sequence[Edge]], tol: Tolerances = DEFAULT) -> tuple[ClassReport, list[int], list[Support]]:
    """Group parts by isomorphism type of their supports.

    Returns the report, the class index of every part, and every support.
    """
    reps: dict[str, int] = {}
    infos: list[ClassInfo] = []
    members: list[list[int]] = []
    class_of: list[int] = []
    supports: list[Support] = []
    for idx, edges in enumerate(parts):
        sup = support(edges)
        supports.append(sup)
        if is_regular(sup.graph) is None:
            raise NonRegularPartError(
                f"part {idx} has a non-regular support (degrees {sorted(set(sup.graph.degrees))})",
                details={"part": idx, "degrees": sorted(sup.graph.degrees)},
            )
        key = canonical_form(sup.graph, tol.iso_max_vertices)
        if key not in reps:
            reps[key] = len(infos)
            infos.append(class_info_for(sup.graph, tol))
            members.append([])
        j = reps[key]
        members[j].append(idx)
        class_of.append(j)
    report = ClassReport(tuple(replace(info, members=tuple(mem)) for info, mem in zip(infos, members)))
    return report, class_of, supports


def classify(g: Graph, d: FractionalDecomposition, tol: Tolerances = DEFAULT) -> ClassReport:
    return classify_parts([p.edges for p in d.parts], tol)[0]


# ---------------------------------------------------------------- homogeneity

@dataclass
class HomogeneityResult:
    ok: bool
    report: ClassReport  # s filled in with the mass at vertex 0
    per_vertex: np.ndarray  # t x n matrix of s_j(v)
    violations: list[dict] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def vertex_masses(g: Graph, d: FractionalDecomposition, report: ClassReport) -> np.ndarray:
    class_of = {}
    for j, c in enumerate(report.classes):
        for i in c.members:
            class_of[i] = j
    masses = np.zeros((report.t, g.n))
    for i, part in enumerate(d.parts):
        for v in {x for e in part.edges for x in e}:
            masses[class_of[i], v] += part.weight
    return masses


def homogeneity(g: Graph, d: FractionalDecomposition, report: ClassReport, tol: float = DEFAULT.internal_weight) -> HomogeneityResult:
    masses = vertex_masses(g, d, report)
    violations = []
    for j in range(report.t):
        dev = np.abs(masses[j] - masses[j, 0])
        worst = int(np.argmax(dev))
        if dev[worst] > tol:
            violations.append({"class": j, "vertex": worst, "s_v": float(masses[j, worst]), "s_0": float(masses[j, 0])})
    filled = ClassReport(tuple(replace(c, s=float(masses[j, 0])) for j, c in enumerate(report.classes)))
    return HomogeneityResult(not violations, filled, masses, violations)


def degree_sum(report: ClassReport) -> float:
    return sum(c.d * c.s for c in report.classes)


def check_degree_identity(report: ClassReport, k: int | None, tol: float = DEFAULT.internal_weight) -> bool:
    if k is None:
        raise InputError("degree identity needs a regular host")
    return abs(degree_sum(report) - k) <= tol


def compute_bound(report: ClassReport) -> float:
    return float(sum(c.delta * c.s for c in report.classes))


# ---------------------------------------------------------------- certificate

STAGES = ("host", "edge_condition", "classify", "homogeneity", "degree_identity")


@dataclass
class BoundCertificate:
    checks: dict[str, bool | None]
    k: int | None = None
    bound: float | None = None
    delta_actual: float | None = None
    slack: float | None = None
    report: ClassReport | None = None
    failed_stage: str | None = None
    message: str | None = None
    violations: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return self.failed_stage is None

    @property
    def edge_condition_ok(self) -> bool:
        return bool(self.checks.get("edge_condition"))

    @property
    def homogeneity_ok(self) -> bool:
        return bool(self.checks.get("homogeneity"))

    @property
    def degree_identity_ok(self) -> bool:
        return bool(self.checks.get("degree_identity"))

    def to_json(self) -> dict:
        return {
            "checks": dict(self.checks),
            "failed_stage": self.failed_stage,
            "message": self.message,
            "violations": self.violations,
            "classes": [c.to_json() for c in self.report.classes] if self.report else [],
            "k": self.k,
            "bound": self.bound,
            "delta_actual": self.delta_actual,
            "slack": self.slack,
        }


def certify(
    g: Graph,
    d: FractionalDecomposition,
    compute_actual: bool = False,
    tol: float = DEFAULT.internal_weight,
    tolerances: Tolerances = DEFAULT,
) -> BoundCertificate:
    """Run every check in order and stop at the first failure, naming it."""
    cert = BoundCertificate(checks={s: None for s in STAGES})

    def fail(stage, message, violations=()):
        cert.checks[stage] = False
        cert.failed_stage = stage
        cert.message = message
        cert.violations = [_jsonable(v) for v in violations]
        return cert

    k = is_regular(g)
    if k is None or not is_connected(g):
        return fail("host", "host graph must be connected and regular")
    cert.k = k
    cert.checks["host"] = True

    try:
        ec = verify_edge_condition(g, d, tol)
    except (ForeignEdgeError, InputError) as exc:
        return fail("edge_condition", str(exc))
    if not ec:
        return fail("edge_condition", f"{len(ec.violations)} edge(s) do not carry weight 1",
                    [{"edge": list(e), "sum": s} for e, s in ec.violations])
    cert.checks["edge_condition"] = True

    try:
        report = classify(g, d, tolerances)
    except (CheckFailure, InputError) as exc:
        return fail("classify", str(exc), [getattr(exc, "details", {})])
    cert.checks["classify"] = True
    cert.report = report

    hom = homogeneity(g, d, report, tol)
    cert.report = hom.report
    if not hom:
        return fail("homogeneity", "class masses s_j(v) depend on the vertex", hom.violations)
    cert.checks["homogeneity"] = True

    if not check_degree_identity(hom.report, k, tol):
        return fail("degree_identity", f"sum d_j s_j = {degree_sum(hom.report)!r} differs from k = {k}")
    cert.checks["degree_identity"] = True

    cert.bound = compute_bound(hom.report)
    if compute_actual:
        cert.delta_actual = spectral_summary(g, tolerances).delta
        cert.slack = cert.delta_actual - cert.bound
    return cert


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, np.generic):
        return v.item()
    return v


# ---------------------------------------------------------------- proof replay

@dataclass
class ProofReplay:
    ok: bool
    lambda_min: float
    multiplicity: int
    part_terms: list[tuple[float, float]]  # ((A_i x, x), lambda_min(G_i') * |x^i|^2)
    weighted_quadratic: float  # sum_i alpha_i (A_i x, x); equals lambda_min(G)
    weighted_lower: float  # sum_i alpha_i lambda_min(G_i') |x^i|^2
    class_lower: float  # sum_j lambda_min(H_j) s_j
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def replay_proof_chain(g: Graph, d: FractionalDecomposition, tol: Tolerances = DEFAULT) -> ProofReplay:
    """Evaluate each step of the bound's derivation on a unit lambda_min eigenvector.

    When the lambda_min eigenspace has dimension above one, any unit vector in
    it serves; the multiplicity is reported.
    """
    report, class_of, supports = classify_parts([p.edges for p in d.parts], tol)
    hom = homogeneity(g, d, report, tol.user_weight)
    if not hom:
        raise CheckFailure("proof replay needs a homogeneous decomposition", stage="homogeneity")
    summ = spectral_summary(g, tol)
    x = summ.min_vector
    eps = tol.assertion
    terms = []
    failures = []
    weighted_q = weighted_low = 0.0
    for i, part in enumerate(d.parts):
        quad = 2.0 * sum(x[u] * x[v] for u, v in part.edges)
        norm2 = float(sum(x[v] ** 2 for v in supports[i].vertices))
        low = hom.report.classes[class_of[i]].lambda_min * norm2
        terms.append((quad, low))
        if quad < low - eps:
            failures.append(f"part {i}: (A_i x, x) = {quad:.12g} < {low:.12g}")
        weighted_q += part.weight * quad
        weighted_low += part.weight * low
    class_low = sum(c.lambda_min * c.s for c in hom.report.classes)
    if abs(weighted_q - summ.lambda_min) > 1e-7:
        failures.append(f"sum alpha_i (A_i x, x) = {weighted_q:.12g} != lambda_min = {summ.lambda_min:.12g}")
    if abs(weighted_low - class_low) > 1e-7:
        failures.append(f"regrouped sum {weighted_low:.12g} != sum_j lambda_min(H_j) s_j = {class_low:.12g}")
    if summ.lambda_min < class_low - eps:
        failures.append("lambda_min(G) below the class lower bound")
    return ProofReplay(not failures, summ.lambda_min, summ.min_multiplicity, terms, weighted_q, weighted_low, class_low, failures)


# ---------------------------------------------------------------- constructions

def line_graph_star_decomposition(h: Graph) -> tuple[Graph, FractionalDecomposition]:
    """L(h) with one clique per vertex of ``h`` (the edges at that vertex), weight 1 each.

    Every edge of L(h) is a pair of edges of ``h`` meeting at exactly one
    vertex, so it lies in exactly one star clique.
    """
    lg = line_graph(h)
    index = {e: i for i, e in enumerate(h.sorted_edges)}
    parts = []
    for v in range(h.n):
        inc = sorted(index[norm_edge(v, w)] for w in h.neighbors[v])
        edges = [(a, b) for ai, a in enumerate(inc) for b in inc[ai + 1:]]
        if edges:
            parts.append((edges, 1.0))
    return lg, FractionalDecomposition.build(lg.n, parts)
