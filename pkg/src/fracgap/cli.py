"""Command-line front end.

Exit codes: 0 success, 1 a mathematical check failed (diagnostics as JSON on
stdout), 2 malformed input or usage. Every error is also written to stderr as
``{"error": ..., "stage": ...}``.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import config
from .cycles import enumerate_cycles, odd_girth
from .decomposition import FractionalDecomposition, certify
from .drg import check_distance_regular, drg_bound
from .errors import CheckFailure, FracGapError, InputError
from .graph import emit_edge_list, emit_graph6, generate, parse_graph
from .optimizer import optimize_bound, standard_families
from .spectral import spectral_summary

EXIT_OK, EXIT_CHECK, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _round(x):
    if isinstance(x, dict):
        return {k: _round(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_round(v) for v in x]
    if isinstance(x, np.generic):
        x = x.item()
    if isinstance(x, float):
        if not math.isfinite(x):
            return None
        if abs(x) < 1e-12:
            return 0.0
        return float(f"{x:.12g}")
    return x


def dumps(obj) -> str:
    return json.dumps(_round(obj), sort_keys=False)


def _read_text(source: str | None, stdin) -> str:
    if source in (None, "-"):
        return stdin.read()
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {source!r}: {exc.strerror}") from None


def _load_graph(args, stdin):
    return parse_graph(_read_text(args.input, stdin))


def _load_decomp(path: str) -> FractionalDecomposition:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path!r}: {exc.strerror}") from None
    return FractionalDecomposition.loads(text)


def _check_failed(stage: str, message: str, payload: dict | None = None) -> CheckFailure:
    return CheckFailure(message, stage=stage, details=payload or {})


# ---------------------------------------------------------------- commands

def cmd_gen(args, stdin, tol):
    base = None
    if args.family.replace("-", "_") == "line_graph":
        base = parse_graph(_read_text(args.base, stdin))
    try:
        params = [int(p) for p in args.params]
    except ValueError:
        raise InputError(f"generator parameters must be integers, got {args.params}") from None
    g = generate(args.family, *params, base=base)
    if args.out_format == "graph6":
        return emit_graph6(g) + "\n", None
    return emit_edge_list(g), None


def cmd_spectrum(args, stdin, tol):
    return spectral_summary(_load_graph(args, stdin), tol).to_json(), None


def cmd_oddgirth(args, stdin, tol):
    og = odd_girth(_load_graph(args, stdin))
    if args.output == "plain":
        return ("bipartite" if og is None else str(og)) + "\n", None
    return {"odd_girth": og, "bipartite": og is None}, None


def cmd_cycles(args, stdin, tol):
    g = _load_graph(args, stdin)
    return enumerate_cycles(g, args.length, tol.node_limit).to_json(), None


def _certify_cmd(args, stdin, tol, actual):
    g = _load_graph(args, stdin)
    d = _load_decomp(args.decomp)
    cert = certify(g, d, compute_actual=actual, tol=tol.user_weight, tolerances=tol)
    out = cert.to_json()
    out["valid"] = cert.valid
    if cert.slack is not None and cert.slack < -tol.assertion:
        out["valid"] = False
        return out, _check_failed("soundness", "certified bound exceeds delta(G)", out)
    if not cert.valid:
        return out, _check_failed(cert.failed_stage, cert.message or "check failed", out)
    return out, None


def cmd_verify(args, stdin, tol):
    return _certify_cmd(args, stdin, tol, actual=False)


def cmd_bound(args, stdin, tol):
    return _certify_cmd(args, stdin, tol, actual=args.actual)


def cmd_drg_check(args, stdin, tol):
    chk = check_distance_regular(_load_graph(args, stdin))
    out = chk.to_json()
    if not chk:
        return out, _check_failed("drg", "graph is not distance-regular", out)
    return out, None


def cmd_drg_bound(args, stdin, tol):
    out = drg_bound(_load_graph(args, stdin))
    if not out["certificate_valid"]:
        return out, _check_failed(out["failed_stage"], "odd-cycle certificate failed", out)
    return out, None


def cmd_optimize(args, stdin, tol):
    g = _load_graph(args, stdin)
    fam = standard_families(g, args.family, tol)
    decomp, cert = optimize_bound(g, fam, tol)
    return {
        "family": args.family,
        "candidates": len(fam),
        "decomposition": decomp.to_json(),
        "certificate": cert.to_json(),
    }, None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("input", nargs="?", help="graph file (edge list or graph6); stdin if omitted")
    common.add_argument("--output", choices=("json", "plain"), default="json")

    p = _Parser(prog="fracgap", description="Certified lower bounds on lambda_min + lambda_1 of regular graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate a graph")
    g.add_argument("family", help="cycle, complete, complete_bipartite, petersen, hypercube, line_graph, blow_up_odd_cycle")
    g.add_argument("params", nargs="*")
    g.add_argument("--out-format", choices=("edgelist", "graph6"), default="edgelist")
    g.add_argument("--base", help="base graph for line_graph (stdin if omitted)")
    g.set_defaults(func=cmd_gen)

    for name, func, help_ in (
        ("spectrum", cmd_spectrum, "eigenvalues and the gap delta"),
        ("oddgirth", cmd_oddgirth, "length of a shortest odd cycle"),
        ("drg-check", cmd_drg_check, "test distance-regularity"),
        ("drg-bound", cmd_drg_bound, "odd-cycle certificate and corollary bounds"),
    ):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)

    c = sub.add_parser("cycles", parents=[common], help="enumerate cycles of a fixed length")
    c.add_argument("--length", "-L", type=int, required=True)
    c.set_defaults(func=cmd_cycles)

    for name, func in (("verify-decomp", cmd_verify), ("bound", cmd_bound)):
        sp = sub.add_parser(name, parents=[common], help="check a decomposition file" if name == "verify-decomp" else "certify a bound")
        sp.add_argument("--decomp", required=True, help="decomposition JSON")
        if name == "bound":
            sp.add_argument("--actual", action="store_true", help="also compute delta(G) and the slack")
        sp.set_defaults(func=func)

    o = sub.add_parser("optimize", parents=[common], help="LP-optimal weights over a candidate family")
    o.add_argument("--family", required=True, help="odd-girth-cycles | cycles=L[,L...] | maximal-cliques | file=PATH")
    o.set_defaults(func=cmd_optimize)
    return p


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    def report(exc_msg, stage):
        print(json.dumps({"error": exc_msg, "stage": stage}), file=stderr)

    try:
        args = build_parser().parse_args(argv)
        tol = config.from_environment()
        out, failure = args.func(args, stdin, tol)
    except UsageError as exc:
        report(str(exc), "usage")
        return EXIT_INPUT
    except CheckFailure as exc:
        stdout.write(dumps({"ok": False, "stage": exc.stage, "error": str(exc), "details": exc.details}) + "\n")
        report(str(exc), exc.stage)
        return EXIT_CHECK
    except (InputError, ValueError) as exc:
        report(str(exc), getattr(exc, "stage", "input"))
        return EXIT_INPUT
    except FracGapError as exc:
        report(str(exc), exc.stage)
        return EXIT_INPUT

    if failure is not None and isinstance(out, dict):
        out = {"ok": False, "stage": failure.stage, **out}
    stdout.write(out if isinstance(out, str) else dumps(out) + "\n")
    if failure is not None:
        report(str(failure), failure.stage)
        return EXIT_CHECK
    return EXIT_OK


def main() -> None:
    sys.exit(run())
