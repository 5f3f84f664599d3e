"""Command-line frontend.

Exit codes: 0 success (all checks passed for verify), 1 verification
failure with counterexamples in the report, 2 usage or parse error,
3 capacity limit exceeded. GRAPHSYM_TOL overrides the default equality
tolerance of 1e-9.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import build, report, verify
from .errors import CapacityError, DomainError, GraphParseError
from .graphio import load_graph_file
from .states import DEFAULT_TOL, inner_product
from .symmetry import classify

TOL_ENV_VAR = "GRAPHSYM_TOL"

_METHOD_BUILDERS = {
    "recursive": build.antisymmetric_state,
    "oracle": build.oracle_antisymmetric_state,
    "alternator": build.alternator_state,
}


class UsageError(Exception):
    pass


def _tolerance() -> float:
    raw = os.environ.get(TOL_ENV_VAR)
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise UsageError(f"{TOL_ENV_VAR}={raw!r} is not a number") from None
    if tol <= 0:
        raise UsageError(f"{TOL_ENV_VAR} must be positive, got {raw}")
    return tol


def _emit(payload: dict, out_path) -> None:
    text = report.render_json(payload)
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _resolve(construction: str, parsed, levels) -> tuple:
    if construction == "cz":
        if parsed.directed:
            raise UsageError("the cz construction needs an undirected graph file")
        for d in (parsed.levels, levels):
            if d is not None and d != 2:
                raise UsageError("the cz construction is defined on two-level systems")
        return parsed.graph, 2
    if not parsed.directed:
        raise UsageError("the gr construction needs a directed graph file")
    d = levels if levels is not None else parsed.levels
    if d is None:
        d = parsed.graph.num_vertices
    if d < 2:
        raise UsageError(f"need at least two levels, got {d}")
    return parsed.graph, d


def _cmd_build(args) -> int:
    tol = _tolerance()
    graph, d = _resolve(args.construction, load_graph_file(args.graph_file), args.levels)
    if args.construction == "cz":
        state = build.cz_graph_state(graph)
        payload = report.state_report(
            "cz-graph-state",
            state,
            graph=graph,
            symmetry=classify(state, tol),
            tolerance=tol,
        )
    else:
        state, trace = build.gr_graph_state(graph, d)
        payload = report.state_report(
            "gr-graph-state",
            state,
            graph=graph,
            symmetry=classify(state, tol),
            trace=trace,
            tolerance=tol,
        )
    _emit(payload, args.out)
    return 0


def _cmd_antisym(args) -> int:
    tol = _tolerance()
    methods = []
    for m in args.method or ["recursive"]:
        if m not in methods:
            methods.append(m)
    levels = args.levels if args.levels is not None else args.n
    built = {m: _METHOD_BUILDERS[m](args.n, levels) for m in methods}
    primary = built[methods[0]]
    extras: dict = {"methods": methods}
    if len(methods) > 1:
        fidelities = {}
        for i, ma in enumerate(methods):
            for mb in methods[i + 1 :]:
                fidelities[f"{ma}_vs_{mb}"] = abs(inner_product(built[ma], built[mb]))
        extras["fidelities"] = fidelities
    payload = report.state_report(
        f"antisym-{methods[0]}",
        primary,
        symmetry=classify(primary, tol),
        extras=extras,
        tolerance=tol,
    )
    _emit(payload, args.out)
    return 0


def _cmd_classify(args) -> int:
    tol = _tolerance()
    parsed = load_graph_file(args.graph_file)
    construction = args.construction
    if construction is None:
        construction = "gr" if parsed.directed else "cz"
    graph, d = _resolve(construction, parsed, args.levels)
    if construction == "cz":
        state = build.cz_graph_state(graph)
    else:
        state, _ = build.gr_graph_state(graph, d)
    payload = {
        "kind": f"classify-{construction}",
        "num_qudits": state.num_qudits,
        "levels": state.levels,
        "graph": report.graph_payload(graph),
        "tolerance": tol,
        "symmetry": report.symmetry_payload(classify(state, tol)),
    }
    _emit(payload, args.out)
    return 0


def _cmd_verify(args) -> int:
    summary = verify.run_suite(args.suite, args.max_n, _tolerance())
    _emit(summary, args.out)
    return 0 if summary["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphsym",
        description=(
            "Build multiqudit states from graph files and classify their "
            "exchange symmetry."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a state from a graph file and report amplitudes")
    p.add_argument("graph_file")
    p.add_argument("--construction", choices=("cz", "gr"), required=True)
    p.add_argument("--levels", type=int, help="levels per qudit (gr only; default: vertex count)")
    p.add_argument("--out", help="report path (default: stdout)")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("antisym", help="build the n-qudit antisymmetric chain state")
    p.add_argument("n", type=int)
    p.add_argument("--levels", type=int, help="levels per qudit (default: n)")
    p.add_argument(
        "--method",
        action="append",
        choices=tuple(_METHOD_BUILDERS),
        help="construction method; repeat to cross-check (default: recursive)",
    )
    p.add_argument("--out", help="report path (default: stdout)")
    p.set_defaults(func=_cmd_antisym)

    p = sub.add_parser("classify", help="classify the exchange symmetry of a graph state")
    p.add_argument("graph_file")
    p.add_argument("--construction", choices=("cz", "gr"), help="default: inferred from the file")
    p.add_argument("--levels", type=int)
    p.add_argument("--out", help="report path (default: stdout)")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="run a verification sweep and report pass/fail")
    p.add_argument("suite", choices=("theorem1", "impossibility", "antisymmetry", "all"))
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--out", help="report path (default: stdout)")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (UsageError, GraphParseError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
