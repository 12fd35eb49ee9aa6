"""Command-line surface.

Subcommands: gen (graph generators), closure (scheme of a graph),
decompose (certificate for the characterized class), arcs (arc-model
operations) and verify (sweep suites).  Exit codes are a stable contract:
0 for success or a certificate, 1 for a negative mathematical result,
2 for input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import arcs as arcmod
from . import suites
from .characterize import decompose_caw, predicted_aut_order, scheme_decomposition
from .closure import closure_of_graph
from .graphs import (
    complete,
    cycle,
    elementary_caw,
    empty_graph,
    graph_to_text,
    lex_product,
    read_graph,
)
from .schemes import is_association, scheme_to_text

DEFAULT_CLOSURE_LIMIT = 200
DEFAULT_EXACT_LIMIT = 12  # isomorphism search and automorphism counting


def _default_limit(fallback: int) -> int:
    env = os.environ.get("CAW_LIMIT")
    if env is None:
        return fallback
    try:
        return int(env)
    except ValueError:
        raise SystemExit(f"invalid CAW_LIMIT value {env!r}")


def _parse_gen_spec(spec: str):
    """Family spec strings like cnk:7:2, cycle:5, complete:3, empty:4, mkn:3:2."""
    parts = spec.split(":")
    family, args = parts[0], parts[1:]
    try:
        nums = [int(x) for x in args]
    except ValueError:
        raise ValueError(f"non-integer parameter in spec {spec!r}") from None
    if family == "cnk" and len(nums) == 2:
        return elementary_caw(*nums)
    if family == "cycle" and len(nums) == 1:
        return cycle(nums[0])
    if family == "complete" and len(nums) == 1:
        return complete(nums[0])
    if family == "empty" and len(nums) == 1:
        return empty_graph(nums[0])
    if family == "mkn" and len(nums) == 2:
        return lex_product(empty_graph(nums[0]), complete(nums[1]))
    raise ValueError(f"unknown generator spec {spec!r}")


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None or out_path == "-":
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _render_report(report: dict, fmt: str, timing_ms: float | None) -> str:
    if timing_ms is not None:
        report = dict(report, **{"timing-ms": round(timing_ms, 3)})
    if fmt == "machine":
        return json.dumps(report, sort_keys=True) + "\n"
    lines = []
    for key in report:
        value = report[key]
        if isinstance(value, list):
            lines.append(f"{key}:")
            lines.extend(f"  {item}" for item in value)
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _render_table(rows: list[dict]) -> str:
    width = max((len(r["case"]) for r in rows), default=4)
    lines = [f"{r['case']:<{width}}  {r['status']:<4}  {r['detail']}" for r in rows]
    return "\n".join(lines) + "\n"


def cmd_gen(args) -> int:
    try:
        if args.family == "lex":
            if len(args.params) != 2:
                raise ValueError("lex takes two generator specs, e.g. cnk:5:1 complete:2")
            g = lex_product(_parse_gen_spec(args.params[0]), _parse_gen_spec(args.params[1]))
        else:
            spec = ":".join([args.family] + args.params)
            g = _parse_gen_spec(spec)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("usage: gen {cnk N K | cycle N | complete N | mkn M N | lex SPEC SPEC}",
              file=sys.stderr)
        return 2
    _emit(graph_to_text(g), args.output)
    return 0


def cmd_closure(args) -> int:
    limit = args.limit if args.limit is not None else _default_limit(DEFAULT_CLOSURE_LIMIT)
    try:
        g = read_graph(args.graph)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if g.n > limit:
        print(f"error: graph has {g.n} vertices, closure limit is {limit}", file=sys.stderr)
        return 2
    start = time.perf_counter()
    cc = closure_of_graph(g)
    elapsed = (time.perf_counter() - start) * 1000
    if args.output:
        _emit(scheme_to_text(cc), args.output)
    report = {
        "input": args.graph,
        "n": cc.n,
        "rank": cc.rank,
        "association": is_association(cc),
        "diagonal-colors": len(cc.diagonal_colors),
    }
    sys.stdout.write(_render_report(report, args.format, None if args.no_timing else elapsed))
    return 0


def cmd_decompose(args) -> int:
    limit = args.limit if args.limit is not None else _default_limit(DEFAULT_CLOSURE_LIMIT)
    try:
        g = read_graph(args.graph)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if g.n > limit:
        print(f"error: graph has {g.n} vertices, limit is {limit}", file=sys.stderr)
        return 2
    start = time.perf_counter()
    cc = closure_of_graph(g)
    outcome = decompose_caw(g)
    report = {
        "input": args.graph,
        "n": g.n,
        "rank": cc.rank,
        "association": is_association(cc),
        "diagonal-colors": len(cc.diagonal_colors),
    }
    # absent results are encoded explicitly so every report carries all keys
    report.update({
        "certificate": "none",
        "relabeling": "none",
        "predicted-aut-order": "none",
        "scheme-decomposition": "none",
        "scheme-verdict": "none",
        "failure-stage": "none",
    })
    if outcome.ok:
        cert = outcome.certificate
        report["certificate"] = f"m={cert.m} k={cert.k} r={cert.r}"
        report["relabeling"] = " ".join(f"{v}:{a},{b}" for v, (a, b) in enumerate(cert.relabeling))
        report["predicted-aut-order"] = predicted_aut_order(cert.m, cert.k, cert.r)
        exact = DEFAULT_EXACT_LIMIT if args.limit is None else args.limit
        sd = scheme_decomposition(g, point_limit=min(g.n, exact))
        if sd is not None:
            report["scheme-decomposition"] = (
                f"rank2({sd.inner_rank2_size}) wr {sd.outer_kind}({sd.outer_size})"
            )
            report["scheme-verdict"] = sd.witness.kind
    else:
        report["failure-stage"] = outcome.failure_stage
    elapsed = (time.perf_counter() - start) * 1000
    sys.stdout.write(_render_report(report, args.format, None if args.no_timing else elapsed))
    return 0 if outcome.ok else 1


def cmd_arcs(args) -> int:
    try:
        model = arcmod.read_model(args.model)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.action == "check":
        rows = []
        failures = arcmod.condition_failures(model)
        for label in ("condition (1)", "condition (2)"):
            msg = next((f for f in failures if f.startswith(label)), None)
            rows.append({"case": label, "status": "pass" if msg is None else "FAIL",
                         "detail": msg or ""})
        ok_graph = not failures
        if ok_graph:
            g = arcmod.intersection_graph(model)
            check = arcmod.check_neighborhood_condition(g)
            rows.append({"case": "condition (3.1)", "status": "pass" if check.ok else "FAIL",
                         "detail": "" if check.ok else f"witness edge {check.witness}"})
            reduction = arcmod.reduction_failures(model)
            for label in ("(i)", "(ii)", "(iii)"):
                msg = next((f for f in reduction if f.startswith(label)), None)
                rows.append({"case": f"reduced {label}", "status": "pass" if msg is None else "FAIL",
                             "detail": msg or ""})
        sys.stdout.write(_render_table(rows))
        return 0 if all(r["status"] == "pass" for r in rows) else 1

    try:
        if args.action == "graph":
            g = arcmod.intersection_graph(model)
            _emit(graph_to_text(g), args.output)
            return 0
        reduced = arcmod.reduce(model)
        _emit(arcmod.model_to_text(reduced), args.output)
        return 0
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2 if "condition (3.1)" not in str(exc) else 1


def cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else 0
    bound = args.bound
    if bound is None:
        bound = _default_limit(12 if args.suite in ("aut", "all") else 14)
    start = time.perf_counter()
    if args.suite == "dihedral":
        tables = {"dihedral": suites.run_dihedral_suite(bound)}
    elif args.suite == "wreath":
        tables = {"wreath": suites.run_wreath_suite(bound, seed=seed)}
    elif args.suite == "aut":
        tables = {"aut": suites.run_aut_suite(bound)}
    else:
        named, _ = suites.run_all(bound, seed=seed)
        tables = {k: (rows, all(r["status"] == "pass" for r in rows)) for k, rows in named.items()}
    elapsed = (time.perf_counter() - start) * 1000
    ok_all = True
    if args.format == "machine":
        doc = {name: rows for name, (rows, _ok) in tables.items()}
        doc["ok"] = all(ok for _, ok in tables.values())
        if not args.no_timing:
            doc["timing-ms"] = round(elapsed, 3)
        sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")
        ok_all = doc["ok"]
    else:
        for name, (rows, ok) in tables.items():
            sys.stdout.write(f"== {name} ==\n")
            sys.stdout.write(_render_table(rows))
            ok_all &= ok
        sys.stdout.write(f"result: {'pass' if ok_all else 'FAIL'}\n")
        if not args.no_timing:
            sys.stdout.write(f"timing-ms: {elapsed:.3f}\n")
    return 0 if ok_all else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcschemes",
        description="Coherent closure, circular-arc models and decomposition certificates.",
    )
    parser.add_argument("--format", choices=("text", "machine"), default="text")
    parser.add_argument("--no-timing", action="store_true",
                        help="omit timing fields (for golden-file comparisons)")
    parser.add_argument("--limit", type=int, default=None,
                        help="size limit override (default from CAW_LIMIT or built-in)")
    parser.add_argument("--seed", type=int, default=None, help="seed for random sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph file")
    p.add_argument("family", choices=("cnk", "cycle", "complete", "mkn", "lex"))
    p.add_argument("params", nargs="*", help="family parameters")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("closure", help="compute the scheme of a graph")
    p.add_argument("graph")
    p.add_argument("-o", "--output", default=None, help="write the scheme dump here")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("decompose", help="decompose into C_{m,k}[K_r] if possible")
    p.add_argument("graph")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("arcs", help="operate on an arc-model file")
    p.add_argument("model")
    p.add_argument("action", choices=("graph", "reduce", "check"))
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_arcs)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("suite", choices=("dihedral", "wreath", "aut", "all"))
    p.add_argument("bound", nargs="?", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
