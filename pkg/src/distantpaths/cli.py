"""Command-line entry point: ``distantpaths {solve,verify,oracle,generate,bench}``.

Exit codes: 0 verified paths (or success), 1 verified ball (or a failed
verification), 2 bad input or usage, 3 internal invariant failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path as FsPath

from .certificates import DistantPaths, HittingBall, verify_certificate
from .dichotomy import InvariantError, solve_with_trace
from .formats import (
    FormatError,
    emit_certificate,
    emit_dot,
    emit_graph,
    emit_terminals,
    instance_digest,
    parse_certificate,
    parse_terminals,
    read_graph,
)
from .generators import Instance, default_corpus, figure1_instance, grid_instance, random_instance
from .oracle import OracleBudget, exact_distant_paths, min_hitting_ball

EXIT_PATHS = 0
EXIT_BALL = 1
EXIT_USAGE = 2
EXIT_INVARIANT = 3

BUDGET_ENV = "DISTANTPATHS_ORACLE_BUDGET"
DEFAULT_BUDGET = 60.0


class UsageError(Exception):
    pass


def oracle_budget_seconds(override: float | None = None) -> float:
    if override is not None:
        value = override
    else:
        raw = os.environ.get(BUDGET_ENV)
        if raw is None or raw.strip() == "":
            return DEFAULT_BUDGET
        try:
            value = float(raw)
        except ValueError:
            raise UsageError(f"{BUDGET_ENV} must be a number of seconds, got {raw!r}") from None
    if not value > 0:
        raise UsageError("oracle budget must be positive")
    return value


def _terminals(inline: str | None, path: str | None, name: str) -> frozenset[int]:
    if (inline is None) == (path is None):
        raise UsageError(f"give exactly one of --{name} and --{name}-file")
    text = inline if inline is not None else FsPath(path).read_text()
    return parse_terminals(text)


def _load(args) -> Instance:
    g = read_graph(args.graph)
    x = _terminals(args.x, args.x_file, "x")
    y = _terminals(args.y, args.y_file, "y")
    if args.d < 1:
        raise UsageError("--d must be at least 1")
    try:
        return Instance(g, x, y, args.d, label=str(args.graph))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def _write(text: str, dest: str | None):
    if dest is None or dest == "-":
        sys.stdout.write(text)
    else:
        FsPath(dest).write_text(text)


def _summary(inst: Instance) -> dict:
    return {
        "n": inst.graph.vertex_count,
        "m": inst.graph.edge_count,
        "x": len(inst.x),
        "y": len(inst.y),
        "d": inst.d,
    }


# ---------------------------------------------------------------------------
# subcommands


def cmd_solve(args) -> int:
    inst = _load(args)
    t0 = time.perf_counter()
    cert, trace = solve_with_trace(inst.graph, inst.x, inst.y, inst.d)
    solve_s = time.perf_counter() - t0
    verdict = verify_certificate(inst.graph, inst.x, inst.y, inst.d, cert)
    report = {
        "instance": _summary(inst),
        "branch": trace.branch,
        "certificate": cert.kind,
        "verified": bool(verdict),
        "reason": verdict.reason,
        "solve_seconds": round(solve_s, 6),
    }
    print(json.dumps(report, sort_keys=True), file=sys.stderr)
    if not verdict:
        raise InvariantError(f"solver produced a certificate that fails verification: {verdict.reason}")
    _write(emit_certificate(cert, instance_digest(inst.graph, inst.x, inst.y, inst.d)), args.out)
    if args.emit_dot:
        FsPath(args.emit_dot).write_text(emit_dot(inst.graph, inst.x, inst.y, cert))
    return EXIT_PATHS if isinstance(cert, DistantPaths) else EXIT_BALL


def cmd_verify(args) -> int:
    inst = _load(args)
    cert, digest = parse_certificate(FsPath(args.certificate).read_text())
    expected = instance_digest(inst.graph, inst.x, inst.y, inst.d)
    if digest is not None and digest != expected:
        print("fail: certificate was issued for a different instance", file=sys.stderr)
        return 1
    verdict = verify_certificate(inst.graph, inst.x, inst.y, inst.d, cert)
    print("pass" if verdict else f"fail: {verdict.reason}")
    return 0 if verdict else 1


def cmd_oracle(args) -> int:
    inst = _load(args)
    seconds = oracle_budget_seconds(args.budget)
    budget = OracleBudget(max_vertices=args.max_vertices, time_budget=seconds)
    res = exact_distant_paths(inst.graph, inst.x, inst.y, inst.d, k=args.k, budget=budget)
    doc = {
        "outcome": res.outcome.value,
        "paths": None if res.paths is None else [list(p) for p in res.paths],
        "nodes": res.nodes,
        "seconds": round(res.elapsed, 6),
    }
    if args.min_ball:
        got = min_hitting_ball(inst.graph, inst.x, inst.y)
        doc["min_ball"] = None if got is None else {"center": got[0], "radius": got[1]}
    print(json.dumps(doc, sort_keys=True))
    return 0


def _generated(args) -> Instance:
    if args.family == "figure1":
        return figure1_instance(args.d)
    if args.family == "grid":
        return grid_instance(args.rows, args.cols, args.d)
    return random_instance(args.n, args.p, args.x_size, args.y_size, args.seed, args.d)


def cmd_generate(args) -> int:
    try:
        inst = _generated(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    header = (
        f"# {inst.label}\n"
        f"# X: {emit_terminals(inst.x).strip()}\n"
        f"# Y: {emit_terminals(inst.y).strip()}\n"
        f"# d: {inst.d}\n"
    )
    if args.out is None:
        sys.stdout.write(header + emit_graph(inst.graph))
        return 0
    prefix = FsPath(args.out)
    FsPath(f"{prefix}.graph").write_text(header + emit_graph(inst.graph))
    FsPath(f"{prefix}.x").write_text(emit_terminals(inst.x))
    FsPath(f"{prefix}.y").write_text(emit_terminals(inst.y))
    print(f"wrote {prefix}.graph {prefix}.x {prefix}.y ({inst.graph.vertex_count} vertices, "
          f"{inst.graph.edge_count} edges)", file=sys.stderr)
    return 0


BENCH_FIELDS = [
    "id", "label", "n", "m", "x", "y", "d", "branch", "certificate", "radius",
    "verification", "seconds", "oracle", "min_radius", "min_radius_over_d",
]


def bench_row(job: tuple[int, Instance, int, float]) -> dict:
    idx, inst, oracle_cap, budget = job
    g = inst.graph
    row = {"id": idx, "label": inst.label, **_summary(inst)}
    t0 = time.perf_counter()
    try:
        cert, trace = solve_with_trace(g, inst.x, inst.y, inst.d)
    except InvariantError as exc:
        row.update(branch="invariant-error", certificate="", radius="", verification=f"error: {exc}")
    else:
        verdict = verify_certificate(g, inst.x, inst.y, inst.d, cert)
        row.update(
            branch=trace.branch,
            certificate=cert.kind,
            radius=cert.radius if isinstance(cert, HittingBall) else "",
            verification="pass" if verdict else "fail",
        )
    row["seconds"] = f"{time.perf_counter() - t0:.6f}"
    row.update(oracle="", min_radius="", min_radius_over_d="")
    if g.vertex_count <= oracle_cap:
        res = exact_distant_paths(g, inst.x, inst.y, inst.d, budget=OracleBudget(time_budget=budget))
        row["oracle"] = res.outcome.value
        got = min_hitting_ball(g, inst.x, inst.y)
        if got is not None:
            row["min_radius"] = got[1]
            row["min_radius_over_d"] = f"{got[1] / inst.d:.6f}"
    return row


def cmd_bench(args) -> int:
    budget = oracle_budget_seconds(args.budget)
    corpus = default_corpus(args.random, seed=args.seed)
    jobs = [(i, inst, args.oracle_cap, budget) for i, inst in enumerate(corpus)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(bench_row, jobs, chunksize=8))
    else:
        rows = [bench_row(j) for j in jobs]
    rows.sort(key=lambda r: r["id"])
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    _write(buf.getvalue(), args.out)
    # the ratio only means something where the oracle rules out distant paths
    ratios = [
        float(r["min_radius_over_d"])
        for r in rows
        if r["oracle"] == "absent" and r["min_radius_over_d"] != ""
    ]
    passed = sum(r["verification"] == "pass" for r in rows)
    summary = f"{passed}/{len(rows)} verified"
    if ratios:
        summary += (
            f"; max (min hitting radius)/d = {max(ratios):.3f}"
            f" over {len(ratios)} instances without distant paths"
        )
    print(summary, file=sys.stderr)
    return 0 if passed == len(rows) else 1


# ---------------------------------------------------------------------------
# argument parsing


def _instance_args(p: argparse.ArgumentParser):
    p.add_argument("graph", help="edge-list graph file")
    p.add_argument("--x", help="comma-separated X ids")
    p.add_argument("--y", help="comma-separated Y ids")
    p.add_argument("--x-file", help="file with X ids")
    p.add_argument("--y-file", help="file with Y ids")
    p.add_argument("--d", type=int, required=True, help="target distance")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distantpaths",
        description="Two far-apart X-Y paths, or one ball meeting every X-Y path.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve and print a verified certificate")
    _instance_args(p)
    p.add_argument("--out", help="certificate file (default stdout)")
    p.add_argument("--emit-dot", metavar="FILE", help="also write a Graphviz rendering")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a certificate against an instance")
    _instance_args(p)
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact exponential-time search")
    _instance_args(p)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--min-ball", action="store_true", help="also compute the minimum hitting ball")
    p.add_argument("--budget", type=float, help=f"seconds (default ${BUDGET_ENV} or {DEFAULT_BUDGET:g})")
    p.add_argument("--max-vertices", type=int, default=OracleBudget.max_vertices)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("generate", help="write an instance")
    p.add_argument("family", choices=["figure1", "grid", "random"])
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--rows", type=int, default=5)
    p.add_argument("--cols", type=int, default=5)
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--p", type=float, default=0.05)
    p.add_argument("--x-size", type=int, default=2)
    p.add_argument("--y-size", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="PREFIX", help="write PREFIX.graph/.x/.y (default: graph to stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="solve and verify the standard corpus, CSV report")
    p.add_argument("--random", type=int, default=500, help="number of random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle-cap", type=int, default=0, help="run oracles when n <= this")
    p.add_argument("--budget", type=float, help="oracle seconds per call")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="CSV file (default stdout)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantError as exc:
        print(f"internal invariant failed: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
