"""Command line front end: ``replpath {gen,ssrp,msrp,verify,bmm,bench}``.

Exit status is 0 on success, 1 on invalid input and 2 when ``verify`` finds a
mismatch.
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
from typing import Sequence

import numpy as np

from .bmm import boolean_multiply, format_matrix, parse_matrix
from .generators import KINDS, GenerationError, generate_graph
from .graph import INF, Graph, GraphError, load_graph
from .msrp import run_msrp
from .oracle import bfs_avoiding, verify_table
from .sampling import AlgoConfig
from .ssrp import run_ssrp
from .table import Counters, ReplacementTable

SEED_ENV = "REPLANEPATH_SEED"


class UsageError(ValueError):
    pass


def parse_seed(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise UsageError(f"seed must be decimal or 0x-hex, got {text!r}") from None
    if value < 0:
        raise UsageError("seed must be non-negative")
    return value


def resolve_seed(flag: str | None) -> int:
    if flag is not None:
        return parse_seed(flag)
    env = os.environ.get(SEED_ENV)
    return parse_seed(env) if env else 0


def parse_sources(text: str, n: int) -> list[int]:
    try:
        out = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"--sources must be comma-separated integers, got {text!r}") from None
    if not out:
        raise UsageError("--sources is empty")
    bad = [s for s in out if not 0 <= s < n]
    if bad:
        raise UsageError(f"sources out of range for n={n}: {bad}")
    return sorted(set(out))


def pick_sources(args: argparse.Namespace, g: Graph, seed: int) -> list[int]:
    if args.sources is not None and args.sigma is not None:
        raise UsageError("give either --sources or --sigma, not both")
    if args.sources is not None:
        return parse_sources(args.sources, g.n)
    sigma = args.sigma if args.sigma is not None else 1
    if not 1 <= sigma <= g.n:
        raise UsageError(f"--sigma must lie in [1, {g.n}]")
    rng = np.random.default_rng([seed, 7])
    return sorted(rng.choice(g.n, size=sigma, replace=False).tolist())


def read_graph(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            return load_graph(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read graph: {exc}") from None


def make_config(args: argparse.Namespace, seed: int) -> AlgoConfig:
    override = getattr(args, "override_near_threshold", None)
    try:
        return AlgoConfig(seed=seed, threshold_override=override)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _ssrp_job(payload: tuple[Graph, int, AlgoConfig]) -> tuple[ReplacementTable, Counters]:
    g, s, cfg = payload
    c = Counters()
    return run_ssrp(g, s, cfg, c), c


def ssrp_all(g: Graph, sources: Sequence[int], cfg: AlgoConfig, parallel: int, counters: Counters) -> ReplacementTable:
    """One independent single-source run per source, optionally in worker processes."""
    table = ReplacementTable(g)
    jobs = [(g, s, cfg) for s in sources]
    if parallel > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            results = list(pool.map(_ssrp_job, jobs))
    else:
        results = [_ssrp_job(j) for j in jobs]
    for part, c in results:
        table.absorb(part)
        counters.merge(c)
    return table


def table_records(g: Graph, table: ReplacementTable) -> list[dict]:
    out = []
    for s, t, eid, d in table.records():
        u, v = g.edge(eid)
        out.append({"source": s, "target": t, "edge": [u, v], "dist": None if d >= INF else d})
    return out


def render(records: list[dict], fmt: str) -> str:
    if fmt == "json":
        if not records:
            return "[]\n"
        return "[\n" + ",\n".join(json.dumps(r) for r in records) + "\n]\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["source", "target", "u", "v", "dist"])
    for r in records:
        w.writerow([r["source"], r["target"], r["edge"][0], r["edge"][1], "" if r["dist"] is None else r["dist"]])
    return buf.getvalue()


def emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def load_records(path: str) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        rows = list(csv.DictReader(io.StringIO(text)))
        try:
            return [
                {
                    "source": int(r["source"]),
                    "target": int(r["target"]),
                    "edge": [int(r["u"]), int(r["v"])],
                    "dist": None if r["dist"] == "" else int(r["dist"]),
                }
                for r in rows
            ]
        except (KeyError, ValueError, TypeError):
            raise UsageError(f"{path}: neither JSON records nor CSV with source,target,u,v,dist") from None
    if not isinstance(data, list):
        raise UsageError(f"{path}: expected a JSON list of records")
    return data


def table_from_records(g: Graph, records: list[dict]) -> tuple[ReplacementTable, list[int]]:
    from .graph import bfs_tree

    table = ReplacementTable(g)
    sources = sorted({int(r["source"]) for r in records})
    for s in sources:
        if not 0 <= s < g.n:
            raise UsageError(f"record source {s} out of range")
        table.add_source(bfs_tree(g, s))
    for r in records:
        try:
            s, t = int(r["source"]), int(r["target"])
            u, v = (int(x) for x in r["edge"])
            eid = g.edge_id(u, v)
            table.set(s, t, eid, INF if r["dist"] is None else int(r["dist"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"bad record {r!r}: {exc}") from None
    return table, sources


def cmd_gen(args: argparse.Namespace) -> int:
    seed = resolve_seed(args.seed)
    params = {"n": args.n, "p": args.p, "m": args.m, "w": args.w, "h": args.h, "chords": args.chords}
    needed = {
        "erdos-renyi": ["n"] + (["m"] if args.m is not None else ["p"]),
        "cycle": ["n"],
        "path": ["n"],
        "grid": ["w", "h"],
        "path-plus-chords": ["n", "chords"],
    }[args.kind]
    missing = [k for k in needed if params[k] is None]
    if missing:
        raise UsageError(f"{args.kind} needs --{' --'.join(missing)}")
    try:
        g = generate_graph(args.kind, params, seed)
    except GenerationError as exc:
        raise UsageError(str(exc)) from None
    emit(g.to_text(), args.out)
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    seed = resolve_seed(args.seed)
    cfg = make_config(args, seed)
    sources = pick_sources(args, g, seed)
    counters = Counters()
    if args.command == "ssrp":
        table = ssrp_all(g, sources, cfg, args.parallel, counters)
    else:
        table = run_msrp(g, sources, cfg, counters)
    emit(render(table_records(g, table), args.format), args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    seed = resolve_seed(args.seed)
    cfg = make_config(args, seed)
    if args.results:
        table, sources = table_from_records(g, load_records(args.results))
        if args.sources is not None or args.sigma is not None:
            sources = pick_sources(args, g, seed)
    else:
        sources = pick_sources(args, g, seed)
        table = run_msrp(g, sources, cfg)
    report = verify_table(g, sources, table, cfg)
    doc = {
        "checked": report.checked,
        "mismatches": [m.as_dict() for m in report.mismatches],
        "missing": [{"source": s, "target": t, "edge": list(g.edge(e))} for s, t, e in report.missing],
    }
    emit(json.dumps(doc, indent=1) + "\n", args.out)
    return 0 if report.ok else 2


def cmd_bmm(args: argparse.Namespace) -> int:
    try:
        with open(args.a, encoding="utf-8") as fh:
            A = parse_matrix(fh.read())
        with open(args.b, encoding="utf-8") as fh:
            B = parse_matrix(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read matrix: {exc}") from None
    if A.shape != B.shape:
        raise UsageError("matrices differ in size")
    sigma = args.sigma if args.sigma is not None else 1
    if sigma < 1:
        raise UsageError("--sigma must be positive")
    cfg = make_config(args, resolve_seed(args.seed))
    emit(format_matrix(boolean_multiply(A, B, sigma, cfg)), args.out)
    return 0


def naive_baseline(g: Graph, sources: Sequence[int]) -> tuple[float, int]:
    """Wall time and BFS count of one BFS per (source, path edge)."""
    from .graph import bfs_tree

    start = time.perf_counter()
    runs = 0
    for s in sources:
        tree = bfs_tree(g, s)
        used = set()
        for t in tree.bfs_order[1:].tolist():
            b = t
            while b != s and b not in used:
                used.add(b)
                b = int(tree.parent[b])
        for b in sorted(used):
            bfs_avoiding(g, s, g.edge_id(int(tree.parent[b]), b))
            runs += 1
    return time.perf_counter() - start, runs


def cmd_bench(args: argparse.Namespace) -> int:
    seed = resolve_seed(args.seed)
    if args.graph:
        g = read_graph(args.graph)
    else:
        if args.n is None:
            raise UsageError("bench needs --graph or --n (with --m or --p)")
        params = {"n": args.n, "p": args.p if args.p is not None else 8.0 / args.n, "m": args.m}
        try:
            g = generate_graph("erdos-renyi", params, seed)
        except GenerationError as exc:
            raise UsageError(str(exc)) from None
    cfg = make_config(args, seed)
    sources = pick_sources(args, g, seed)
    counters = Counters()
    start = time.perf_counter()
    if args.algo == "ssrp":
        table = ssrp_all(g, sources, cfg, args.parallel, counters)
    else:
        table = run_msrp(g, sources, cfg, counters)
    elapsed = time.perf_counter() - start
    far = counters.far_work_by_target
    doc = {
        "n": g.n,
        "m": g.m,
        "sigma": len(sources),
        "algo": args.algo,
        "seconds": round(elapsed, 4),
        "triples": len(table),
        "counters": counters.as_dict(),
        "max_far_work_per_target": max(far.values(), default=0),
    }
    if args.baseline:
        secs, runs = naive_baseline(g, sources)
        doc["baseline_seconds"] = round(secs, 4)
        doc["baseline_bfs_runs"] = runs
    emit(json.dumps(doc, indent=1) + "\n", args.out)
    return 0


def _common(p: argparse.ArgumentParser, sources: bool = True) -> None:
    p.add_argument("--seed", help=f"RNG seed, decimal or 0x-hex (default ${SEED_ENV} or 0)")
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--override-near-threshold", type=float, dest="override_near_threshold",
                   help="fixed near/far boundary in hops (testing aid)")
    if sources:
        p.add_argument("--sources", help='comma-separated source ids, e.g. "0,5,9"')
        p.add_argument("--sigma", type=int, help="number of random sources")
        p.add_argument("--parallel", type=int, default=1, help="worker processes for per-source fan-out")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="replpath", description="Replacement paths in undirected unweighted graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph as an edge list")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--m", type=int, help="exact edge count for erdos-renyi")
    p.add_argument("--w", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--chords", type=int)
    _common(p, sources=False)
    p.set_defaults(func=cmd_gen)

    for name, text in (("ssrp", "single-source runs, one per source"), ("msrp", "multi-source run")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--graph", required=True)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        _common(p)
        p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check results against brute force")
    p.add_argument("--graph", required=True)
    p.add_argument("--results", help="JSON or CSV records to check (default: run msrp)")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bmm", help="Boolean matrix product via the reduction")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--sigma", type=int, default=1)
    _common(p, sources=False)
    p.set_defaults(func=cmd_bmm)

    p = sub.add_parser("bench", help="time a run and report work counters")
    p.add_argument("--graph")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--algo", choices=("ssrp", "msrp"), default="ssrp")
    p.add_argument("--baseline", action="store_true", help="also time one BFS per path edge")
    _common(p)
    p.set_defaults(func=cmd_bench)
    return parser


def run_command(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    if getattr(args, "parallel", 1) is not None and getattr(args, "parallel", 1) < 1:
        print("error: --parallel must be >= 1", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except (UsageError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command())
