"""Command-line verification harness.

    qct-verify <statement-id ...|all> [grid flags] [--report human|structured]
               [--cache-dir PATH] [--no-cache] [--opt-dehomogenize] [--seed N]

Exit status: 0 when nothing failed, 1 when a proved statement was refuted,
2 when only conjecture mismatches occurred, 3 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from .cache import Cache, set_active_cache
from .reports import emit_report
from .suites import REGISTRY, SuiteContext, all_statements, run_suite


def _int_list(text: str):
    return [int(x) for x in text.split(",") if x.strip()]


def _shape_list(text: str):
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if chunk:
            out.append(tuple(int(x) for x in chunk.split(",")))
    return out


def _kappa_list(text: str):
    return [chunk.strip() for chunk in text.split(";") if chunk.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qct-verify",
        description="Exact verification suites for the q-deformed weight "
                    "function identities.",
        epilog="Statements: " + ", ".join(all_statements()) + ", all")
    parser.add_argument("statements", nargs="+",
                        help="statement ids to run, or 'all'")
    parser.add_argument("--report", choices=["human", "structured"],
                        default="human")
    parser.add_argument("--seed", type=int, default=20260810,
                        help="seed for the random spot evaluations")
    parser.add_argument("--cache-dir", default=".qct-cache",
                        help="directory for cached expansions")
    parser.add_argument("--no-cache", action="store_true",
                        help="disable the expansion cache")
    parser.add_argument("--opt-dehomogenize", action="store_true",
                        help="enable the degree-0 variable elimination")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker processes for grid points")
    grid = parser.add_argument_group("grid overrides")
    grid.add_argument("--lam", type=_int_list, help="comma list, e.g. 1,2")
    grid.add_argument("--n0", type=_int_list)
    grid.add_argument("--n1", type=_int_list)
    grid.add_argument("--n", type=_int_list)
    grid.add_argument("--a", type=_int_list)
    grid.add_argument("--b", type=_int_list)
    grid.add_argument("--r", type=_int_list)
    grid.add_argument("--p", type=_int_list)
    grid.add_argument("--k", type=_int_list)
    grid.add_argument("--weights", type=_int_list,
                      help="partition weights to enumerate")
    grid.add_argument("--kappa", type=_kappa_list,
                      help="semicolon list of partitions: '2,1;1,1,1' or '2 1^2'")
    grid.add_argument("--shape", type=_shape_list,
                      help="semicolon list of (n0,n1) pairs: '1,1;2,1'")
    grid.add_argument("--sizes", type=_shape_list,
                      help="semicolon list of block-size tuples: '2,1,1'")
    grid.add_argument("--mode", type=_kappa_list)
    return parser


def _worker(args):
    statement, params, ctx = args
    suite = REGISTRY[statement]
    return suite.run_point(params, ctx)


def main(argv=None) -> int:
    parser = build_parser()
    opts = parser.parse_args(argv)

    names = opts.statements
    if "all" in names:
        names = all_statements()
    unknown = [s for s in names if s not in REGISTRY]
    if unknown:
        parser.error(f"unknown statement ids: {', '.join(unknown)}")
        return 3

    set_active_cache(Cache(None if opts.no_cache else opts.cache_dir))
    ctx = SuiteContext(seed=opts.seed, dehomogenize=opts.opt_dehomogenize)
    overrides = {k: getattr(opts, k) for k in
                 ("lam", "n0", "n1", "n", "a", "b", "r", "p", "k", "weights",
                  "kappa", "shape", "sizes", "mode")}

    reports = []
    for statement in names:
        suite = REGISTRY[statement]
        grid = dict(suite.default_grid)
        for k, v in overrides.items():
            if v is not None and k in grid:
                grid[k] = v
        points = suite.points(grid)
        if opts.jobs > 1:
            with ProcessPoolExecutor(max_workers=opts.jobs) as pool:
                reports.extend(pool.map(
                    _worker, [(statement, p, ctx) for p in points]))
        else:
            for p in points:
                reports.append(suite.run_point(p, ctx))

    sys.stdout.write(emit_report(reports, opts.report))
    if any(r.verdict == "refuted" for r in reports):
        return 1
    if any(r.verdict == "mismatch-reported" for r in reports):
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
