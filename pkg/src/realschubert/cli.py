"""Command-line interface: ``realschubert <command> ...``.

Exit codes: 0 success, 1 invalid input, 2 solver deficit (fewer classes than
the Kostka number), 3 a self-check failed.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .combinatorics import as_content, enumerate_ssyt, kostka
from .errors import RealSchubertError
from .nets import bijection_report, nets_with_tableaux

EXIT_OK, EXIT_INVALID, EXIT_DEFICIT, EXIT_CHECK_FAILED = 0, 1, 2, 3

CONFIG_SCHEMA = """\
config file schema (JSON):
  {"d": 3,
   "blocks": [[{"x": 0.0, "m": 1}, {"x": 0.1, "m": 1}],
              [{"x": 1.0, "m": 1}, {"x": 1.1, "m": 1}], ...],
   "non_generic": false}
  Each block is a list of real points x with multiplicity m (default 1);
  block j contributes a_j = (sum of m) - 1, and the a_j must satisfy
  1 <= a_j <= d-1 and sum a_j = 2d-2. A single point with m = a+1 prescribes
  a critical point of multiplicity a. Points shared between blocks require
  "non_generic": true.
"""


def _load_config(path: str):
    from .solver import ProblemConfig

    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return ProblemConfig.from_json(json.loads(text))


def _emit(obj, out: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def cmd_kostka(args) -> int:
    print(kostka(as_content(args.content)))
    return EXIT_OK


def cmd_ssyt(args) -> int:
    for tab in enumerate_ssyt(as_content(args.content)):
        print(tab)
    return EXIT_OK


def cmd_nets(args) -> int:
    for net, tab in nets_with_tableaux(as_content(args.content)):
        print(f"{net} -> {tab}")
    return EXIT_OK


def cmd_bijection_check(args) -> int:
    rows = bijection_report(args.max_d)
    ok = all(r["ok"] for r in rows)
    _emit({"max_d": args.max_d, "contents": len(rows), "ok": ok,
           "failures": [r for r in rows if not r["ok"]]}, args.out)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_check_separated(args) -> int:
    from .solver import is_separated, separation_margin

    cfg = _load_config(args.config)
    _emit({"separated": is_separated(cfg), "margin": separation_margin(cfg),
           "content": list(cfg.content)}, args.out)
    return EXIT_OK


def cmd_solve(args) -> int:
    from .solver import SolverParams, solve_problem1

    cfg = _load_config(args.config)
    params = SolverParams(seed=args.seed, starts_budget=args.starts, newton_tol=args.tol,
                          dedup_tol=args.dedup, max_iter=args.max_iter)
    sol = solve_problem1(cfg, params)
    report = {"config": cfg.to_json(), "params": params.to_json(), **sol.to_json()}
    _emit(report, args.out)
    return EXIT_DEFICIT if sol.deficit else EXIT_OK


def cmd_experiment(args) -> int:
    from .harness import ExperimentSpec, run_experiment
    from .solver import SolverParams

    content = as_content(args.content)
    d = args.d if args.d is not None else content.d
    spec = ExperimentSpec(d=d, content=content, trials=args.trials, seed=args.seed,
                          mode=args.mode, params=SolverParams(starts_budget=args.starts),
                          overlap_amount=args.amount)
    report = run_experiment(spec)
    text = report.dumps(include_timestamp=not args.no_timestamp)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .acceptance import CHECKS

    ok = True
    for check in CHECKS:
        result = check()
        print(result.line(), flush=True)
        if not result.passed:
            ok = False
            print("    " + json.dumps(result.details, default=str)[:2000])
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realschubert",
        description="Kostka numbers, nets, and real rational functions constant on blocks of points.",
        epilog=CONFIG_SCHEMA, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kostka", help="count SSYT of shape 2 x (d-1) with the given content")
    p.add_argument("--content", required=True, help="comma separated multiplicities, e.g. 1,1,1,1")
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("ssyt", help="list the tableaux, one per line as [row1 | row2]")
    p.add_argument("--content", required=True)
    p.set_defaults(func=cmd_ssyt)

    p = sub.add_parser("nets", help="list admissible nets with their tableaux")
    p.add_argument("--content", required=True)
    p.set_defaults(func=cmd_nets)

    p = sub.add_parser("bijection-check", help="round-trip nets <-> tableaux for all contents")
    p.add_argument("--max-d", type=int, default=6)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bijection_check)

    p = sub.add_parser("check-separated", help="report whether the blocks of a config are separated",
                       epilog=CONFIG_SCHEMA, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--config", required=True, help="config JSON file, or - for stdin")
    p.add_argument("--out")
    p.set_defaults(func=cmd_check_separated)

    p = sub.add_parser("solve", help="find all classes for a config",
                       epilog=CONFIG_SCHEMA, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--config", required=True, help="config JSON file, or - for stdin")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--starts", type=int, default=None, help="start budget (default 200 * Kostka number)")
    p.add_argument("--tol", type=float, default=1e-10, help="relative Newton tolerance")
    p.add_argument("--dedup", type=float, default=1e-6, help="Pluecker key distance for duplicates")
    p.add_argument("--max-iter", type=int, default=200)
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("experiment", help="solve many random configs and aggregate reality statistics")
    p.add_argument("--d", type=int)
    p.add_argument("--content", required=True)
    p.add_argument("--mode", choices=("separated", "overlapping", "sweep"), default="separated")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--starts", type=int, default=None)
    p.add_argument("--amount", type=float, default=1.0, help="overlap shift for overlapping mode")
    p.add_argument("--no-timestamp", action="store_true", help="omit the timestamp for byte-stable output")
    p.add_argument("--out")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (RealSchubertError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
