"""Command-line entry point: ``cubepaths solve | verify | campaign``.

Exit codes: 0 success, 1 parse or usage error, 2 theorem hypothesis
violated, 3 verification failure, 4 solver budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path as FsPath

from .campaign import check_campaign, enumerate_check
from .errors import BudgetExceeded, CubePathsError, PreconditionViolation
from .files import ParseError, dumps, read_instance, read_paths, result_to_dict, write_instance
from .router import route
from .solvers import SolverBudget
from .verify import verify

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_HYPOTHESIS = 2
EXIT_VERIFY = 3
EXIT_BUDGET = 4

log = logging.getLogger("cubepaths")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _budget(args) -> SolverBudget:
    kw = {}
    if args.node_limit is not None:
        kw["node_limit"] = args.node_limit
    if args.max_base_dim is not None:
        kw["max_dimension"] = args.max_base_dim
    return SolverBudget(**kw)


def _emit(text: str, output) -> None:
    if output:
        FsPath(output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    inst = read_instance(args.input)
    problems = inst.hypothesis_violations()
    if problems:
        print("hypothesis violated: " + "; ".join(problems), file=sys.stderr)
        return EXIT_HYPOTHESIS
    try:
        paths, trace = route(inst, _budget(args))
    except PreconditionViolation as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CubePathsError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    doc = result_to_dict(inst, paths, trace.tags)
    _emit(dumps(doc), args.output)
    return EXIT_OK if doc["verified"] else EXIT_VERIFY


def cmd_verify(args) -> int:
    inst = read_instance(args.input)
    paths = read_paths(args.result, inst.n)
    rep = verify(inst, paths)
    print(json.dumps(rep.as_dict(), indent=2))
    return EXIT_OK if rep.passed else EXIT_VERIFY


def cmd_campaign(args) -> int:
    try:
        check_campaign(args.n, args.k, args.mode, args.samples, args.workers)
        budget = _budget(args)
    except ValueError as exc:
        print(f"invalid campaign parameters: {exc}", file=sys.stderr)
        return EXIT_PARSE

    def progress(s):
        if s.instances % args.progress_every == 0:
            print(
                f"[{s.instances}] passed={s.passed} fallback={s.fallback_used}",
                file=sys.stderr,
                flush=True,
            )

    summary = enumerate_check(
        args.n, args.k, args.mode, args.samples, args.seed, args.workers, budget,
        progress=progress if args.progress_every > 0 else None,
    )
    _emit(dumps(summary.as_dict()), args.output)
    print(
        f"{summary.instances} instances, {summary.failed} failed, "
        f"fallback rate {summary.fallback_rate:.4f}, {summary.runtime:.1f}s",
        file=sys.stderr,
    )
    if summary.counterexample is not None:
        where = args.counterexample or (
            f"{args.output}.counterexample.json" if args.output else "counterexample.json"
        )
        write_instance(where, summary.counterexample)
        print(f"counterexample written to {where}: {summary.error}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cubepaths", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def budget_flags(p):
        p.add_argument("--node-limit", type=int, default=None, help="search node cap per solver call")
        p.add_argument("--max-base-dim", type=int, default=None, help="largest cube handed to exact search")

    p = sub.add_parser("solve", help="route one instance file")
    p.add_argument("--input", required=True, help="instance JSON")
    p.add_argument("--output", help="result JSON (default: stdout)")
    budget_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a result file against its instance")
    p.add_argument("--input", required=True, help="instance JSON")
    p.add_argument("--result", required=True, help="result JSON with a 'paths' field")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("campaign", help="route and verify many generated instances")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "randomized"], default="randomized")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", help="summary JSON (default: stdout)")
    p.add_argument("--counterexample", help="where to write a failing instance")
    p.add_argument("--progress-every", type=int, default=1000, help="0 disables progress lines")
    budget_flags(p)
    p.set_defaults(func=cmd_campaign)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"cannot read or write file: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"invalid argument: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
