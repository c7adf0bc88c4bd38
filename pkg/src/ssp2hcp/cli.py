"""Command-line front end.

Decision commands exit 10 for YES / Hamiltonian / valid and 20 for NO;
1 means bad usage or input, 2 an exhausted search budget, 3 a roundtrip
disagreement between the two oracles.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .reduction import build_graph, expected_counts
from .simplify import DecidedNo, DecidedYes, Reduced, SimpleForm, simplify
from .solver import DEFAULT_BUDGET, Status, find_hamiltonian_cycle, verify_cycle
from .ssp import (
    brute_force_ssp,
    check_partition,
    format_ssp,
    format_ssp_json,
    generate_random_instance,
    load_ssp,
)
from .witness import TraceFailure, cycle_from_partition, extract_partition

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BUDGET = 2
EXIT_DISAGREE = 3
EXIT_YES = 10
EXIT_NO = 20


class UsageError(Exception):
    pass


def _read(path: str | None, what: str) -> str:
    if path is None:
        raise UsageError(f"missing {what}")
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


class _Ctx:
    def __init__(self, args):
        self.args = args

    def say(self, msg: str):
        if not self.args.quiet:
            print(msg)

    def instance(self):
        return load_ssp(_read(self.args.input, "--in instance"))

    def simple_form(self, inst) -> SimpleForm:
        """Simple form used for graph commands; UsageError if simplification decides it."""
        if self.args.no_simplify:
            try:
                return SimpleForm.from_instance(inst)
            except ValueError as exc:
                raise UsageError(f"--no-simplify: {exc}") from None
        result = simplify(inst)
        if isinstance(result, Reduced):
            return result.simple
        verdict = "YES" if isinstance(result, DecidedYes) else "NO"
        raise UsageError(f"simplification already decides this instance ({verdict}); no graph to build")


def cmd_simplify(ctx: _Ctx) -> int:
    inst = ctx.instance()
    result = simplify(inst)
    if isinstance(result, DecidedNo):
        where = f" (subset {result.subset_index})" if result.subset_index else ""
        ctx.say(f"NO: {result.rule}{where}")
        return EXIT_NO
    if isinstance(result, DecidedYes):
        ctx.say(f"YES: {result.reason}")
        _write(ctx.args.out, formats.write_partition(result.witness))
        return EXIT_YES
    simple = result.simple
    ctx.say(
        f"REDUCED: u={simple.instance.u} s={simple.instance.s} c={simple.instance.c}"
        f" dropped={list(simple.dropped_subsets)}"
    )
    _write(ctx.args.out, format_ssp(simple.instance))
    return EXIT_OK


def cmd_convert(ctx: _Ctx) -> int:
    art = build_graph(ctx.simple_form(ctx.instance()))
    _write(ctx.args.out, formats.write_edge_list(art))
    if ctx.args.labels:
        _write(ctx.args.labels, formats.write_labels(art))
    if ctx.args.dot:
        _write(ctx.args.dot, formats.write_dot(art))
    return EXIT_OK


def cmd_solve_ssp(ctx: _Ctx) -> int:
    p = brute_force_ssp(ctx.instance())
    if p is None:
        ctx.say("NO")
        return EXIT_NO
    ctx.say("YES")
    _write(ctx.args.out, formats.write_partition(p))
    return EXIT_YES


def cmd_solve_hcp(ctx: _Ctx) -> int:
    g = formats.read_edge_list(_read(ctx.args.input, "--in graph"))
    outcome = find_hamiltonian_cycle(g, ctx.args.budget)
    if outcome.status is Status.INDETERMINATE:
        ctx.say(f"UNKNOWN: budget of {ctx.args.budget} expansions exhausted")
        return EXIT_BUDGET
    if outcome.status is Status.NON_HAMILTONIAN:
        ctx.say("NO")
        return EXIT_NO
    ctx.say("YES")
    _write(ctx.args.out, formats.write_cycle(outcome.cycle))
    return EXIT_YES


def cmd_extract(ctx: _Ctx) -> int:
    simple = ctx.simple_form(ctx.instance())
    art = build_graph(simple)
    cyc = formats.read_cycle(_read(ctx.args.cycle, "--cycle"))
    p = extract_partition(art, cyc)
    _write(ctx.args.out, formats.write_partition(simple.lift(p)))
    return EXIT_OK


def cmd_trace(ctx: _Ctx) -> int:
    inst = ctx.instance()
    simple = ctx.simple_form(inst)
    art = build_graph(simple)
    p = formats.read_partition(_read(ctx.args.partition, "--partition"), inst.u)
    try:
        cyc = cycle_from_partition(art, simple.restrict(p))
    except TraceFailure as exc:
        original = simple.kept_subsets[exc.subset_index - 1]
        ctx.say(f"FAIL: subset {original} ({exc.detail})")
        return EXIT_NO
    _write(ctx.args.out, formats.write_cycle(cyc))
    if ctx.args.dot:
        opts = formats.RenderOptions(highlight=cyc, stage_split=True)
        _write(ctx.args.dot, formats.write_dot(art, opts))
    return EXIT_YES


def cmd_verify(ctx: _Ctx) -> int:
    args = ctx.args
    if args.partition:
        inst = ctx.instance()
        report = check_partition(inst, formats.read_partition(_read(args.partition, "--partition"), inst.u))
        if report.is_solution:
            ctx.say("VALID")
            return EXIT_YES
        detail = f"unsplit={list(report.unsplit)}"
        if report.side_empty is not None:
            detail += f" empty side {int(report.side_empty)}"
        ctx.say(f"INVALID: {detail}")
        return EXIT_NO
    if args.cycle:
        g = formats.read_edge_list(_read(args.graph, "--graph"))
        ok = verify_cycle(g, formats.read_cycle(_read(args.cycle, "--cycle")))
        ctx.say("VALID" if ok else "INVALID")
        return EXIT_YES if ok else EXIT_NO
    raise UsageError("verify needs --partition (with --in) or --cycle (with --graph)")


def cmd_roundtrip(ctx: _Ctx) -> int:
    inst = ctx.instance()
    direct = brute_force_ssp(inst)
    direct_yes = direct is not None
    ctx.say(f"brute force: {'YES' if direct_yes else 'NO'}")

    result = simplify(inst)
    if not isinstance(result, Reduced):
        pipeline_yes = isinstance(result, DecidedYes)
        ctx.say(f"simplify: decided {'YES' if pipeline_yes else 'NO'}")
        if pipeline_yes and not check_partition(inst, result.witness).is_solution:
            ctx.say("DISAGREE: simplification witness does not split the instance")
            return EXIT_DISAGREE
    else:
        simple = result.simple
        art = build_graph(simple)
        outcome = find_hamiltonian_cycle(art.graph, ctx.args.budget)
        if outcome.status is Status.INDETERMINATE:
            ctx.say("hcp: budget exhausted")
            return EXIT_BUDGET
        pipeline_yes = outcome.hamiltonian
        ctx.say(f"hcp: {'Hamiltonian' if pipeline_yes else 'non-Hamiltonian'} "
                f"(V={art.graph.n} E={art.graph.m}, {outcome.stats.expansions} expansions)")
        if pipeline_yes and direct_yes:
            problems = _cross_check(art, simple, inst, outcome.cycle, direct)
            for msg in problems:
                ctx.say(f"DISAGREE: {msg}")
            if problems:
                return EXIT_DISAGREE
            ctx.say("witnesses: consistent")

    if pipeline_yes != direct_yes:
        ctx.say("DISAGREE: decisions differ")
        return EXIT_DISAGREE
    ctx.say("AGREE: " + ("YES" if direct_yes else "NO"))
    return EXIT_YES if direct_yes else EXIT_NO


def _cross_check(art, simple, inst, cycle, direct) -> list[str]:
    problems = []
    found = extract_partition(art, cycle)
    if not check_partition(simple.instance, found).is_solution:
        problems.append("partition extracted from the solver's cycle does not split the simple form")
    if not check_partition(inst, simple.lift(found)).is_solution:
        problems.append("lifted partition does not split the original instance")
    q = simple.restrict(direct)
    try:
        traced = cycle_from_partition(art, q)
    except TraceFailure as exc:
        problems.append(f"brute-force solution could not be traced: {exc}")
    else:
        if extract_partition(art, traced) != q:
            problems.append("extract(trace(p)) != p")
    return problems


def cmd_gen(ctx: _Ctx) -> int:
    args = ctx.args
    inst = generate_random_instance(args.u, args.s, (args.min_size, args.max_size), args.seed)
    _write(args.out, format_ssp_json(inst) if args.json else format_ssp(inst))
    return EXIT_OK


def cmd_stats(ctx: _Ctx) -> int:
    simple = ctx.simple_form(ctx.instance())
    inst = simple.instance
    art = build_graph(simple)
    n, m = expected_counts(inst.u, inst.s, inst.c)
    ok = (art.graph.n, art.graph.m) == (n, m)
    print(f"u={inst.u} s={inst.s} c={inst.c} V={art.graph.n} E={art.graph.m} "
          f"formulas={'ok' if ok else 'MISMATCH'}")
    return EXIT_OK if ok else EXIT_ERROR


COMMANDS = {
    "simplify": cmd_simplify,
    "convert": cmd_convert,
    "solve-ssp": cmd_solve_ssp,
    "solve-hcp": cmd_solve_hcp,
    "extract": cmd_extract,
    "trace": cmd_trace,
    "verify": cmd_verify,
    "roundtrip": cmd_roundtrip,
    "gen": cmd_gen,
    "stats": cmd_stats,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", help="input file ('-' for stdin)")
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("--quiet", action="store_true", help="suppress the report on stdout")
    common.add_argument("--no-simplify", action="store_true",
                        help="use the instance verbatim; it must already be in simple form")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")

    parser = argparse.ArgumentParser(prog="ssp2hcp", description="Set splitting to directed HCP toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("simplify", parents=[common], help="apply the reduction rules")
    p = sub.add_parser("convert", parents=[common], help="build the HCP graph")
    p.add_argument("--labels", help="write the vertex label map here")
    p.add_argument("--dot", help="write a DOT rendering here")
    sub.add_parser("solve-ssp", parents=[common], help="brute-force the SSP instance")
    sub.add_parser("solve-hcp", parents=[common], help="search an edge-list graph for a Hamiltonian cycle")
    p = sub.add_parser("extract", parents=[common], help="partition from a cycle of the converted graph")
    p.add_argument("--cycle", required=True)
    p = sub.add_parser("trace", parents=[common], help="cycle of the converted graph from a partition")
    p.add_argument("--partition", required=True)
    p.add_argument("--dot", help="write a DOT rendering with the cycle highlighted")
    p = sub.add_parser("verify", parents=[common], help="check a partition or a cycle")
    p.add_argument("--partition")
    p.add_argument("--cycle")
    p.add_argument("--graph")
    sub.add_parser("roundtrip", parents=[common], help="run both oracles and cross-check witnesses")
    p = sub.add_parser("gen", parents=[common], help="random instance")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--min-size", type=int, default=2)
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="emit JSON instead of the text format")
    sub.add_parser("stats", parents=[common], help="sizes of the instance and its graph")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](_Ctx(args))
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
