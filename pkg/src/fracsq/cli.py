"""Command-line entry point: ``fracsq <command> ...``."""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .automaton import build
from .classify import classify
from .errors import FracsqError, PatternError, ResourceLimitError
from .graphs import dstar, digit_components, level1_graph, level2_graph, to_dot
from .model import BUILTIN_NAMES, DigitSet, builtin, generate_exact_m, parse_pattern, serialize_pattern
from .oracle import component_trace
from .render import render_pgm
from .report import Report
from .scan import run_scan


def load(spec: str) -> DigitSet:
    """A pattern path, ``builtin:<name>``, or a bare builtin name."""
    if spec.startswith("builtin:"):
        return builtin(spec[len("builtin:"):])
    path = Path(spec)
    if path.exists():
        return parse_pattern(path.read_text())
    try:
        return builtin(spec)
    except FracsqError:
        raise FracsqError(f"no such pattern file or builtin: {spec!r}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise FracsqError(f"cannot write {path}: {exc.strerror}") from None


def _print_human(rep: Report) -> None:
    out = [f"input: {rep.input}", f"base {rep.base}, dim {rep.dim}, {rep.digit_count} digits"]
    if rep.verdict is not None:
        counts = f"m={rep.m} M={_dash(rep.M)} M'={_dash(rep.M_prime)}"
        verdict = rep.verdict
        if rep.component_count is not None:
            verdict += f" ({rep.component_count} component{'s' if rep.component_count != 1 else ''})"
        if rep.lower_bound is not None:
            verdict += f" (at least {rep.lower_bound} components)"
        out += [f"verdict: {verdict}", counts]
    if rep.diagnostics:
        out.append("diagnostics: " + ", ".join(f"{k}={v}" for k, v in rep.diagnostics.items()))
    if rep.trace is not None:
        out.append(f"trace #C(Q_n), n=1..: {rep.trace}" + (" (truncated)" if rep.trace_truncated else ""))
    if rep.warnings:
        out += [f"warning: {w}" for w in rep.warnings]
    if rep.timings_ms:
        out.append("timings (ms): " + ", ".join(f"{k}={v}" for k, v in rep.timings_ms.items()))
    print("\n".join(out))


def _dash(x):
    return "-" if x is None else x


def cmd_classify(args) -> int:
    D = load(args.pattern)
    timings = {}
    t0 = time.perf_counter()
    result = classify(D, with_diagnostics=not args.no_diagnostics)
    timings["classify"] = (time.perf_counter() - t0) * 1000
    trace = None
    if args.trace:
        t0 = time.perf_counter()
        trace = component_trace(D, args.trace)
        timings["trace"] = (time.perf_counter() - t0) * 1000
    rep = Report.build(args.pattern, D, result, trace, timings if args.timings else None)
    if trace is not None and result.count is not None:
        if any(c > result.count for c in trace.counts):
            raise FracsqError(f"grid oracle trace {list(trace.counts)} exceeds {result.count}")
        if trace.counts and trace.counts[-1] < result.count and not trace.truncated:
            rep.warnings = [f"trace has not reached {result.count} by level {len(trace.counts)}"]
    _emit(rep, args.json)
    return 0


def cmd_oracle(args) -> int:
    D = load(args.pattern)
    t0 = time.perf_counter()
    trace = component_trace(D, args.trace)
    timings = {"trace": (time.perf_counter() - t0) * 1000}
    rep = Report.build(args.pattern, D, None, trace, timings if args.timings else None)
    rep.m = digit_components(D).count
    _emit(rep, args.json)
    return 0


def _emit(rep: Report, as_json: bool) -> None:
    if as_json:
        print(rep.to_json(indent=2))
    else:
        _print_human(rep)


def cmd_render(args) -> int:
    D = load(args.pattern)
    _write(args.out, render_pgm(D, args.level))
    return 0


def cmd_graph(args) -> int:
    D = load(args.pattern)
    A = build(D)
    parts = digit_components(D, A)
    graph, comps = level1_graph(D, parts, A)
    if args.level == 2:
        star = dstar(D, graph, comps, A)
        graph, comps = level2_graph(D, star, A)
    _write(args.out, to_dot(graph, comps))
    return 0


def cmd_generate(args) -> int:
    D = generate_exact_m(args.components)
    text = serialize_pattern(D, comment=f"exact-m construction, m = {args.components}")
    if parse_pattern(text) != D:
        raise FracsqError("generated pattern does not round-trip")
    _write(args.out, text)
    return 0


def cmd_builtin(args) -> int:
    if args.name is None:
        print("\n".join(BUILTIN_NAMES))
        return 0
    _write(args.out, serialize_pattern(builtin(args.name), comment=f"builtin {args.name}"))
    return 0


def cmd_scan(args) -> int:
    if args.out in (None, "-"):
        summary = run_scan(args.base, args.dim, args.oracle_depth, sys.stdout,
                           sample=args.sample, seed=args.seed, jobs=args.jobs)
    else:
        with open(args.out, "w", newline="\n") as fh:
            summary = run_scan(args.base, args.dim, args.oracle_depth, fh,
                               sample=args.sample, seed=args.seed, jobs=args.jobs)
        print(f"{summary['records']} records, verdicts {summary['verdicts']}, "
              f"{summary['violations']} violations -> {args.out}")
    if summary["truncated"]:
        return 130
    return 0 if summary["violations"] == 0 else 1


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fracsq", description="Count the connected components of fractal squares.")
    sub = p.add_subparsers(dest="command", required=True)

    def pattern(sp):
        sp.add_argument("pattern", help="pattern file, or builtin name (carpet, two_pillars, exact_m(5), ...)")

    sp = sub.add_parser("classify", help="decide connected / finitely many / uncountably many components")
    pattern(sp)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--trace", type=int, default=0, metavar="N", help="also count components of Q_1..Q_N")
    sp.add_argument("--no-diagnostics", action="store_true")
    sp.add_argument("--timings", action="store_true", help="include wall-clock timings in the report")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("oracle", help="component counts of Q_1..Q_N only, no graphs")
    pattern(sp)
    sp.add_argument("--trace", type=int, default=4, metavar="N")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--timings", action="store_true")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("render", help="write Q_n as a plain PGM image")
    pattern(sp)
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("graph", help="write the level-1 or level-2 graph as DOT")
    pattern(sp)
    sp.add_argument("--level", type=int, choices=(1, 2), default=1)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("generate", help="write the exact-m construction as a pattern")
    sp.add_argument("--components", type=int, required=True, metavar="M")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("scan", help="classify every digit set of a small base (JSON lines)")
    sp.add_argument("--base", type=int, required=True)
    sp.add_argument("--dim", type=int, default=2, choices=(2, 3))
    sp.add_argument("--oracle-depth", type=int, default=6)
    sp.add_argument("--out", default="-")
    sp.add_argument("--sample", type=int, help="random sample size instead of exhaustive")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("builtin", help="print a named fixture as a pattern (no name: list them)")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_builtin)
    return p


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except PatternError as exc:
        print(f"error {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error {exc}", file=sys.stderr)
        return 3
    except FracsqError as exc:
        print(f"error {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
