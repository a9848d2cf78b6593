"""Exhaustive (or seeded random) sweep over small digit sets.

Every record is classified with all counts computed, traced with the grid
oracle, and checked against the invariants that must hold for any digit set.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import IO, Iterable, Iterator

from .classify import Classification, Verdict, classify
from .errors import FracsqError, InternalConsistencyError
from .model import DigitSet, full_box
from .oracle import Trace, component_trace
from .report import Report

EXHAUSTIVE_MAX_CELLS = 9


def enumerate_digit_sets(base: int, dim: int = 2) -> Iterator[tuple[int, DigitSet]]:
    """All nonempty subsets of the box, by bitmask over row-major cell order."""
    box = full_box(base, dim)
    for mask in range(1, 1 << len(box)):
        yield mask, DigitSet(base, dim, frozenset(c for b, c in enumerate(box) if mask >> b & 1))


def sample_digit_sets(base: int, dim: int, count: int, seed: int) -> Iterator[tuple[int, DigitSet]]:
    box = full_box(base, dim)
    rng = random.Random(seed)
    for _ in range(count):
        mask = 0
        while mask == 0:
            mask = rng.getrandbits(len(box))
        yield mask, DigitSet(base, dim, frozenset(c for b, c in enumerate(box) if mask >> b & 1))


def check_invariants(result: Classification, trace: Trace | None) -> tuple[list[str], list[str]]:
    """Hard violations and soft warnings for one classified digit set."""
    bad, soft = [], []
    counts = [c for c in (result.m, result.M, result.M_prime) if c is not None]
    if counts != sorted(counts):
        bad.append(f"chain: m={result.m} M={result.M} M'={result.M_prime} not non-decreasing")
    if result.verdict is Verdict.CONNECTED and result.m != 1:
        bad.append("connected verdict with m != 1")
    if result.verdict is Verdict.FINITE and result.M_prime is not None and not (result.count == result.M == result.M_prime):
        bad.append(f"finite({result.count}) but M={result.M} M'={result.M_prime}")
    if trace is not None:
        t = list(trace.counts)
        if t != sorted(t):
            bad.append(f"trace not monotone: {t}")
        if result.count is not None and result.verdict in (Verdict.CONNECTED, Verdict.FINITE):
            k = result.count
            if any(c > k for c in t):
                bad.append(f"trace {t} exceeds component count {k}")
            elif t and not trace.truncated and t[-1] < k:
                soft.append(f"trace {t} has not reached {k} by level {len(t)}")
    diag = result.diagnostics
    if diag is not None:
        if diag.prop32_infinite and result.verdict is not Verdict.UNCOUNTABLE:
            bad.append("neither vertical- nor horizontal-like but not uncountable")
        if diag.full_pillar_case and result.verdict is not Verdict.UNCOUNTABLE:
            bad.append("all pillars full with m >= 2 but not uncountable")
        if result.verdict is Verdict.FINITE and result.m >= 2 and diag.vertical_like and diag.prop36_ok != (True, True):
            bad.append(f"finite vertical-like set fails the self-stacking check: {diag.prop36_ok}")
    if result.dstar_verified is False and result.M_prime is not None:
        bad.append("N D + D partition not cross-checked")
    return bad, soft


def scan_one(item: tuple[str, DigitSet, int, int | None]) -> dict:
    descriptor, D, depth, limit = item
    violations: list[str] = []
    try:
        result = classify(D, exhaustive=True, limit=limit)
    except InternalConsistencyError as exc:
        rep = Report.build(descriptor, D, include_digits=True)
        rep.violations = [f"dstar: {exc}"]
        return rep.to_dict()
    trace = component_trace(D, depth, limit) if depth > 0 else None
    violations, warnings = check_invariants(result, trace)
    rep = Report.build(descriptor, D, result, trace, include_digits=True)
    rep.violations = violations
    rep.warnings = warnings
    return rep.to_dict()


def run_scan(
    base: int,
    dim: int,
    depth: int,
    out: IO[str],
    *,
    sample: int | None = None,
    seed: int | None = None,
    jobs: int = 1,
    limit: int | None = None,
) -> dict:
    """Stream one JSON line per digit set, then a summary line; return the summary."""
    if sample is None:
        if base**dim > EXHAUSTIVE_MAX_CELLS:
            raise FracsqError(f"exhaustive scan needs base**dim <= {EXHAUSTIVE_MAX_CELLS}; pass --sample and --seed")
        sets: Iterable[tuple[int, DigitSet]] = enumerate_digit_sets(base, dim)
    else:
        if seed is None:
            raise FracsqError("sampling requires an explicit seed")
        sets = sample_digit_sets(base, dim, sample, seed)
    items = ((f"scan:base={base}:dim={dim}:mask={mask}", D, depth, limit) for mask, D in sets)

    verdicts: Counter[str] = Counter()
    records = violations = warnings = 0
    truncated = False
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        results = pool.map(scan_one, items, chunksize=8) if pool else map(scan_one, items)
        for rec in results:
            out.write(json.dumps(rec) + "\n")
            records += 1
            verdicts[str(rec["verdict"])] += 1
            violations += len(rec["violations"] or ())
            warnings += len(rec["warnings"] or ())
    except KeyboardInterrupt:
        truncated = True
    finally:
        if pool:
            pool.shutdown(cancel_futures=True)
    summary = {
        "summary": {
            "base": base,
            "dim": dim,
            "oracle_depth": depth,
            "records": records,
            "verdicts": dict(sorted(verdicts.items())),
            "violations": violations,
            "warnings": warnings,
            "truncated": truncated,
        }
    }
    out.write(json.dumps(summary) + "\n")
    out.flush()
    return summary["summary"]
