"""JSON reports. Key order is fixed by the field order below."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields

from .classify import Classification
from .model import DigitSet
from .oracle import Trace


@dataclass
class Report:
    input: str
    base: int
    dim: int
    digit_count: int
    m: int | None = None
    M: int | None = None
    M_prime: int | None = None
    verdict: str | None = None
    component_count: int | None = None
    lower_bound: int | None = None
    diagnostics: dict | None = None
    trace: list[int] | None = None
    trace_truncated: bool | None = None
    timings_ms: dict[str, float] | None = None
    digits: list[list[int]] | None = None
    violations: list[str] | None = None
    warnings: list[str] | None = None

    @classmethod
    def build(
        cls,
        descriptor: str,
        D: DigitSet,
        result: Classification | None = None,
        trace: Trace | None = None,
        timings: dict[str, float] | None = None,
        include_digits: bool = False,
    ) -> Report:
        rep = cls(descriptor, D.base, D.dim, len(D))
        if result is not None:
            rep.m, rep.M, rep.M_prime = result.m, result.M, result.M_prime
            rep.verdict = result.verdict.value
            rep.component_count = result.count
            rep.lower_bound = result.lower_bound
            rep.diagnostics = result.diagnostics.to_dict() if result.diagnostics else None
        if trace is not None:
            rep.trace = list(trace.counts)
            rep.trace_truncated = trace.truncated
        if timings is not None:
            rep.timings_ms = {k: round(v, 3) for k, v in timings.items()}
        if include_digits:
            rep.digits = [list(d) for d in D.ordered]
        return rep

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: dict) -> Report:
        names = {f.name for f in fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise ValueError(f"unknown report keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))
