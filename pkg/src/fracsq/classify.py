"""Verdicts for fractal squares from the digit, level-1 and level-2 counts.

With m digit components, M level-1 components and M' level-2 components:
m = 1 means connected; M = m means exactly m components; otherwise in the
plane the attractor has finitely many components iff M' = M (then exactly
M), and uncountably many if not. In dimension >= 3 only the first two steps
are decisive.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .automaton import CellSet, OffsetAutomaton, build, cells_intersect
from .errors import ResourceLimitError
from .graphs import dstar, digit_components, level1_graph, level2_graph
from .limits import cell_limit
from .model import DigitSet, Vec, arrange_left_to_right, pillars, shape_predicates
from .unionfind import ComponentDecomposition


class Verdict(str, enum.Enum):
    CONNECTED = "connected"
    FINITE = "finite"
    UNCOUNTABLE = "uncountable"
    INCONCLUSIVE_HIGH_DIM = "inconclusive_high_dim"


@dataclass(frozen=True)
class Diagnostics:
    vertical_like: bool
    horizontal_like: bool
    prop32_infinite: bool
    min_pillar: int
    full_pillar_case: bool
    prop36_ok: tuple[bool, bool] | None = None

    def to_dict(self) -> dict:
        return {
            "vertical_like": self.vertical_like,
            "horizontal_like": self.horizontal_like,
            "prop32_infinite": self.prop32_infinite,
            "min_pillar": self.min_pillar,
            "full_pillar_case": self.full_pillar_case,
            "prop36_ok": list(self.prop36_ok) if self.prop36_ok is not None else None,
        }

    @classmethod
    def from_dict(cls, data: dict) -> Diagnostics:
        ok = data.get("prop36_ok")
        return cls(
            data["vertical_like"],
            data["horizontal_like"],
            data["prop32_infinite"],
            data["min_pillar"],
            data["full_pillar_case"],
            tuple(ok) if ok is not None else None,
        )


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    count: int | None
    m: int
    M: int | None = None
    M_prime: int | None = None
    diagnostics: Diagnostics | None = None
    lower_bound: int | None = None
    dstar_verified: bool | None = None
    notes: tuple[str, ...] = field(default=())

    def __str__(self) -> str:
        if self.verdict is Verdict.FINITE:
            return f"Finite({self.count})"
        return self.verdict.value


def check_prop_intersect(
    D: DigitSet, ordered: list[tuple[Vec, ...]], A: OffsetAutomaton
) -> tuple[bool, bool]:
    """Whether the leftmost and rightmost pieces each meet their own unit upward shift.

    At level-1 cell scale the shift by (0, 1) is a shift by (0, N).
    """
    if D.dim != 2 or len(ordered) < 2:
        raise ValueError("needs a planar digit set with at least two ordered components")
    up = (0, D.base)
    flags = []
    for comp in (ordered[0], ordered[-1]):
        cells = CellSet.of(D.base, 1, comp)
        flags.append(cells_intersect(A, cells, cells.translated(up)))
    return flags[0], flags[1]


def diagnostics(D: DigitSet, parts: ComponentDecomposition, A: OffsetAutomaton | None = None) -> Diagnostics:
    flags = shape_predicates(D, parts)
    disconnected = parts.count >= 2
    min_pillar = min(p.size for p in pillars(D))
    prop36 = None
    if disconnected and flags.vertical_like:
        if A is None:
            A = build(D)
        prop36 = check_prop_intersect(D, arrange_left_to_right(D, parts), A)
    return Diagnostics(
        vertical_like=flags.vertical_like,
        horizontal_like=flags.horizontal_like,
        prop32_infinite=disconnected and not flags.vertical_like and not flags.horizontal_like,
        min_pillar=min_pillar,
        full_pillar_case=disconnected and min_pillar == D.base,
        prop36_ok=prop36,
    )


def classify(
    D: DigitSet,
    *,
    exhaustive: bool = False,
    with_diagnostics: bool = True,
    verify_dstar: bool = True,
    limit: int | None = None,
) -> Classification:
    """Classify the attractor of D.

    The pipeline stops as soon as the verdict is decided. ``exhaustive``
    computes every count available for the dimension anyway, which the scan
    harness uses to check the ordering m <= M <= M'.
    """
    A = build(D)
    parts = digit_components(D, A)
    m = parts.count
    diag = diagnostics(D, parts, A) if with_diagnostics and D.dim == 2 else None
    notes: list[str] = []

    verdict: Verdict | None = None
    count: int | None = None
    if m == 1:
        verdict, count = Verdict.CONNECTED, 1
        if not exhaustive:
            return Classification(verdict, count, m, diagnostics=diag)

    g1, comps1 = level1_graph(D, parts, A)
    M = comps1.count
    if verdict is None and M == m:
        verdict, count = Verdict.FINITE, m
        if not exhaustive:
            return Classification(verdict, count, m, M, diagnostics=diag)

    if D.dim >= 3:
        if verdict is None:
            verdict = Verdict.INCONCLUSIVE_HIGH_DIM
            notes.append("finiteness beyond the level-1 test is undecided in dimension >= 3")
        return Classification(verdict, count, m, M, diagnostics=diag, lower_bound=max(m, M), notes=tuple(notes))

    # N D + D is the first structure that grows as |D|^2
    budget = cell_limit(limit)
    if len(D) ** 2 > budget:
        raise ResourceLimitError(len(D) ** 2, budget, "level-2 cell", module="classifier")
    star = dstar(D, g1, comps1, A, verify=verify_dstar)
    _, comps2 = level2_graph(D, star, A)
    M2 = comps2.count
    if verdict is None:
        if M2 == M:
            verdict, count = Verdict.FINITE, M
        else:
            verdict = Verdict.UNCOUNTABLE
    return Classification(
        verdict, count, m, M, M2, diagnostics=diag, dstar_verified=star.verified, notes=tuple(notes)
    )
