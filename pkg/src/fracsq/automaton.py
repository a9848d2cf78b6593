"""Exact test for ``F ∩ (F + v) != ∅`` at integer offsets ``v``.

Since ``F`` lies in the unit cube, only offsets with ``|v|_inf <= 1`` can
meet. Writing ``x = (x' + e)/N`` and ``x - v = (y' + d)/N`` with ``x', y'``
in ``F`` turns a witness at offset ``v`` into one at ``N v + e - d``. So
``v`` is realizable iff an infinite walk starts at ``v`` in the graph of
these moves restricted to ``|.|_inf <= 1``; the alive states are the
greatest set in which every state keeps a successor.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .model import DigitSet, Vec


def unit_offsets(dim: int) -> list[Vec]:
    """All integer vectors with sup-norm <= 1, zero included."""
    return list(itertools.product((-1, 0, 1), repeat=dim))


def _norm(v: Vec) -> int:
    return max(abs(c) for c in v)


@dataclass(frozen=True)
class OffsetAutomaton:
    base: int
    dim: int
    transitions: Mapping[Vec, frozenset[Vec]]
    alive: frozenset[Vec]

    @property
    def states(self) -> list[Vec]:
        return list(self.transitions)

    @property
    def alive_offsets(self) -> tuple[Vec, ...]:
        """Alive states in a fixed order, for neighbor enumeration."""
        return tuple(v for v in self.transitions if v in self.alive)


def _difference_hits(D: DigitSet, candidates: Iterable[Vec]) -> set[Vec]:
    """The candidates ``delta`` for which some ``d, d + delta`` both lie in D."""
    N = D.base
    grid = np.zeros((N,) * D.dim, dtype=bool)
    grid[tuple(np.array(D.ordered).T)] = True
    hits = set()
    for delta in candidates:
        if any(abs(c) >= N for c in delta):
            continue
        src = tuple(slice(max(0, -c), N - max(0, c)) for c in delta)
        dst = tuple(slice(max(0, c), N - max(0, -c)) for c in delta)
        if np.any(grid[src] & grid[dst]):
            hits.add(delta)
    return hits


def build(D: DigitSet) -> OffsetAutomaton:
    N, dim = D.base, D.dim
    states = unit_offsets(dim)
    # A move v -> w uses delta = w - N v; only these can land back in range.
    candidates = {tuple(w[k] - N * v[k] for k in range(dim)) for v in states for w in states}
    deltas = _difference_hits(D, candidates)
    transitions = {}
    for v in states:
        succ = set()
        for w in states:
            if tuple(w[k] - N * v[k] for k in range(dim)) in deltas:
                succ.add(w)
        transitions[v] = frozenset(succ)

    alive = set(states)
    changed = True
    while changed:
        dead = {v for v in alive if not (transitions[v] & alive)}
        alive -= dead
        changed = bool(dead)
    return OffsetAutomaton(N, dim, transitions, frozenset(alive))


def nonempty(A: OffsetAutomaton, v: Vec) -> bool:
    """Whether ``F ∩ (F + v)`` is nonempty."""
    v = tuple(v)
    if len(v) != A.dim:
        raise ValueError(f"offset {v} has dimension {len(v)}, automaton has {A.dim}")
    return _norm(v) <= 1 and v in A.alive


@dataclass(frozen=True)
class CellSet:
    """Union of level-``level`` copies of F: ``(c + F) / base**level`` over ``cells``."""

    base: int
    level: int
    cells: frozenset[Vec]

    @classmethod
    def of(cls, base: int, level: int, cells: Iterable[Vec]) -> CellSet:
        return cls(base, level, frozenset(tuple(c) for c in cells))

    def translated(self, t: Vec) -> CellSet:
        return CellSet(self.base, self.level, frozenset(tuple(a + b for a, b in zip(c, t)) for c in self.cells))


def cells_intersect(A: OffsetAutomaton, S: CellSet, T: CellSet) -> bool:
    """Whether the two unions of F-copies meet.

    Copies at cells ``a`` and ``b`` meet iff ``b - a`` is an alive offset, so
    each cell of the smaller side probes the other side at its alive
    neighbours only.
    """
    if S.level != T.level or S.base != T.base:
        raise ValueError(f"cell sets differ: base/level {S.base}/{S.level} vs {T.base}/{T.level}")
    if len(S.cells) > len(T.cells):
        S, T = T, S
        offsets = [tuple(-c for c in w) for w in A.alive_offsets]
    else:
        offsets = list(A.alive_offsets)
    target = T.cells
    for a in S.cells:
        for w in offsets:
            if tuple(x + y for x, y in zip(a, w)) in target:
                return True
    return False
