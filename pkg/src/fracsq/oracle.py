"""Brute-force component counts of the iterates Q_n.

Q_n is materialized as its level-n cells; two closed cells meet iff their
Chebyshev distance is at most 1, so components are taken under 8-adjacency
in 2D and 26-adjacency in 3D.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import ResourceLimitError
from .limits import cell_limit
from .model import DigitSet
from .unionfind import label_components


@dataclass(frozen=True, eq=False)
class GridSet:
    """Cells of Q_n as sorted flat keys ``sum(coord[k] * side**k)``, side = base**level."""

    base: int
    dim: int
    level: int
    keys: np.ndarray = field(repr=False)

    @property
    def side(self) -> int:
        return self.base**self.level

    def __len__(self) -> int:
        return int(self.keys.size)

    def coords(self) -> np.ndarray:
        out = np.empty((self.keys.size, self.dim), dtype=np.int64)
        rest = self.keys.copy()
        for k in range(self.dim):
            out[:, k] = rest % self.side
            rest //= self.side
        return out

    @property
    def cells(self) -> set[tuple[int, ...]]:
        return {tuple(int(c) for c in row) for row in self.coords()}


def encode(coords: np.ndarray, side: int) -> np.ndarray:
    keys = np.zeros(coords.shape[0], dtype=np.int64)
    for k in range(coords.shape[1] - 1, -1, -1):
        keys = keys * side + coords[:, k]
    return keys


def iterate(D: DigitSet, n: int, limit: int | None = None) -> GridSet:
    """Level-n cells ``N^{n-1} d_1 + ... + d_n`` of Q_n."""
    if n < 1:
        raise ValueError(f"level must be >= 1, got {n}")
    budget = cell_limit(limit)
    need = len(D) ** n
    if need > budget:
        raise ResourceLimitError(need, budget)
    digits = np.array(D.ordered, dtype=np.int64)
    coords = digits
    for _ in range(n - 1):
        coords = (coords[:, None, :] * D.base + digits[None, :, :]).reshape(-1, D.dim)
    side = D.base**n
    return GridSet(D.base, D.dim, n, np.sort(encode(coords, side)))


def _forward_offsets(dim: int) -> list[tuple[int, ...]]:
    zero = (0,) * dim
    return [v for v in itertools.product((-1, 0, 1), repeat=dim) if v > zero]


def count_components(g: GridSet) -> int:
    if len(g) == 0:
        return 0
    coords = g.coords()
    side = g.side
    src, dst = [], []
    for off in _forward_offsets(g.dim):
        nb = coords + np.array(off, dtype=np.int64)
        inside = np.all((nb >= 0) & (nb < side), axis=1)
        idx = np.nonzero(inside)[0]
        nkeys = encode(nb[idx], side)
        pos = np.searchsorted(g.keys, nkeys)
        pos[pos == g.keys.size] = 0
        hit = g.keys[pos] == nkeys
        src.append(idx[hit])
        dst.append(pos[hit])
    roots = label_components(len(g), np.concatenate(src), np.concatenate(dst))
    return int(np.unique(roots).size)


@dataclass(frozen=True)
class Trace:
    """Component counts of Q_1..Q_k; ``truncated`` when the budget stopped it early."""

    counts: tuple[int, ...]
    requested: int
    truncated: bool = False
    required: int | None = None


def component_trace(D: DigitSet, n_max: int, limit: int | None = None) -> Trace:
    counts = []
    for n in range(1, n_max + 1):
        try:
            g = iterate(D, n, limit)
        except ResourceLimitError as exc:
            return Trace(tuple(counts), n_max, truncated=True, required=exc.required)
        counts.append(count_components(g))
    return Trace(tuple(counts), n_max)
