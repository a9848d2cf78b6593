"""Disjoint-set forests and the labeled partitions built from them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Generic, Hashable, Iterable, Sequence, TypeVar

import numpy as np

T = TypeVar("T", bound=Hashable)


class DisjointSet(Generic[T]):
    """Union by size with path halving. Elements are registered up front."""

    def __init__(self, elements: Iterable[T] = ()):
        self._parent: dict[T, T] = {}
        self._size: dict[T, int] = {}
        for x in elements:
            self.add(x)

    def __len__(self) -> int:
        return len(self._parent)

    def __contains__(self, x: object) -> bool:
        return x in self._parent

    def add(self, x: T) -> None:
        if x not in self._parent:
            self._parent[x] = x
            self._size[x] = 1

    def find(self, x: T) -> T:
        parent = self._parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: T, y: T) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self._size[rx] < self._size[ry]:
            rx, ry = ry, rx
        self._parent[ry] = rx
        self._size[rx] += self._size[ry]
        return True

    def connected(self, x: T, y: T) -> bool:
        return self.find(x) == self.find(y)


def label_components(n: int, src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    """Root index of every node in ``range(n)`` given undirected edges.

    Array form of a disjoint-set forest: each round hooks every root onto
    the smallest root across its live edges, then compresses paths by
    pointer jumping. ``parent[x] <= x`` throughout, so no cycles form.
    The returned root of a component is its smallest node index.
    """
    parent = np.arange(n, dtype=np.int64)
    src = np.asarray(src, dtype=np.int64)
    dst = np.asarray(dst, dtype=np.int64)
    while src.size:
        ps, pd = parent[src], parent[dst]
        live = ps != pd
        if not live.any():
            break
        src, dst, ps, pd = src[live], dst[live], ps[live], pd[live]
        lo = np.minimum(ps, pd)
        hi = np.maximum(ps, pd)
        np.minimum.at(parent, hi, lo)
        while True:
            grand = parent[parent]
            if np.array_equal(grand, parent):
                break
            parent = grand
    return parent


@dataclass(frozen=True)
class ComponentDecomposition(Generic[T]):
    """A labeled partition of ``elements``.

    ``labels[k]`` is the component id of ``elements[k]``. Ids are canonical:
    numbered 0, 1, ... by first occurrence in ``elements`` order.
    """

    elements: tuple[T, ...]
    labels: tuple[int, ...]
    count: int

    @classmethod
    def from_roots(cls, elements: Sequence[T], roots: Sequence[Hashable]) -> ComponentDecomposition[T]:
        ids: dict[Hashable, int] = {}
        labels = []
        for r in roots:
            if r not in ids:
                ids[r] = len(ids)
            labels.append(ids[r])
        return cls(tuple(elements), tuple(labels), len(ids))

    @classmethod
    def from_disjoint_set(cls, elements: Sequence[T], dsu: DisjointSet[T]) -> ComponentDecomposition[T]:
        return cls.from_roots(elements, [dsu.find(x) for x in elements])

    @cached_property
    def label_of(self) -> dict[T, int]:
        return dict(zip(self.elements, self.labels))

    @cached_property
    def parts(self) -> tuple[tuple[T, ...], ...]:
        """Members of each component, by id, in element order."""
        groups: list[list[T]] = [[] for _ in range(self.count)]
        for x, lab in zip(self.elements, self.labels):
            groups[lab].append(x)
        return tuple(tuple(g) for g in groups)

    def as_sets(self) -> frozenset[frozenset[T]]:
        """The partition with ids forgotten, for order-free comparison."""
        return frozenset(frozenset(p) for p in self.parts)
