"""Digit components, the level-1 and level-2 graphs, and the refined digit set.

Both graphs share one construction. Given a partition ``P_1..P_n`` of a
level-``k`` digit set into connected pieces, the vertex ``(d, j)`` stands for
the copy ``N^k d + P_j`` at level ``k+1``. Level 1 uses the digit components;
level 2 uses the components of ``N D + D``.
"""

from __future__ import annotations

import colorsys
import itertools
from dataclasses import dataclass
from typing import Sequence

from .automaton import CellSet, OffsetAutomaton, build, unit_offsets
from .errors import InternalConsistencyError
from .model import DigitSet, Vec, row_major_key
from .unionfind import ComponentDecomposition, DisjointSet

Vertex = tuple[Vec, int]


def _add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def _positive(v: Vec) -> bool:
    return v > (0,) * len(v)


def digit_components(D: DigitSet, A: OffsetAutomaton | None = None) -> ComponentDecomposition[Vec]:
    """Components of D where digits are adjacent when their copies of F meet.

    ``A`` may come from any digit set generating the same attractor, for
    instance the original set when ``D`` is a rescaled one.
    """
    if A is None:
        A = build(D)
    if A.dim != D.dim:
        raise ValueError(f"automaton dim {A.dim} does not match digit set dim {D.dim}")
    forward = [w for w in A.alive_offsets if _positive(w)]
    dsu = DisjointSet(D.ordered)
    digits = D.digits
    for d in D.ordered:
        for w in forward:
            e = _add(d, w)
            if e in digits:
                dsu.union(d, e)
    return ComponentDecomposition.from_disjoint_set(D.ordered, dsu)


@dataclass(frozen=True)
class LevelGraph:
    level: int
    base: int
    digits: tuple[Vec, ...]
    inner: tuple[tuple[Vec, ...], ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        """Number of indices per digit (m at level 1, M at level 2)."""
        return len(self.inner)

    @property
    def vertices(self) -> list[Vertex]:
        """``(digit, index)`` with 1-based index, digit-major."""
        return [(d, j + 1) for d in self.digits for j in range(self.width)]

    def vertex_id(self, v: Vertex) -> int:
        d, j = v
        return self.digits.index(d) * self.width + (j - 1)

    def cells(self, v: Vertex) -> CellSet:
        d, j = v
        scale = self.base**self.level
        shift = tuple(scale * c for c in d)
        return CellSet.of(self.base, self.level + 1, (_add(shift, c) for c in self.inner[j - 1]))


@dataclass(frozen=True)
class DStarDecomposition:
    base: int
    parts: tuple[tuple[Vec, ...], ...]
    verified: bool

    @property
    def count(self) -> int:
        return len(self.parts)


def _pair_table(label: dict[Vec, int], scale: int, A: OffsetAutomaton) -> dict[Vec, set[tuple[int, int]]]:
    """For each unit offset u, the index pairs (j1, j2) with
    ``P_j1 ∩ (P_j2 + u) != ∅`` as unions of F-copies at cell scale ``scale``.

    A copy at cell ``a`` meets one at ``c + scale*u`` iff the difference is an
    alive offset, so only cells on the matching faces can see across.
    """
    dim = A.dim
    table: dict[Vec, set[tuple[int, int]]] = {u: set() for u in unit_offsets(dim)}
    alive = A.alive_offsets
    top = scale - 1
    for a, j1 in label.items():
        choices = [(0, 1) if c == top else (0, -1) if c == 0 else (0,) for c in a]
        for u in itertools.product(*choices):
            back = tuple(c - scale * s for c, s in zip(a, u))
            hits = table[u]
            for w in alive:
                j2 = label.get(_add(back, w))
                if j2 is not None:
                    hits.add((j1, j2))
    for j1, j2 in table[(0,) * dim]:
        if j1 != j2:
            raise InternalConsistencyError(f"pieces {j1} and {j2} of a component partition touch")
    return table


def _build_level_graph(
    D: DigitSet, inner: Sequence[Sequence[Vec]], level: int, A: OffsetAutomaton
) -> tuple[LevelGraph, ComponentDecomposition[Vertex]]:
    n = len(inner)
    label = {c: j for j, part in enumerate(inner) for c in part}
    table = _pair_table(label, D.base**level, A)
    index = D.index
    edges = set()
    for u, pairs in table.items():
        if not pairs or not _positive(u):
            continue
        for k1, d1 in enumerate(D.ordered):
            k2 = index.get(_add(d1, u))
            if k2 is None:
                continue
            for j1, j2 in pairs:
                a, b = k1 * n + j1, k2 * n + j2
                edges.add((a, b) if a < b else (b, a))
    graph = LevelGraph(level, D.base, D.ordered, tuple(tuple(p) for p in inner), tuple(sorted(edges)))
    dsu = DisjointSet(range(len(D) * n))
    for a, b in graph.edges:
        dsu.union(a, b)
    roots = [dsu.find(k) for k in range(len(D) * n)]
    return graph, ComponentDecomposition.from_roots(graph.vertices, roots)


def level1_graph(
    D: DigitSet, parts: ComponentDecomposition[Vec], A: OffsetAutomaton
) -> tuple[LevelGraph, ComponentDecomposition[Vertex]]:
    return _build_level_graph(D, parts.parts, 1, A)


def level2_graph(
    D: DigitSet, star: DStarDecomposition, A: OffsetAutomaton
) -> tuple[LevelGraph, ComponentDecomposition[Vertex]]:
    return _build_level_graph(D, star.parts, 2, A)


def dstar(
    D: DigitSet,
    graph: LevelGraph,
    level1parts: ComponentDecomposition[Vertex],
    A: OffsetAutomaton,
    verify: bool = True,
) -> DStarDecomposition:
    """Components of ``N D + D`` read off the level-1 graph.

    Component j of the graph contributes ``N d + D_i`` for each of its
    vertices ``(d, i)``. With ``verify`` the result is checked against an
    independent component count of ``N D + D`` over base ``N^2``.
    """
    parts = []
    for comp in level1parts.parts:
        cells: set[Vec] = set()
        for v in comp:
            cells |= graph.cells(v).cells
        parts.append(tuple(sorted(cells, key=row_major_key)))
    if verify:
        union = frozenset(c for p in parts for c in p)
        if len(union) != len(D) ** 2:
            raise InternalConsistencyError(f"N D + D has {len(union)} cells, expected {len(D) ** 2}")
        direct = digit_components(DigitSet(D.base**2, D.dim, union), A)
        if direct.as_sets() != frozenset(frozenset(p) for p in parts):
            raise InternalConsistencyError(
                f"level-1 graph gives {len(parts)} components of N D + D, direct count gives {direct.count}"
            )
    return DStarDecomposition(D.base**2, tuple(parts), verify)


# --------------------------------------------------------------------------
# DOT export


def vertex_name(v: Vertex) -> str:
    d, j = v
    return "d" + "_".join(str(c) for c in d) + f"__i{j}"


def component_color(k: int) -> str:
    hue = (k * 0.618033988749895) % 1.0
    r, g, b = colorsys.hsv_to_rgb(hue, 0.55, 0.95)
    return "#{:02x}{:02x}{:02x}".format(round(r * 255), round(g * 255), round(b * 255))


def to_dot(g: LevelGraph, parts: ComponentDecomposition[Vertex]) -> str:
    name = "G_F" if g.level == 1 else "G2_F"
    lines = [
        f"graph {name} {{",
        f'  label="level-{g.level} graph: {len(parts.elements)} vertices, {parts.count} components";',
        "  node [style=filled shape=ellipse fontname=Helvetica];",
    ]
    for k, comp in enumerate(parts.parts):
        color = component_color(k)
        lines.append(f"  // component {k + 1}")
        for v in comp:
            lines.append(f'  {vertex_name(v)} [fillcolor="{color}" comment="component {k + 1}"];')
    verts = g.vertices
    for a, b in g.edges:
        lines.append(f"  {vertex_name(verts[a])} -- {vertex_name(verts[b])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
