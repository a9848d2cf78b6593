"""Digit sets, the pattern file format, and the built-in fixtures.

Coordinates are ``(x, y)`` or ``(x, y, z)`` with the origin at the
bottom-left; a digit ``d`` in base ``N`` stands for the cube ``(d + [0,1]^dim)/N``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import CoordinateOverflowError, DigitSetError, PatternError, ResourceLimitError
from .limits import MAX_BASE, cell_limit
from .unionfind import ComponentDecomposition

Vec = tuple[int, ...]


def row_major_key(v: Vec) -> Vec:
    """Sort key: last coordinate slowest, so 2D digits go row by row from the bottom."""
    return v[::-1]


@dataclass(frozen=True)
class DigitSet:
    base: int
    dim: int
    digits: frozenset[Vec]

    def __post_init__(self):
        if self.base < 2:
            raise DigitSetError(f"base must be >= 2, got {self.base}")
        if self.base > MAX_BASE:
            raise CoordinateOverflowError(f"base {self.base} exceeds the supported maximum {MAX_BASE}")
        if self.dim < 2:
            raise DigitSetError(f"dim must be >= 2, got {self.dim}")
        if not self.digits:
            raise DigitSetError("empty digit set")
        for d in self.digits:
            if len(d) != self.dim:
                raise DigitSetError(f"digit {d} does not have dimension {self.dim}")
            if any(not 0 <= c < self.base for c in d):
                raise DigitSetError(f"digit {d} has a coordinate outside [0, {self.base - 1}]")

    @classmethod
    def of(cls, base: int, digits: Iterable[Sequence[int]], dim: int | None = None) -> DigitSet:
        digits = frozenset(tuple(int(c) for c in d) for d in digits)
        if dim is None:
            if not digits:
                raise DigitSetError("empty digit set")
            dim = len(next(iter(digits)))
        return cls(base, dim, digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __contains__(self, d: object) -> bool:
        return d in self.digits

    @cached_property
    def ordered(self) -> tuple[Vec, ...]:
        """Digits in canonical row-major order."""
        return tuple(sorted(self.digits, key=row_major_key))

    @cached_property
    def index(self) -> dict[Vec, int]:
        return {d: k for k, d in enumerate(self.ordered)}


@dataclass(frozen=True)
class Cell:
    """The cube ``(coords + [0,1]^dim) / base**level``."""

    base: int
    level: int
    coords: Vec

    def __post_init__(self):
        side = self.base**self.level
        if self.level < 1 or any(not 0 <= c < side for c in self.coords):
            raise DigitSetError(f"cell {self.coords} out of range for level {self.level}")


@dataclass(frozen=True)
class Pillar:
    """Maximal vertical run of digits ``(x, bottom) .. (x, top)``."""

    x: int
    bottom: int
    top: int

    @property
    def size(self) -> int:
        return self.top - self.bottom + 1

    @property
    def digits(self) -> tuple[Vec, ...]:
        return tuple((self.x, y) for y in range(self.bottom, self.top + 1))


@dataclass(frozen=True)
class ShapeFlags:
    vertical: tuple[bool, ...]
    horizontal: tuple[bool, ...]

    @property
    def vertical_like(self) -> bool:
        return all(self.vertical)

    @property
    def horizontal_like(self) -> bool:
        return all(self.horizontal)


# --------------------------------------------------------------------------
# pattern format

HEADER = "fracsq v1"


def parse_pattern(text: str) -> DigitSet:
    """Parse a ``fracsq v1`` pattern document."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise PatternError(f"expected header {HEADER!r}", 1)
    body = [(no, line.rstrip("\r")) for no, line in enumerate(lines[1:], start=2) if not line.startswith("%")]

    def keyword(pos: int, name: str, allowed=None) -> int:
        if pos >= len(body):
            raise PatternError(f"missing '{name}' line", len(lines) + 1)
        no, line = body[pos]
        m = re.fullmatch(rf"{name}\s+(\d+)\s*", line)
        if not m:
            raise PatternError(f"expected '{name} <integer>', got {line!r}", no)
        value = int(m.group(1))
        if allowed is not None and value not in allowed:
            raise PatternError(f"unsupported {name} {value}", no)
        return value

    dim = keyword(0, "dim", (2, 3))
    base = keyword(1, "base")
    if base < 2:
        raise PatternError(f"base must be >= 2, got {base}", body[1][0])
    grid = body[2:]
    # trailing blank lines are tolerated
    while grid and grid[-1][1].strip() == "":
        grid.pop()

    if dim == 2:
        blocks = [grid]
    else:
        blocks, current = [], []
        for no, line in grid:
            if line == "":
                if not current:
                    raise PatternError("blocks must be separated by exactly one blank line", no)
                blocks.append(current)
                current = []
            else:
                current.append((no, line))
        blocks.append(current)
        if len(blocks) != base:
            where = grid[-1][0] if grid else body[-1][0]
            raise PatternError(f"expected {base} blocks, found {len(blocks)}", where)

    digits = []
    for b, block in enumerate(blocks):
        if len(block) != base:
            where = block[-1][0] + 1 if block else (grid[-1][0] if grid else body[-1][0]) + 1
            raise PatternError(f"expected {base} grid lines, found {len(block)}", where)
        z = base - 1 - b
        for r, (no, line) in enumerate(block):
            if len(line) != base:
                raise PatternError(f"expected {base} characters, found {len(line)}", no)
            y = base - 1 - r
            for x, ch in enumerate(line):
                if ch == "#":
                    digits.append((x, y) if dim == 2 else (x, y, z))
                elif ch != ".":
                    raise PatternError(f"illegal character {ch!r} in column {x + 1}", no)
    if not digits:
        raise PatternError("empty digit set", grid[-1][0] if grid else None)
    return DigitSet(base, dim, frozenset(digits))


def serialize_pattern(D: DigitSet, comment: str | None = None) -> str:
    if D.dim not in (2, 3):
        raise DigitSetError("the pattern format supports dim 2 and 3 only")
    N = D.base
    out = [HEADER]
    if comment:
        out.extend(f"% {line}" for line in comment.splitlines())
    out += [f"dim {D.dim}", f"base {N}"]
    zs = [None] if D.dim == 2 else list(range(N - 1, -1, -1))
    for k, z in enumerate(zs):
        if k:
            out.append("")
        for y in range(N - 1, -1, -1):
            row = ((x, y) if z is None else (x, y, z) for x in range(N))
            out.append("".join("#" if d in D.digits else "." for d in row))
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# transformations and predicates


def rescale(D: DigitSet, k: int, limit: int | None = None) -> DigitSet:
    """Digit set ``N^{k-1} D + ... + D`` over base ``N^k``; it generates the same attractor."""
    if k < 1:
        raise DigitSetError(f"rescale needs k >= 1, got {k}")
    if k == 1:
        return D
    base = D.base**k
    if base > MAX_BASE:
        raise CoordinateOverflowError(f"base {D.base}^{k} = {base} exceeds {MAX_BASE}")
    size = len(D) ** k
    budget = cell_limit(limit)
    if size > budget:
        raise ResourceLimitError(size, budget, "digit", module="core_model")
    current = list(D.digits)
    for _ in range(k - 1):
        current = [tuple(D.base * a + b for a, b in zip(c, d)) for c in current for d in D.digits]
    return DigitSet(base, D.dim, frozenset(current))


def pillars(D: DigitSet) -> list[Pillar]:
    if D.dim != 2:
        raise DigitSetError("pillars are defined for dim 2 only")
    columns: dict[int, list[int]] = {}
    for x, y in D.digits:
        columns.setdefault(x, []).append(y)
    out = []
    for x in sorted(columns):
        ys = sorted(columns[x])
        start = prev = ys[0]
        for y in ys[1:]:
            if y != prev + 1:
                out.append(Pillar(x, start, prev))
                start = y
            prev = y
        out.append(Pillar(x, start, prev))
    return out


def shape_predicates(D: DigitSet, parts: ComponentDecomposition) -> ShapeFlags:
    """Which components touch both the bottom and top rows (vertical) or the
    left and right columns (horizontal)."""
    if D.dim != 2:
        raise DigitSetError("shape predicates are defined for dim 2 only")
    top = D.base - 1
    vertical, horizontal = [], []
    for comp in parts.parts:
        ys = {d[1] for d in comp}
        xs = {d[0] for d in comp}
        vertical.append(0 in ys and top in ys)
        horizontal.append(0 in xs and top in xs)
    return ShapeFlags(tuple(vertical), tuple(horizontal))


def arrange_left_to_right(D: DigitSet, parts: ComponentDecomposition) -> list[tuple[Vec, ...]]:
    """Vertical-like components ordered left to right.

    Each such component meets every row, and in every row all of its digits
    lie strictly left of the next component's; both facts are checked.
    """
    flags = shape_predicates(D, parts)
    if not flags.vertical_like:
        raise DigitSetError("arrange_left_to_right requires every component to be vertical-like")
    ordered = sorted(parts.parts, key=lambda comp: (min(d[0] for d in comp), row_major_key(min(comp, key=row_major_key))))
    for left, right in zip(ordered, ordered[1:]):
        for y in range(D.base):
            lx = [d[0] for d in left if d[1] == y]
            rx = [d[0] for d in right if d[1] == y]
            if not lx or not rx or max(lx) >= min(rx):
                raise DigitSetError(f"components are not separated left to right in row {y}")
    return ordered


# --------------------------------------------------------------------------
# generators and fixtures


def exact_m_parts(m: int) -> tuple[frozenset[Vec], list[frozenset[Vec]]]:
    """The bar set B and the translated staircase copies A + (km, 0), k < m."""
    if m < 5:
        raise DigitSetError(f"the exact-m construction is stated for m >= 5, got {m}")
    A = {(i, j) for i in range(m) for j in range(i * m, (i + 1) * m)}
    B = frozenset(p for j in range(2 * m, m * m) for p in ((0, j), (m * m - 1, m * m - 1 - j)))
    copies = [frozenset((x + k * m, y) for x, y in A) for k in range(m)]
    return B, copies


def generate_exact_m(m: int) -> DigitSet:
    """Digit set over base m^2 whose attractor has exactly m components."""
    B, copies = exact_m_parts(m)
    return DigitSet(m * m, 2, B.union(*copies))


def _example21_like() -> DigitSet:
    left = {(0, i) for i in range(5)} | {(1, 3), (1, 4), (2, 3), (2, 4)}
    right = {(4 - x, 4 - y) for x, y in left}
    return DigitSet(5, 2, frozenset(left | right))


_FIXTURES = {
    "carpet": lambda: DigitSet(3, 2, frozenset((x, y) for x in range(3) for y in range(3) if (x, y) != (1, 1))),
    "two_pillars": lambda: DigitSet(3, 2, frozenset((x, y) for x in (0, 2) for y in range(3))),
    "diag_pair": lambda: DigitSet(2, 2, frozenset({(0, 0), (1, 1)})),
    "diag3d": lambda: DigitSet(2, 3, frozenset({(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)})),
    "example21_like": _example21_like,
}

BUILTIN_NAMES = (*_FIXTURES, "exact_m(m)")

_EXACT_M = re.compile(r"exact_m(?:\((\d+)\)|:(\d+)|)")


def builtin(name: str) -> DigitSet:
    """Named fixture. ``exact_m(m)`` (or ``exact_m:m``; bare ``exact_m`` means m=5)."""
    name = name.strip()
    if name in _FIXTURES:
        return _FIXTURES[name]()
    match = _EXACT_M.fullmatch(name)
    if match:
        m = int(match.group(1) or match.group(2) or 5)
        return generate_exact_m(m)
    raise DigitSetError(f"unknown builtin {name!r}; known: {', '.join(BUILTIN_NAMES)}")


def full_box(base: int, dim: int) -> list[Vec]:
    """All cells of ``{0..base-1}^dim`` in canonical row-major order."""
    return sorted(itertools.product(range(base), repeat=dim), key=row_major_key)
