"""Exact component counts for fractal squares and fractal cubes."""

from .automaton import CellSet, OffsetAutomaton, build, cells_intersect, nonempty
from .classify import Classification, Diagnostics, Verdict, check_prop_intersect, classify, diagnostics
from .graphs import DStarDecomposition, LevelGraph, digit_components, dstar, level1_graph, level2_graph, to_dot
from .model import (
    Cell,
    DigitSet,
    Pillar,
    arrange_left_to_right,
    builtin,
    generate_exact_m,
    parse_pattern,
    pillars,
    rescale,
    serialize_pattern,
    shape_predicates,
)
from .oracle import GridSet, Trace, component_trace, count_components, iterate
from .unionfind import ComponentDecomposition, DisjointSet

__version__ = "0.1.0"
