import itertools
import re

import pytest
from hypothesis import assume, given, settings

from fracsq.automaton import build, cells_intersect
from fracsq.graphs import component_color, digit_components, dstar, level1_graph, level2_graph, to_dot
from fracsq.model import DigitSet, builtin, rescale

from conftest import digit_sets


def graphs(D):
    A = build(D)
    parts = digit_components(D, A)
    g1, c1 = level1_graph(D, parts, A)
    star = dstar(D, g1, c1, A)
    g2, c2 = level2_graph(D, star, A)
    return A, parts, (g1, c1), star, (g2, c2)


def test_digit_components_examples():
    assert digit_components(builtin("carpet")).count == 1
    two = digit_components(builtin("two_pillars"))
    assert two.as_sets() == {frozenset({(0, 0), (0, 1), (0, 2)}), frozenset({(2, 0), (2, 1), (2, 2)})}
    # diagonal neighbours are adjacent
    assert digit_components(DigitSet(3, 2, frozenset({(0, 0), (1, 1), (2, 2)}))).count == 1
    assert digit_components(DigitSet(3, 2, frozenset({(0, 0), (2, 2)}))).count == 2


def test_component_ids_follow_first_occurrence():
    D = DigitSet(3, 2, frozenset({(2, 0), (0, 2), (0, 1), (0, 0)}))
    assert digit_components(D).parts == (((0, 0), (0, 1), (0, 2)), ((2, 0),))


def test_grid_neighbours_need_not_touch():
    # the top of F is the point (0, 1) and its bottom is (1, 0), so stacked copies miss
    D = DigitSet(3, 2, frozenset({(2, 0), (0, 2), (0, 1)}))
    assert digit_components(D).count == 3


@pytest.mark.parametrize(
    "name, m, M, M2",
    [("carpet", 1, 1, 1), ("diag_pair", 1, 1, 1), ("two_pillars", 2, 4, 8), ("example21_like", 2, 2, 2)],
)
def test_counts(name, m, M, M2):
    _, parts, (_, c1), _, (_, c2) = graphs(builtin(name))
    assert (parts.count, c1.count, c2.count) == (m, M, M2)


def test_two_pillars_dstar():
    D = builtin("two_pillars")
    _, _, _, star, _ = graphs(D)
    assert star.base == 9 and star.count == 4 and star.verified
    assert sum(len(p) for p in star.parts) == 36
    # four full-height columns at x = 0, 2, 6, 8
    assert sorted({x for x, _ in p}.pop() for p in star.parts) == [0, 2, 6, 8]


def naive_edges(g, A):
    verts = g.vertices
    cells = [g.cells(v) for v in verts]
    out = set()
    for a, b in itertools.combinations(range(len(verts)), 2):
        if verts[a][0] != verts[b][0] and cells_intersect(A, cells[a], cells[b]):
            out.add((a, b))
    return out


@given(digit_sets(bases=(3, 4)))
@settings(max_examples=60, deadline=None)
def test_factored_edges_match_naive(D):
    A, parts, (g1, c1), star, (g2, _) = graphs(D)
    assert set(g1.edges) == naive_edges(g1, A)
    if len(D) <= 8:
        assert set(g2.edges) == naive_edges(g2, A)


@given(digit_sets(bases=(2, 3, 4)))
@settings(max_examples=80, deadline=None)
def test_count_chain(D):
    _, parts, (_, c1), _, (_, c2) = graphs(D)
    assert parts.count <= c1.count <= c2.count


@given(digit_sets(bases=(2, 3)))
@settings(max_examples=60, deadline=None)
def test_counts_equal_rescaled_digit_components(D):
    # level-n graph components are the digit components of the depth-(n+1) digit set
    _, _, (_, c1), _, (_, c2) = graphs(D)
    assert digit_components(rescale(D, 2)).count == c1.count
    assert digit_components(rescale(D, 3)).count == c2.count


@given(digit_sets(bases=(3, 4)))
@settings(max_examples=60, deadline=None)
def test_dstar_parts_refine_level1_cells(D):
    _, parts, (g1, c1), star, _ = graphs(D)
    for comp, part in zip(c1.parts, star.parts):
        # every level-2 cell sits inside the level-1 cell of one of its vertices
        level1 = {v[0] for v in comp}
        assert {tuple(c // D.base for c in cell) for cell in part} == level1


def test_level_graph_vertex_layout():
    D = builtin("two_pillars")
    _, _, (g1, c1), _, _ = graphs(D)
    assert g1.width == 2 and len(g1.vertices) == 12
    assert g1.vertices[0] == ((0, 0), 1)
    for v in g1.vertices:
        assert g1.vertices[g1.vertex_id(v)] == v


def test_dot_two_pillars():
    D = builtin("two_pillars")
    A = build(D)
    parts = digit_components(D, A)
    text = to_dot(*level1_graph(D, parts, A))
    assert text == to_dot(*level1_graph(D, parts, A))
    assert text.startswith("graph G_F {") and text.rstrip().endswith("}")
    nodes = re.findall(r'^\s+(\w+) \[fillcolor="(#[0-9a-f]{6})"', text, re.M)
    assert len(nodes) == 12
    assert len({c for _, c in nodes}) == 4
    assert "d0_0__i1" in {n for n, _ in nodes}


def test_dot_lists_isolated_vertices():
    D = DigitSet(3, 2, frozenset({(0, 0), (2, 2)}))
    A = build(D)
    g, comps = level1_graph(D, digit_components(D, A), A)
    assert g.edges == ()
    text = to_dot(g, comps)
    assert text.count("fillcolor") == 4 and " -- " not in text


def test_component_colors_distinct():
    assert len({component_color(k) for k in range(32)}) == 32
