import pytest
from hypothesis import given, settings

from fracsq.errors import DigitSetError, PatternError
from fracsq.model import (
    DigitSet,
    Pillar,
    arrange_left_to_right,
    builtin,
    exact_m_parts,
    generate_exact_m,
    parse_pattern,
    pillars,
    rescale,
    serialize_pattern,
    shape_predicates,
)
from fracsq.graphs import digit_components

from conftest import digit_sets

CARPET_TEXT = "fracsq v1\ndim 2\nbase 3\n###\n#.#\n###\n"


def test_parse_carpet():
    D = parse_pattern(CARPET_TEXT)
    assert D.base == 3 and D.dim == 2
    assert len(D) == 8
    assert (1, 1) not in D


def test_parse_orientation_top_row_is_high_y():
    D = parse_pattern("fracsq v1\ndim 2\nbase 2\n#.\n.#\n")
    assert D.digits == {(0, 1), (1, 0)}


def test_parse_comments_and_trailing_blank():
    D = parse_pattern("fracsq v1\n% a comment\ndim 2\nbase 2\n% row 1\n##\n.#\n\n")
    assert D.digits == {(0, 1), (1, 1), (1, 0)}


def test_parse_3d_blocks_top_block_is_high_z():
    text = "fracsq v1\ndim 3\nbase 2\n#.\n..\n\n..\n.#\n"
    D = parse_pattern(text)
    assert D.dim == 3
    assert D.digits == {(0, 1, 1), (1, 0, 0)}


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("fracsq v2\ndim 2\nbase 2\n##\n##\n", 1, "header"),
        ("fracsq v1\ndim 4\nbase 2\n##\n##\n", 2, "unsupported dim"),
        ("fracsq v1\ndim 2\nbasis 2\n##\n##\n", 3, "base"),
        ("fracsq v1\ndim 2\nbase 2\n##\n#\n", 5, "expected 2 characters"),
        ("fracsq v1\ndim 2\nbase 2\n##\n#x\n", 5, "illegal character"),
        ("fracsq v1\ndim 2\nbase 3\n###\n###\n", 6, "expected 3 grid lines"),
        ("fracsq v1\ndim 2\nbase 2\n..\n..\n", 5, "empty digit set"),
        ("fracsq v1\ndim 3\nbase 2\n#.\n..\n\n\n..\n.#\n", 7, "exactly one blank line"),
    ],
)
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(PatternError) as err:
        parse_pattern(text)
    assert err.value.line == line
    assert fragment in str(err.value)


@given(digit_sets(bases=(2, 3, 4, 5, 7), dims=(2, 3)))
@settings(max_examples=150)
def test_pattern_round_trip(D):
    assert parse_pattern(serialize_pattern(D, comment="round trip")) == D


def test_digitset_invariants():
    with pytest.raises(DigitSetError):
        DigitSet(3, 2, frozenset())
    with pytest.raises(DigitSetError):
        DigitSet(3, 2, frozenset({(0, 3)}))
    with pytest.raises(DigitSetError):
        DigitSet(1, 2, frozenset({(0, 0)}))


def test_rescale_diag_pair_by_hand():
    # N d + e over d, e in {(0,0),(1,1)}: (0,0), (1,1), (2,2), (3,3)
    D = rescale(builtin("diag_pair"), 2)
    assert D.base == 4
    assert D.digits == {(0, 0), (1, 1), (2, 2), (3, 3)}


def test_rescale_identity_and_carpet_cardinality():
    carpet = builtin("carpet")
    assert rescale(carpet, 1) == carpet
    R = rescale(carpet, 2)
    assert R.base == 9 and len(R) == 64


@given(digit_sets(bases=(2, 3, 4)), st_k := __import__("hypothesis").strategies.integers(1, 3))
@settings(max_examples=60)
def test_rescale_cardinality(D, k):
    assert len(rescale(D, k)) == len(D) ** k


def test_rescale_rejects_bad_k():
    with pytest.raises(DigitSetError):
        rescale(builtin("carpet"), 0)


def test_pillars_examples():
    two = DigitSet(3, 2, frozenset({(0, 0), (0, 1), (0, 2), (2, 0), (2, 1), (2, 2)}))
    assert pillars(two) == [Pillar(0, 0, 2), Pillar(2, 0, 2)]
    gap = DigitSet(3, 2, frozenset({(0, 0), (0, 2)}))
    assert pillars(gap) == [Pillar(0, 0, 0), Pillar(0, 2, 2)]
    assert pillars(builtin("carpet")) == [Pillar(0, 0, 2), Pillar(1, 0, 0), Pillar(1, 2, 2), Pillar(2, 0, 2)]


def test_pillars_reject_3d():
    with pytest.raises(DigitSetError):
        pillars(builtin("diag3d"))


@given(digit_sets(bases=(2, 3, 4, 5, 6)))
def test_pillars_partition_and_maximal(D):
    ps = pillars(D)
    covered = [d for p in ps for d in p.digits]
    assert sorted(covered) == sorted(D.digits)
    for p in ps:
        assert (p.x, p.bottom - 1) not in D and (p.x, p.top + 1) not in D


def test_shape_predicates():
    two = builtin("two_pillars")
    flags = shape_predicates(two, digit_components(two))
    assert flags.vertical == (True, True) and flags.horizontal == (False, False)
    assert flags.vertical_like and not flags.horizontal_like

    carpet = builtin("carpet")
    flags = shape_predicates(carpet, digit_components(carpet))
    assert flags.vertical_like and flags.horizontal_like

    single = DigitSet(3, 2, frozenset({(0, 0)}))
    flags = shape_predicates(single, digit_components(single))
    assert not flags.vertical_like and not flags.horizontal_like


def test_arrange_left_to_right():
    two = builtin("two_pillars")
    ordered = arrange_left_to_right(two, digit_components(two))
    assert [min(x for x, _ in comp) for comp in ordered] == [0, 2]

    carpet = builtin("carpet")
    assert len(arrange_left_to_right(carpet, digit_components(carpet))) == 1

    # x-ranges {0..1} and {3..4}; the right one comes first in canonical order
    cells = {(3, y) for y in range(5)} | {(4, 0)} | {(0, y) for y in range(1, 5)} | {(1, 0)}
    D = DigitSet(5, 2, frozenset(cells))
    ordered = arrange_left_to_right(D, digit_components(D))
    assert [sorted({x for x, _ in comp}) for comp in ordered] == [[0, 1], [3, 4]]


def test_arrange_requires_vertical_like():
    D = DigitSet(3, 2, frozenset({(0, 0), (0, 1), (2, 2)}))
    with pytest.raises(DigitSetError):
        arrange_left_to_right(D, digit_components(D))


def _exact_m_by_formula(m):
    """Direct evaluation of the set formula, written independently of the generator."""
    D = set()
    for j in range(2 * m, m * m):
        D.add((0, j))
        D.add((m * m - 1, m * m - 1 - j))
    for k in range(m):
        for i in range(m):
            for j in range(i * m, (i + 1) * m):
                D.add((i + k * m, j))
    return D


@pytest.mark.parametrize("m, size", [(5, 155), (6, 264), (7, 7**3 + 2 * 49 - 28)])
def test_generate_exact_m(m, size):
    D = generate_exact_m(m)
    assert D.base == m * m
    assert len(D) == size == m**3 + 2 * m * m - 4 * m
    assert D.digits == _exact_m_by_formula(m)


@pytest.mark.parametrize("m", [5, 6, 8])
def test_exact_m_pieces_disjoint(m):
    B, copies = exact_m_parts(m)
    pieces = [B, *copies]
    assert sum(len(p) for p in pieces) == len(frozenset().union(*pieces))
    assert all(0 <= c < m * m for p in pieces for d in p for c in d)


@pytest.mark.parametrize("m", [-1, 2, 3, 4])
def test_generate_exact_m_rejects_small(m):
    with pytest.raises(DigitSetError):
        generate_exact_m(m)


def test_builtins():
    assert len(builtin("carpet")) == 8
    d3 = builtin("diag3d")
    assert d3.dim == 3 and len(d3) == 4
    assert len(builtin("two_pillars")) == 6
    assert builtin("diag_pair").digits == {(0, 0), (1, 1)}
    ex = builtin("example21_like")
    assert len(ex) == 18 and ex.base == 5
    assert digit_components(ex).count == 2
    assert builtin("exact_m(6)") == builtin("exact_m:6") == generate_exact_m(6)
    assert builtin("exact_m") == generate_exact_m(5)
    with pytest.raises(DigitSetError):
        builtin("nope")


def test_example21_like_components_are_reflections():
    ex = builtin("example21_like")
    left, right = digit_components(ex).parts
    assert {(4 - x, 4 - y) for x, y in left} == set(right)
    assert {(0, i) for i in range(5)} <= set(left)
