import itertools

import pytest
from hypothesis import strategies as st

from fracsq.model import DigitSet

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def digit_sets(draw, bases=(2, 3, 4, 5), dims=(2,)):
    base = draw(st.sampled_from(bases))
    dim = draw(st.sampled_from(dims))
    box = list(itertools.product(range(base), repeat=dim))
    chosen = draw(st.sets(st.sampled_from(box), min_size=1, max_size=len(box)))
    return DigitSet(base, dim, frozenset(chosen))


def all_digit_sets(base, dim=2):
    box = list(itertools.product(range(base), repeat=dim))
    for r in range(1, len(box) + 1):
        for combo in itertools.combinations(box, r):
            yield DigitSet(base, dim, frozenset(combo))


def brute_cells(D, n):
    """Q_n cells as a python set, built directly from the digit expansion."""
    cells = {tuple([0] * D.dim)}
    for _ in range(n):
        cells = {tuple(D.base * a + b for a, b in zip(c, d)) for c in cells for d in D.digits}
    return cells


@pytest.fixture
def three_by_three_sets():
    return list(all_digit_sets(3))
