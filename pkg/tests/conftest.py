import itertools

import pytest
from hypothesis import strategies as st

from flockgraph.perm import Permutation, parse


def P(text, n=6):
    return parse(text, n)


def all_perms(n):
    return [Permutation(img) for img in itertools.permutations(range(1, n + 1))]


def perms(n):
    """Hypothesis strategy for permutations of degree n."""
    return st.permutations(list(range(1, n + 1))).map(lambda img: Permutation(tuple(img)))


@pytest.fixture
def sigma6():
    return P("(123456.)")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number])
