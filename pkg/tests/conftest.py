import math

import pytest
from hypothesis import strategies as st

from gapset import NumericalSemigroup


def naive_members(gens, limit):
    """Members of the monoid spanned by ``gens`` up to ``limit``, by repeated sums."""
    members = {0}
    frontier = {0}
    while frontier:
        frontier = {x + g for x in frontier for g in gens if x + g <= limit} - members
        members |= frontier
    return members


def naive_gaps(gens, limit=400):
    members = naive_members(gens, limit)
    return [x for x in range(1, limit + 1) if x not in members]


@st.composite
def generator_sets(draw, max_gen=14, max_size=5):
    gens = draw(st.lists(st.integers(2, max_gen), min_size=1, max_size=max_size, unique=True))
    if math.gcd(*gens) != 1:
        gens.append(draw(st.sampled_from([g + 1 for g in gens])))
    return sorted(set(gens))


@st.composite
def semigroups(draw, max_gen=14):
    return NumericalSemigroup.from_generators(draw(generator_sets(max_gen)))


@pytest.fixture
def s23():
    return NumericalSemigroup.from_gaps([1])


@pytest.fixture
def s4511():
    return NumericalSemigroup.from_generators([4, 5, 11])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import CRITERIA

    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when == "call" and "test_acceptance.py" in rep.nodeid:
                name = rep.nodeid.split("::")[-1]
                lines.append((CRITERIA.get(name, name), "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for label, verdict in sorted(lines):
            terminalreporter.write_line(f"{verdict}  criterion {label}")
