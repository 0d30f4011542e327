import pytest
from hypothesis import strategies as st

from blowup_positivity.lattice import DivisorClass


def classes(r_min=1, r_max=12, lo=-20, hi=20):
    """Hypothesis strategy for arbitrary classes."""
    return st.integers(r_min, r_max).flatmap(
        lambda r: st.builds(DivisorClass, st.integers(lo, hi),
                            st.tuples(*[st.integers(lo, hi)] * r)))


def same_r_pair(r_max=10, lo=-20, hi=20):
    return st.integers(1, r_max).flatmap(
        lambda r: st.tuples(*[st.builds(DivisorClass, st.integers(lo, hi),
                                        st.tuples(*[st.integers(lo, hi)] * r))] * 3))


@pytest.fixture
def twelve_a():
    return (3,) + (2,) * 7 + (1,) * 4


@pytest.fixture
def twelve_b():
    return (3,) + (2,) * 9 + (1,) * 2


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
