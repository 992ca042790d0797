import numpy as np
import pytest
from hypothesis import strategies as st

from biscornu.chart import StitchChart
from biscornu.group_d4d import BiscornuDecoration


@st.composite
def charts(draw, n=None, max_n=7):
    n = n if n is not None else draw(st.integers(1, max_n))
    h = [(x, y) for y in range(n + 1) for x in range(n)]
    v = [(x, y) for x in range(n + 1) for y in range(n)]
    hbits = draw(st.lists(st.booleans(), min_size=len(h), max_size=len(h)))
    vbits = draw(st.lists(st.booleans(), min_size=len(v), max_size=len(v)))
    return StitchChart(n, frozenset(c for c, b in zip(h, hbits) if b),
                       frozenset(c for c, b in zip(v, vbits) if b))


@st.composite
def decorations(draw, n=None, max_n=6):
    n = n if n is not None else draw(st.integers(1, max_n))
    return BiscornuDecoration(draw(charts(n=n)), draw(charts(n=n)))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
