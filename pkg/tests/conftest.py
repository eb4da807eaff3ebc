import random

import pytest
from hypothesis import strategies as st

from ratpow.monomial import MonomialIdeal, VariableContext


def ideal(names, *gens):
    """``ideal("x y", (2, 0), (1, 1))`` -> (x^2, xy)."""
    ctx = VariableContext(tuple(names.split())) if isinstance(names, str) else names
    return MonomialIdeal.from_generators(ctx, gens)


def random_ideal(rng: random.Random, names, max_gens=3, max_exp=3) -> MonomialIdeal:
    ctx = VariableContext(tuple(names))
    count = rng.randint(1, max_gens)
    gens = []
    while len(gens) < count:
        g = tuple(rng.randint(0, max_exp) for _ in ctx.names)
        if any(g):
            gens.append(g)
    return MonomialIdeal.from_generators(ctx, gens)


@st.composite
def ideals(draw, n=None, max_gens=3, max_exp=3, names=None):
    if names is None:
        n = n if n is not None else draw(st.integers(1, 3))
        names = ("x", "y", "z")[:n]
    vec = st.tuples(*[st.integers(0, max_exp)] * len(names)).filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return MonomialIdeal.from_generators(VariableContext(tuple(names)), gens)


# -- acceptance summary --------------------------------------------------------

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or rep.when != "call" and not rep.failed:
        return
    number, title = marker.args
    ok = rep.passed and rep.when == "call"
    prev = _ACCEPTANCE.get(number)
    _ACCEPTANCE[number] = (title, ok if prev is None else prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, ok = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
