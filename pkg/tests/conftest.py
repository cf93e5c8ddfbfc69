import itertools

import pytest
from hypothesis import strategies as st

from semint import Capacity, FiniteSpace, Instance, MeasurableFunction, random_capacity


def make_instance(f, mu):
    """Two-or-more point instance from function values and a bitmask-indexed capacity."""
    space = FiniteSpace.of_size(len(f))
    return Instance(Capacity(space, mu), MeasurableFunction(space, f))


@pytest.fixture
def product_example():
    # f = (0.3, 0.7), mu({x1}) = 0.2, mu({x2}) = 0.4
    return make_instance((0.3, 0.7), (0.0, 0.2, 0.4, 1.0))


def brute_integral(s, f, mu, step=1e-4):
    """Plain-loop sweep of S(t, mu({f >= t})) over a grid plus the values of f.

    Shares nothing with the library except the semicopula callable: level sets
    are rebuilt from scratch as frozensets and looked up in a dict.
    """
    n = len(f)
    table = {}
    for mask in range(1 << n):
        table[frozenset(i for i in range(n) if mask >> i & 1)] = mu[mask]
    ts = {k * step for k in range(int(round(1 / step)) + 1)} | set(f) | {1.0}
    best = 0.0
    for t in ts:
        level = table[frozenset(i for i in range(n) if f[i] >= t)]
        best = max(best, s(min(t, 1.0), level))
    return best


def lattice_points(r):
    return list(itertools.product([k / r for k in range(r + 1)], repeat=2))


unit_lattice = st.integers(0, 64).map(lambda k: k / 64)


@st.composite
def instances(draw, max_points=4, max_value=1.0):
    n = draw(st.integers(1, max_points))
    top = int(max_value * 64)
    f = tuple(draw(st.lists(st.integers(0, top).map(lambda k: k / 64), min_size=n, max_size=n)))
    space = FiniteSpace.of_size(n)
    cap = random_capacity(space, draw(st.integers(0, 2**32 - 1)))
    return Instance(cap, MeasurableFunction(space, f))


_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and (rep.when == "call" or (rep.when == "setup" and rep.failed)):
        title = marker.args[1]
        if hasattr(item, "callspec"):
            title = f"{title} [{item.callspec.id}]"
        _acceptance.append((marker.args[0], title, rep.passed))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed in sorted(_acceptance):
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {title}")
