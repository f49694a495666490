from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from kbhomology.gaussian import GaussianRational
from kbhomology.laurent import LaurentPoly


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260314)


small_int = st.integers(min_value=-6, max_value=6)
ratios = st.fractions(min_value=-5, max_value=5, max_denominator=7)
gaussians = st.builds(GaussianRational, ratios, ratios)
exponents = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
laurents = st.dictionaries(exponents, gaussians, max_size=4).map(LaurentPoly)
global_polys = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), gaussians, max_size=5).map(LaurentPoly)


# acceptance reporting: one line per criterion in the terminal summary

_CRITERIA: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and report.passed:
        return
    number, title = marker.args
    ok = report.passed and _CRITERIA.get(number, (title, True))[1]
    _CRITERIA[number] = (title, ok)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
