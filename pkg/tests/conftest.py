from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import settings, strategies as st

from sktlie.exterior import KForm

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def kforms(draw, n: int | None = None, degree: int | None = None, max_terms: int = 5):
    n = n if n is not None else draw(st.integers(min_value=1, max_value=8))
    k = degree if degree is not None else draw(st.integers(min_value=0, max_value=min(n, 4)))
    keys = list(combinations(range(n), k))
    if not keys:
        return KForm.zero(n, k)
    chosen = draw(st.lists(st.sampled_from(keys), max_size=max_terms, unique=True))
    terms = {key: draw(small_fractions.filter(lambda x: x != 0)) for key in chosen}
    return KForm(n, k, terms)


@pytest.fixture
def rng():
    return random.Random(20240601)


def frac_vector(rng: random.Random, n: int, bound: int = 3):
    return tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, 2)) for _ in range(n))


# -- acceptance bookkeeping ----------------------------------------------------

_ACCEPTANCE: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(number, title): sub-check of a numbered acceptance criterion"
    )


def pytest_runtest_logreport(report):
    marker = getattr(report, "_acceptance", None)
    if marker is None or report.when not in ("setup", "call"):
        return
    num, title = marker
    rec = _ACCEPTANCE.setdefault(num, {"title": title, "passed": 0, "failed": []})
    if report.when == "call" and report.passed:
        rec["passed"] += 1
    elif report.failed:
        rec["failed"].append(report.nodeid.split("::")[-1])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("acceptance")
    if m is not None:
        rep._acceptance = (m.args[0], m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        rec = _ACCEPTANCE[num]
        status = "FAIL" if rec["failed"] else "PASS"
        line = f"criterion {num} {status}: {rec['title']}"
        if rec["failed"]:
            line += f"  (failed: {', '.join(rec['failed'])})"
        terminalreporter.write_line(line)
