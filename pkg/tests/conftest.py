import os

import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from hns4 import NAMED_KINDS, builtin_system

# property tests run lighter by default; the acceptance module does the 1000-sample sweeps
settings.register_profile("default", max_examples=50, deadline=None)
settings.register_profile("thorough", max_examples=1000, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SYSTEMS = [builtin_system(k) for k in NAMED_KINDS]
SYSTEM_IDS = [s.name for s in SYSTEMS]

coefficient = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
coeffs4 = st.tuples(coefficient, coefficient, coefficient, coefficient)


@pytest.fixture(params=SYSTEMS, ids=SYSTEM_IDS)
def system(request):
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20241016)


def close(x, y, tol, scale=1.0):
    """Componentwise ``|x - y| <= tol * max(1, scale)``."""
    x, y = np.asarray(getattr(x, "a", x), float), np.asarray(getattr(y, "a", y), float)
    return np.max(np.abs(x - y)) <= tol * max(1.0, scale)


# --- acceptance report ---------------------------------------------------

_criterion_of = {}  # nodeid -> (number, title)
_results = {}  # (number, title) -> all passed so far


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _criterion_of[item.nodeid] = m.args


def pytest_runtest_logreport(report):
    crit = _criterion_of.get(report.nodeid)
    if crit is None or (report.when != "call" and not report.failed):
        return
    _results[crit] = _results.get(crit, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), ok in sorted(_results.items()):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
