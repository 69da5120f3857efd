import numpy as np
import pytest
from hypothesis import settings

from rtview import checks
from rtview.view_core import check_invariants

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

_seen = {"views": 0, "violations": []}
ACCEPTANCE_RESULTS = []


@pytest.fixture(autouse=True)
def invariant_observer():
    """Check the invariants of every descriptor built during a test."""
    violations = []

    def observe(view):
        _seen["views"] += 1
        problems = check_invariants(view)
        if problems:
            violations.append((view, problems))

    previous = checks.observer
    checks.observer = observe
    try:
        yield
    finally:
        checks.observer = previous
    _seen["violations"].extend(violations)
    assert not violations, violations


@pytest.fixture
def sample_buffer():
    """Integers 1..6 stored at buffer indices 100..105."""
    buf = np.zeros(106, dtype=np.int64)
    buf[100:106] = [1, 2, 3, 4, 5, 6]
    return buf


def pytest_terminal_summary(terminalreporter):
    tr = terminalreporter
    if ACCEPTANCE_RESULTS:
        tr.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            tr.write_line(line)
    tr.write_line(
        f"descriptor invariant checks: {_seen['views']} descriptors, "
        f"{len(_seen['violations'])} violations"
    )
