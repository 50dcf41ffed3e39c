import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from oneplace.algebra import QQ, parse_polynomial
from oneplace.diffvals import ParametricCurve

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

CORPUS = Path(__file__).resolve().parents[1] / "src" / "oneplace" / "corpus"


def P(text, variables=("X", "Y"), field=QQ):
    return parse_polynomial(text, variables, field)


def T(text, field=QQ):
    return parse_polynomial(text, ("t",), field)


def curve(x, y, field=QQ):
    return ParametricCurve.from_polynomials(T(x, field), T(y, field))


@pytest.fixture(scope="session")
def corpus_dir():
    return CORPUS


ACCEPTANCE = {}


@pytest.fixture
def acceptance():
    """Record one verdict line per acceptance criterion; returns the verdict."""

    def record(number, title, ok, detail=""):
        ACCEPTANCE[number] = f"ACCEPTANCE {number:>2} {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])
