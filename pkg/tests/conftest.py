import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from satpatterns.logic import Clause, Literal, make_instance, paper_counterexample  # noqa: E402


@st.composite
def clauses(draw, n):
    width = draw(st.integers(1, min(3, n)))
    variables = draw(st.lists(st.integers(1, n), min_size=width, max_size=width, unique=True))
    signs = draw(st.lists(st.booleans(), min_size=width, max_size=width))
    return Clause(Literal(v, s) for v, s in zip(variables, signs))


@st.composite
def instances(draw, max_vars=5, max_clauses=12):
    n = draw(st.integers(1, max_vars))
    cs = draw(st.lists(clauses(n), max_size=max_clauses))
    return make_instance(n, cs)


@pytest.fixture
def paper():
    return paper_counterexample()


# acceptance summary: tests tag themselves with record_property("criterion", ...)
_criteria: dict[str, list[str]] = {}


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or report.outcome != "passed":
        _criteria.setdefault(props["criterion"], []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda s: int(s.split(".")[0])):
        outcomes = _criteria[name]
        verdict = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
