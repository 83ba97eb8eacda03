from __future__ import annotations

from pathlib import Path

import pytest

from localdim.diffgraph import parse_bigraph
from localdim.poset import parse_poset

FIXTURES = Path(__file__).parent / "fixtures"

_ACCEPTANCE: dict[int, dict] = {}


def pytest_addoption(parser):
    parser.addoption("--quick", action="store_true", default=False,
                     help="run the reduced acceptance subsets")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.fixture
def quick(request) -> bool:
    return request.config.getoption("--quick")


def load_bigraphs():
    return {p.stem: parse_bigraph(p.read_text()) for p in sorted((FIXTURES / "bigraphs").glob("*.txt"))}


def load_posets():
    return {p.stem: parse_poset(p.read_text()) for p in sorted((FIXTURES / "posets").glob("*.txt"))}


@pytest.fixture(scope="session")
def bigraph_corpus():
    return load_bigraphs()


@pytest.fixture(scope="session")
def poset_corpus():
    return load_posets()


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    _ACCEPTANCE[props["criterion"]] = {
        "title": props.get("title", ""),
        "outcome": "PASS" if report.passed else "FAIL",
        "detail": props.get("detail", ""),
        "seconds": report.duration,
    }


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        r = _ACCEPTANCE[number]
        line = f"[{r['outcome']}] criterion {number}: {r['title']} ({r['seconds']:.1f}s)"
        if r["detail"]:
            line += f" -- {r['detail']}"
        terminalreporter.write_line(line)
