import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hilbertdepth import parse_spec  # noqa: E402

SPECS = Path(__file__).resolve().parent.parent / "demos" / "specs"


def load(name):
    return parse_spec((SPECS / f"{name}.json").read_text())


@pytest.fixture
def r_max():
    """R + (X1, X2)R over K[X1, X2]."""
    return load("r_max")


@pytest.fixture
def mixed():
    """R/(X1, X2) + X2 R/(X1) + X2 R over K[X1, X2]."""
    return load("mixed")


@pytest.fixture
def xy_xz():
    return load("xy_xz")


@pytest.fixture
def max_ideal():
    return load("max_ideal")


def make_spec(n, summands, **extra):
    return parse_spec(json.dumps({"n": n, "summands": summands, **extra}))


_acceptance: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    label = f"criterion {marker.args[0]:>2}: {marker.args[1]}"
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _acceptance[label] = "PASS" if rep.passed else "FAIL"


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, status in sorted(_acceptance.items(), key=lambda kv: int(kv[0].split()[1].rstrip(":"))):
        terminalreporter.write_line(f"{status}  {label}")
