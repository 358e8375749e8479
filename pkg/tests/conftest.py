import functools
import time

import pytest
from hypothesis import settings

from hopfrob import (
    cyclic_group_algebra,
    divided_power_char_p,
    idempotent_monoid_algebra,
    sweedler_h4,
    symmetric_group_algebra,
)
from hopfrob.frob import summingup_report

# derandomized so that every run draws the same examples
settings.register_profile("repro", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("repro")

HOPF_NAMES = ("C2", "C3", "S3", "F2[x]/(x^2)", "H4")


@functools.lru_cache(maxsize=None)
def zoo_member(name):
    return {
        "C2": lambda: cyclic_group_algebra(2),
        "C3": lambda: cyclic_group_algebra(3),
        "S3": lambda: symmetric_group_algebra(3),
        "F2[x]/(x^2)": lambda: divided_power_char_p(2),
        "H4": sweedler_h4,
        "M2": idempotent_monoid_algebra,
    }[name]()


@functools.lru_cache(maxsize=None)
def panel_of(name):
    return summingup_report(zoo_member(name))


@pytest.fixture(params=HOPF_NAMES)
def hopf(request):
    return zoo_member(request.param)


@pytest.fixture
def monoid():
    return zoo_member("M2")


# -- acceptance lines --------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []
SUITE_SECONDS = 120.0
_start = time.perf_counter()


def record_acceptance(label, passed, detail):
    ACCEPTANCE_LINES.append(f"{'PASS' if passed else 'FAIL'}  criterion {label}: {detail}")


def pytest_sessionstart(session):
    global _start
    _start = time.perf_counter()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    elapsed = time.perf_counter() - _start
    tr = terminalreporter
    tr.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: s.split("criterion ")[1]):
        tr.write_line(line)
    ok = elapsed < SUITE_SECONDS
    tr.write_line(f"{'PASS' if ok else 'FAIL'}  suite wall time {elapsed:.1f}s (budget {SUITE_SECONDS:.0f}s)")
    if not ok:
        terminalreporter._session.exitstatus = 1
