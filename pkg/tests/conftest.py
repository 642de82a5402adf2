"""Shared fixtures: the three demo semigraphs, fixture-file access, and the
seeded corpora used by the property and acceptance tests.

Corpus recipes are frozen here so every test file sees the same instances:

* ``fuzz_corpus``: 500 semigraphs, n in 3..15, edge sizes in 2..6, edge
  targets 1..9, seeds 1000..1499.  Disconnected instances stay in.
* ``roundtrip_corpus``: the first 500 connected instances from the stream
  n in 2..12, sizes 2..6, target n, seeds counting up from 50000.  Connected
  means no isolated vertices, so these suit recognition round-trips.
"""

from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from semigraphs import Semigraph, build_semigraph, random_semigraph

settings.register_profile(
    "suite",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

FIXTURES = Path(__file__).parent.parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text()


def fixture_body(name: str) -> str:
    """Fixture file content with full-line comments stripped.

    Emitters never write comments, so byte comparisons against fixture files
    go through this.
    """
    return "".join(
        line
        for line in fixture_text(name).splitlines(keepends=True)
        if not line.startswith("#")
    )


VERDICT_LINES: list[str] = []


def announce(line: str) -> None:
    """Record an acceptance verdict and echo it immediately.

    The echo lands in the per-test captured output; the recorded copy is
    replayed in one block by pytest_terminal_summary so every criterion's
    pass/fail line reaches the console even when its test passes.
    """
    VERDICT_LINES.append(line)
    print(line, file=sys.__stdout__, flush=True)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if VERDICT_LINES:
        terminalreporter.section("acceptance criteria")
        for line in VERDICT_LINES:
            terminalreporter.write_line(line)


def make_demo9() -> Semigraph:
    return build_semigraph(
        9, [(0, 1, 2, 3, 4), (0, 5, 7), (1, 6, 7), (2, 8), (5, 6)]
    )


def make_demo6() -> Semigraph:
    return build_semigraph(6, [(0, 1, 2), (0, 3, 4), (1, 5, 4), (3, 5)])


def make_demo10() -> Semigraph:
    return build_semigraph(
        10, [(0, 1, 2, 3, 4), (0, 6, 7), (1, 5, 7), (0, 8), (5, 6)]
    )


@pytest.fixture(scope="session")
def demo9() -> Semigraph:
    return make_demo9()


@pytest.fixture(scope="session")
def demo6() -> Semigraph:
    return make_demo6()


@pytest.fixture(scope="session")
def demo10() -> Semigraph:
    return make_demo10()


def fuzz_instance(s: int) -> Semigraph:
    return random_semigraph(
        3 + (s % 13), 1 + (s % 9), 2 + (s % 5), seed=1000 + s
    )


@pytest.fixture(scope="session")
def fuzz_corpus() -> list[tuple[int, Semigraph]]:
    return [(s, fuzz_instance(s)) for s in range(500)]


@pytest.fixture(scope="session")
def roundtrip_corpus() -> list[tuple[int, Semigraph]]:
    picked: list[tuple[int, Semigraph]] = []
    s = 0
    while len(picked) < 500:
        g = random_semigraph(
            2 + (s % 11), 2 + (s % 11), 2 + (s % 5), seed=50000 + s
        )
        if g.edges and g.is_connected():
            picked.append((50000 + s, g))
        s += 1
    return picked
