"""Shared fixtures: physical constants and a cache of solved states."""

from __future__ import annotations

from functools import lru_cache

import pytest

from nqa.solver import QuantumState, TwoBodySystem, solve_state

M_E = 0.51099895
M_MU = 105.6583755
M_P = 938.2720882
ALPHA = 7.2973525693e-3

SYSTEMS = {
    "hydrogen-e": TwoBodySystem(M_E, M_P, ALPHA, "hydrogen-e"),
    "hydrogen-mu": TwoBodySystem(M_MU, M_P, ALPHA, "hydrogen-mu"),
    "hydrogen-e-swapped": TwoBodySystem(M_P, M_E, ALPHA, "hydrogen-e-swapped"),
    "positronium": TwoBodySystem(M_E, M_E, ALPHA, "positronium"),
    "dirac-limit": TwoBodySystem(M_E, 1e6 * M_E, ALPHA, "dirac-limit"),
}

REFINE_SIZES = (800, 1000, 1200)


def state(label: str) -> QuantumState:
    from nqa.cli import parse_state_label

    return parse_state_label(label)


@lru_cache(maxsize=None)
def solved(system: str, label: str, n: int, small_terms: bool = True):
    """Solve once per (system, state, grid size, small-term flag) per session."""
    return solve_state(SYSTEMS[system], state(label), n, small_terms=small_terms)


def refined(system: str, label: str, sizes=REFINE_SIZES, small_terms: bool = True):
    """``(eps_best, sigma)`` in units of m1, sharing the solve cache."""
    eps = [solved(system, label, n, small_terms).epsilon for n in sizes]
    best = eps[sizes.index(max(sizes))]
    return best, max(eps) - min(eps)


@pytest.fixture(scope="session")
def systems():
    return SYSTEMS


# one line per acceptance criterion, echoed after the run
CRITERIA: dict[tuple[int, str], str] = {}


def record_criterion(k: int, ok: bool, detail: str, tag: str = "") -> None:
    name = f"criterion {k}" + (f" [{tag}]" if tag else "")
    line = f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}"
    CRITERIA[(k, tag)] = line
    print(line)
    assert ok, line


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for k in sorted(CRITERIA):
            terminalreporter.write_line(CRITERIA[k])
