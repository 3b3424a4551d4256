import math

import numpy as np
import pytest

TOL = 1e-12


def qutrit_mismatch(theta):
    """(1/9)(8 sin^2(theta/2) + 4 sin^2(theta)), evaluated directly."""
    return (8 * math.sin(theta / 2) ** 2 + 4 * math.sin(theta) ** 2) / 9


def rodrigues(axis, theta):
    k = np.asarray(axis, dtype=float)
    k = k / np.linalg.norm(k)
    kx = np.array([[0, -k[2], k[1]], [k[2], 0, -k[0]], [-k[1], k[0], 0]])
    return math.cos(theta) * np.eye(3) + math.sin(theta) * kx + (1 - math.cos(theta)) * np.outer(k, k)


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
