"""Chained inequality restricted to a two-dimensional sector of the qudit.

Settings are Bloch vectors in the z-x plane at angles pi*k/(gamma*2n),
k = 0..2n-1, alternating Alice (even k) and Bob (odd k). All of them lie in a
window of width pi/gamma around a single perfectly correlated pair.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from chainbell.errors import NoneFoundError

VIOLATION_TOL = 1e-12

# phi+ correlation tensor, basis order (x, y, z)
CORRELATION_TENSOR = np.diag([1.0, -1.0, 1.0])


@dataclass(frozen=True)
class BlochSetting:
    angle: float

    @property
    def vector(self) -> np.ndarray:
        """Components (x, y, z) of cos(angle) z + sin(angle) x."""
        return np.array([math.sin(self.angle), 0.0, math.cos(self.angle)])


@dataclass(frozen=True)
class SectorScenario:
    n: int
    gamma: float = 1.0
    d: int = 2

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"sector chain needs n >= 2, got {self.n}")
        if self.gamma < 1:
            raise ValueError(f"gamma must be >= 1, got {self.gamma}")
        if self.d < 2:
            raise ValueError(f"d must be >= 2, got {self.d}")

    @property
    def step(self) -> float:
        return math.pi / (2 * self.n * self.gamma)

    def setting(self, k: int) -> BlochSetting:
        return BlochSetting(k * self.step)

    def links(self) -> list[tuple[int, int]]:
        out = []
        for k in range(2 * self.n - 1):
            out.append((k, k + 1) if k % 2 == 0 else (k + 1, k))
        return out


def qubit_mismatch(a: BlochSetting, b: BlochSetting) -> float:
    """P(outcomes differ) = (1 - a.T b)/2 on the phi+ state."""
    corr = a.vector @ CORRELATION_TENSOR @ b.vector
    return float((1.0 - corr) / 2.0)


def sector_margin_closed_form(scenario: SectorScenario) -> float:
    n, delta = scenario.n, scenario.step
    return (
        2 * (n - 1) * (math.cos(delta) - 1)
        + math.cos(delta)
        - math.cos((2 * n - 1) * delta)
    )


def sector_margin_link_sum(scenario: SectorScenario) -> float:
    """Twice (closing mismatch - summed link mismatches), from the settings."""
    s = scenario.setting
    lhs = math.fsum(qubit_mismatch(s(i), s(j)) for i, j in scenario.links())
    rhs = qubit_mismatch(s(0), s(2 * scenario.n - 1))
    return 2.0 * (rhs - lhs)


def sector_chain_margin(scenario: SectorScenario, check: bool = True) -> float:
    """Closed-form margin; positive means the LHV bound is violated.

    With ``check`` the value is recomputed from the explicit Bloch settings
    and both paths must agree to 1e-12.
    """
    closed = sector_margin_closed_form(scenario)
    if check:
        linked = sector_margin_link_sum(scenario)
        if abs(closed - linked) > 1e-12:
            raise ArithmeticError(
                f"closed form {closed!r} disagrees with link sum {linked!r}"
            )
    return closed


def minimal_violating_half_chain(gamma: float, cap: int = 10**6) -> int:
    for n in range(2, cap + 1):
        if sector_chain_margin(SectorScenario(n, gamma), check=False) > VIOLATION_TOL:
            return n
    raise NoneFoundError(f"no violation for gamma={gamma} with n <= {cap}")


def small_angle_asymptote(gamma: float) -> float:
    return math.pi**2 / (2 * gamma**2)


def large_n_limit(gamma: float) -> float:
    """Exact n -> infinity limit of the margin."""
    return 1.0 - math.cos(math.pi / gamma)


def sector_embed_scale(margin_q: float, d: int) -> float:
    """Express a qubit-sector probability or margin at the qudit level."""
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    return 2.0 * margin_q / d
