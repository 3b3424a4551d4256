"""Chained inequality evaluation: standard chain, extended chain, closed forms.

Standard chain (2n settings, N = 2n)::

    sum_{|i-j|=1} P(A_i != B_j) >= P(A_0 != B_{2n-1})

Extended chain adds A_{2n} and closes on the Alice pair (A_0, A_{2n}).
A scenario is violated when rhs - lhs exceeds ``VIOLATION_TOL``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from chainbell.errors import NoneFoundError, UnsupportedVariantError
from chainbell.quantum import EXTENDED, STANDARD, SettingLadder, link_mismatch
from chainbell.rotations import canonical_decomposition

VIOLATION_TOL = 1e-12


@dataclass(frozen=True)
class ChainScenario:
    d: int
    n: int
    variant: str = STANDARD

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"d must be >= 2, got {self.d}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.variant not in (STANDARD, EXTENDED):
            raise ValueError(f"unknown variant {self.variant!r}")

    @property
    def N(self) -> int:
        return 2 * self.n

    @classmethod
    def from_settings(cls, d: int, N: int, variant: str = STANDARD) -> ChainScenario:
        if N < 2 or N % 2:
            raise ValueError(f"N must be even and >= 2, got {N}")
        return cls(d, N // 2, variant)

    def ladder(self) -> SettingLadder:
        return SettingLadder(self.d, self.n, self.variant)


@dataclass(frozen=True)
class ChainReport:
    scenario: ChainScenario
    link_values: tuple[float, ...]
    lhs: float
    rhs: float
    margin: float
    violated: bool
    closed_form: Optional[float]


def closed_form_lhs(d: int, N: int, variant: str = STANDARD) -> float:
    """Quantum LHS of the standard chain from the per-dimension formula.

    (N-1) * [1 - (1/d)(2m cos^2(pi/(2(N-1))) + (3s/9)(1 + 2cos(2pi/(3(N-1))))^2)]
    with (m, s) the canonical block decomposition of d.
    """
    if variant != STANDARD:
        raise UnsupportedVariantError("closed form only exists for the standard chain")
    b = canonical_decomposition(d)
    k = N - 1
    qubit = 2 * b.m * math.cos(math.pi / (2 * k)) ** 2
    qutrit = 3 * b.s / 9 * (1 + 2 * math.cos(2 * math.pi / (3 * k))) ** 2
    return k * (1 - (qubit + qutrit) / d)


def evaluate_chain(scenario: ChainScenario) -> ChainReport:
    ladder = scenario.ladder()
    links = tuple(link_mismatch(ladder, i, j) for i, j in ladder.links())
    lhs = math.fsum(links)
    rhs = link_mismatch(ladder, *ladder.closing_link)
    margin = rhs - lhs
    closed = (
        closed_form_lhs(scenario.d, scenario.N)
        if scenario.variant == STANDARD
        else None
    )
    return ChainReport(
        scenario=scenario,
        link_values=links,
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        violated=margin > VIOLATION_TOL,
        closed_form=closed,
    )


def minimal_violating_n(d: int, cap: int = 1000) -> int:
    """Smallest even N whose standard chain is violated."""
    for N in range(2, cap + 1, 2):
        if evaluate_chain(ChainScenario.from_settings(d, N)).violated:
            return N
    raise NoneFoundError(f"no violation for d={d} with N <= {cap}")


def zeno_limit_trace(d: int, n_list: Iterable[int]) -> list[ChainReport]:
    return [evaluate_chain(ChainScenario(d, n, EXTENDED)) for n in n_list]
