"""Exhaustive local-hidden-variable check of the chained inequality.

Any stochastic LHV model is a convex mixture of deterministic strategies, one
outcome per local setting, and both sides of the chain are linear in the
model's distribution. So the bound holds for all LHV models iff it holds for
every deterministic strategy. For a deterministic strategy each link
contributes 0 or 1, making the check exact integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from chainbell.chain import ChainScenario, evaluate_chain
from chainbell.errors import BudgetExceededError, ShapeMismatchError
from chainbell.quantum import EXTENDED

BUDGET = 10**7


@dataclass(frozen=True)
class DeterministicStrategy:
    alice_outcomes: tuple[int, ...]
    bob_outcomes: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "aliceOutcomes": list(self.alice_outcomes),
            "bobOutcomes": list(self.bob_outcomes),
        }


@dataclass(frozen=True)
class LhvCertificate:
    scenario: ChainScenario
    strategies_checked: int
    max_margin: int
    witness: DeterministicStrategy

    @property
    def holds(self) -> bool:
        return self.max_margin <= 0

    def to_dict(self) -> dict:
        s = self.scenario
        return {
            "scenario": {"d": s.d, "n": s.n, "N": s.N, "variant": s.variant},
            "strategiesChecked": self.strategies_checked,
            "maxMargin": self.max_margin,
            "witness": self.witness.to_dict(),
        }


def _shape(scenario: ChainScenario) -> tuple[int, int]:
    n_alice = scenario.n + 1 if scenario.variant == EXTENDED else scenario.n
    return n_alice, scenario.n


def _columns(scenario: ChainScenario):
    """Link and closing pairs as column indices into a flat outcome vector.

    Columns are Alice settings 0, 2, 4, ... followed by Bob settings 1, 3, ...
    """
    ladder = scenario.ladder()
    n_alice, _ = _shape(scenario)

    def col(k: int) -> int:
        return k // 2 if k % 2 == 0 else n_alice + k // 2

    links = [(col(i), col(j)) for i, j in ladder.links()]
    i, j = ladder.closing_link
    return links, (col(i), col(j))


def strategy_chain_value(
    strategy: DeterministicStrategy, scenario: ChainScenario
) -> tuple[int, int]:
    n_alice, n_bob = _shape(scenario)
    if len(strategy.alice_outcomes) != n_alice or len(strategy.bob_outcomes) != n_bob:
        raise ShapeMismatchError(
            f"strategy has {len(strategy.alice_outcomes)}+{len(strategy.bob_outcomes)}"
            f" outcomes, scenario needs {n_alice}+{n_bob}"
        )
    for v in (*strategy.alice_outcomes, *strategy.bob_outcomes):
        if not 0 <= v < scenario.d:
            raise ShapeMismatchError(f"outcome {v} outside 0..{scenario.d - 1}")
    flat = (*strategy.alice_outcomes, *strategy.bob_outcomes)
    links, (ci, cj) = _columns(scenario)
    lhs = sum(flat[a] != flat[b] for a, b in links)
    return int(lhs), int(flat[ci] != flat[cj])


def strategy_count(scenario: ChainScenario) -> int:
    n_alice, n_bob = _shape(scenario)
    return scenario.d ** (n_alice + n_bob)


def _digits(start: int, stop: int, d: int, width: int) -> np.ndarray:
    """Mixed-radix (all radix d) digits of indices, most significant first."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, width), dtype=np.int8)
    for c in range(width - 1, -1, -1):
        out[:, c] = idx % d
        idx //= d
    return out


def _strategy_at(index: int, scenario: ChainScenario) -> DeterministicStrategy:
    n_alice, n_bob = _shape(scenario)
    row = _digits(index, index + 1, scenario.d, n_alice + n_bob)[0].tolist()
    return DeterministicStrategy(tuple(row[:n_alice]), tuple(row[n_alice:]))


def certify_classical_bound(
    scenario: ChainScenario, chunk_size: int = 1 << 18, budget: int = BUDGET
) -> LhvCertificate:
    """Enumerate every deterministic strategy and record the largest rhs - lhs.

    Ties resolve to the lowest strategy index, so the result does not depend
    on ``chunk_size``.
    """
    total = strategy_count(scenario)
    if total > budget:
        raise BudgetExceededError(
            f"{total} strategies for d={scenario.d}, n={scenario.n} "
            f"exceeds budget {budget}; reduce d or n"
        )
    n_alice, n_bob = _shape(scenario)
    width = n_alice + n_bob
    links, (ci, cj) = _columns(scenario)
    la = np.array([a for a, _ in links])
    lb = np.array([b for _, b in links])

    best, best_idx = None, -1
    for start in range(0, total, chunk_size):
        stop = min(start + chunk_size, total)
        dig = _digits(start, stop, scenario.d, width)
        lhs = (dig[:, la] != dig[:, lb]).sum(axis=1, dtype=np.int64)
        rhs = (dig[:, ci] != dig[:, cj]).astype(np.int64)
        margin = rhs - lhs
        k = int(np.argmax(margin))
        if best is None or margin[k] > best:
            best, best_idx = int(margin[k]), start + k
    return LhvCertificate(scenario, total, best, _strategy_at(best_idx, scenario))


def classical_vs_quantum_gap(scenario: ChainScenario) -> float:
    """Quantum margin minus the best classical margin (0 when the bound holds)."""
    cert = certify_classical_bound(scenario)
    return evaluate_chain(scenario).margin - cert.max_margin
