"""Finite-statistics estimates of chain margins from sampled outcome pairs.

Each link draws from its own counter-based Philox stream keyed by
(master seed, link index), so results do not depend on sampling order.
Link ``k`` for k < number of adjacent links is the k-th adjacent link; the
closing link uses the next index.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from chainbell.chain import ChainScenario
from chainbell.quantum import MaxEntangledState, joint_table, pair_effective_rotation


@dataclass(frozen=True)
class SampleConfig:
    seed: int
    shots_per_link: int
    scenario: ChainScenario

    def __post_init__(self):
        if self.shots_per_link < 1:
            raise ValueError(f"shots_per_link must be >= 1, got {self.shots_per_link}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")


@dataclass(frozen=True)
class EstimateReport:
    per_link: tuple[tuple[float, float], ...]
    closing: tuple[float, float]
    lhs_estimate: float
    rhs_estimate: float
    margin_estimate: float
    margin_stderr: float

    def to_dict(self) -> dict:
        return {
            "perLink": [list(p) for p in self.per_link],
            "closing": list(self.closing),
            "lhsEstimate": self.lhs_estimate,
            "rhsEstimate": self.rhs_estimate,
            "marginEstimate": self.margin_estimate,
            "marginStderr": self.margin_stderr,
        }


def link_generator(seed: int, link_index: int) -> np.random.Generator:
    ss = np.random.SeedSequence(seed, spawn_key=(link_index,))
    return np.random.Generator(np.random.Philox(ss))


def sample_joint(table, shots: int, rng) -> np.ndarray:
    """Counts of outcome pairs drawn by inverse CDF over the flattened cells.

    ``rng`` is a Generator or an integer seed.
    """
    t = np.asarray(table, dtype=float)
    if not isinstance(rng, np.random.Generator):
        rng = link_generator(int(rng), 0)
    cdf = np.cumsum(t.reshape(-1))
    cdf /= cdf[-1]
    u = rng.random(shots)
    cells = np.searchsorted(cdf, u, side="right")
    # u < 1 always, so only float slack in cdf[-1] could push past the end
    np.minimum(cells, cdf.size - 1, out=cells)
    return np.bincount(cells, minlength=cdf.size).reshape(t.shape)


def _estimate(counts: np.ndarray) -> tuple[float, float]:
    shots = int(counts.sum())
    p = 1.0 - np.trace(counts) / shots
    return float(p), math.sqrt(p * (1 - p) / shots)


def estimate_chain(config: SampleConfig) -> EstimateReport:
    sc = config.scenario
    ladder = sc.ladder()
    state = MaxEntangledState(sc.d)
    pairs = ladder.links() + [ladder.closing_link]
    estimates = []
    for k, (i, j) in enumerate(pairs):
        table = joint_table(state, pair_effective_rotation(ladder, i, j))
        counts = sample_joint(table, config.shots_per_link, link_generator(config.seed, k))
        estimates.append(_estimate(counts))
    per_link, closing = tuple(estimates[:-1]), estimates[-1]
    lhs = math.fsum(p for p, _ in per_link)
    rhs = closing[0]
    stderr = math.sqrt(math.fsum(se**2 for _, se in estimates))
    return EstimateReport(per_link, closing, lhs, rhs, rhs - lhs, stderr)


def config_dict(config: SampleConfig) -> dict:
    return {
        "seed": config.seed,
        "shotsPerLink": config.shots_per_link,
        "scenario": {**asdict(config.scenario), "N": config.scenario.N},
    }
