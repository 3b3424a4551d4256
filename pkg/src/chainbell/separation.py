"""Kolmogorov-probability layer: separation of events and its inequalities.

Events of a finite probability space are subsets of atoms. A space that
tracks ``k`` events has ``2**k`` atoms, one per joint truth assignment; atom
``a`` belongs to event ``i`` iff bit ``i`` of ``a`` is set. Event selectors are
Python ints used as bitmasks over atom indices, so set algebra is ``&``/``|``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from chainbell.errors import InvalidProbabilityError

TOL = 1e-12


@dataclass(frozen=True)
class EventStats:
    pA: float
    pB: float
    pAB: float

    def __post_init__(self):
        for name in ("pA", "pB", "pAB"):
            v = getattr(self, name)
            if not (-TOL <= v <= 1 + TOL):
                raise InvalidProbabilityError(f"{name}={v} outside [0, 1]")
        if self.pAB > min(self.pA, self.pB) + TOL:
            raise InvalidProbabilityError("joint probability exceeds a marginal")
        if self.pA + self.pB - self.pAB > 1 + TOL:
            raise InvalidProbabilityError("P(A or B) exceeds 1")


def separation(stats: EventStats) -> float:
    """S(A, B) = P(A) + P(B) - 2 P(A, B)."""
    return stats.pA + stats.pB - 2.0 * stats.pAB


@dataclass(frozen=True)
class ProbabilitySpace:
    atom_weights: tuple[float, ...]

    def __post_init__(self):
        w = np.asarray(self.atom_weights, dtype=float)
        n = w.size
        if n == 0 or n & (n - 1):
            raise InvalidProbabilityError("number of atoms must be a power of two")
        if np.any(w < 0):
            raise InvalidProbabilityError("negative atom weight")
        if abs(w.sum() - 1.0) > TOL:
            raise InvalidProbabilityError(f"atom weights sum to {w.sum()!r}")

    @property
    def n_events(self) -> int:
        return len(self.atom_weights).bit_length() - 1

    def event(self, i: int) -> int:
        """Bitmask selecting the atoms in which tracked event ``i`` occurs."""
        if not 0 <= i < self.n_events:
            raise IndexError(f"event {i} not tracked (space has {self.n_events})")
        mask = 0
        for a in range(len(self.atom_weights)):
            if (a >> i) & 1:
                mask |= 1 << a
        return mask

    def prob(self, selector: int) -> float:
        return float(
            sum(w for a, w in enumerate(self.atom_weights) if (selector >> a) & 1)
        )

    def joint(self, *selectors: int) -> float:
        mask = ~0
        for s in selectors:
            mask &= s
        return self.prob(mask)

    def stats(self, a: int, b: int) -> EventStats:
        return EventStats(self.prob(a), self.prob(b), self.joint(a, b))

    def sep(self, a: int, b: int) -> float:
        return separation(self.stats(a, b))


def random_space(n_events: int, rng: np.random.Generator) -> ProbabilitySpace:
    """Draw atom weights as normalized exponential variates (flat Dirichlet)."""
    w = rng.exponential(size=2**n_events)
    w /= w.sum()
    # absorb the rounding residue so the weights sum to one
    w[-1] = max(0.0, 1.0 - w[:-1].sum())
    return ProbabilitySpace(tuple(w.tolist()))


def triangle_holds(space: ProbabilitySpace, a: int, b: int, c: int) -> bool:
    """Check P(A,B) + P(B,C) <= P(B) + P(A,C)."""
    if space.n_events < 3:
        raise InvalidProbabilityError("triangle check needs a space over >= 3 events")
    lhs = space.joint(a, b) + space.joint(b, c)
    rhs = space.prob(b) + space.joint(a, c)
    return lhs <= rhs + TOL


def polygon_holds(space: ProbabilitySpace, events: Sequence[int]) -> bool:
    """Chained separations along ``events`` bound the endpoint separation."""
    chained = sum(space.sep(x, y) for x, y in zip(events, events[1:]))
    return space.sep(events[0], events[-1]) <= chained + TOL


def ch_evaluate(p00, p10, p11, pA1, pB0, p01) -> float:
    """Clauser-Horne expression; nonpositive for every local hidden variable model.

    Arguments are P(A0,B0), P(A1,B0), P(A1,B1), P(A1), P(B0), P(A0,B1).
    """
    return p00 + p10 + p11 - pA1 - pB0 - p01


def validate_distribution(table) -> np.ndarray:
    t = np.asarray(table, dtype=float)
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise InvalidProbabilityError(f"expected a square table, got shape {t.shape}")
    if np.any(t < -TOL):
        raise InvalidProbabilityError("negative entry in joint table")
    if abs(t.sum() - 1.0) > TOL:
        raise InvalidProbabilityError(f"joint table sums to {t.sum()!r}")
    return t


def mismatch_probability(table) -> float:
    """P(A != B) = 1 - sum of the diagonal of the outcome table."""
    t = validate_distribution(table)
    return float(1.0 - np.trace(t))


def outcome_event_stats(table) -> list[EventStats]:
    """Per-outcome events A^x, B^x read off the table's marginals and diagonal."""
    t = validate_distribution(table)
    rows, cols = t.sum(axis=1), t.sum(axis=0)
    return [
        EventStats(
            float(min(rows[x], 1.0)), float(min(cols[x], 1.0)), float(t[x, x])
        )
        for x in range(t.shape[0])
    ]


def mismatch_from_separations(table) -> float:
    """Half the summed per-outcome separations; equals mismatch_probability."""
    return 0.5 * sum(separation(s) for s in outcome_event_stats(table))
