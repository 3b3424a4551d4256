"""Exact quantum predictions on the maximally entangled two-qudit state.

Settings are generated from one orthogonal step rotation U: setting k (Alice
for even k, Bob for odd k) measures in the basis given by the columns of U**k.
For the state (1/sqrt d) sum_k |kk> and real rotations, the joint outcome
probabilities of Alice setting i and Bob setting j are

    P(x, y) = (1/d) * R[x, y]**2,   R = (U**i).T @ U**j = U**(j - i),

so every table follows from the net rotation R alone.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from chainbell.errors import DimensionMismatchError, NonAdjacentLinkError
from chainbell.rotations import (
    RotationSpec,
    rotation_power,
    step_spec,
)
from chainbell.separation import mismatch_probability

STANDARD = "standard"
EXTENDED = "extended"
VARIANTS = (STANDARD, EXTENDED)


@dataclass(frozen=True)
class MaxEntangledState:
    d: int

    def vector(self) -> np.ndarray:
        """Explicit length-d**2 amplitude vector, index a*d + b for |a>|b>."""
        return np.eye(self.d).reshape(-1) / np.sqrt(self.d)


@dataclass(frozen=True)
class SettingLadder:
    d: int
    n: int
    variant: str = STANDARD
    step: RotationSpec = field(init=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"half-chain count must be >= 1, got {self.n}")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        object.__setattr__(self, "step", step_spec(self.d, self.closing_power))

    @property
    def closing_power(self) -> int:
        return 2 * self.n - 1 if self.variant == STANDARD else 2 * self.n

    @property
    def closing_link(self) -> tuple[int, int]:
        return (0, self.closing_power)

    @property
    def alice_indices(self) -> list[int]:
        last = 2 * self.n if self.variant == EXTENDED else 2 * self.n - 2
        return list(range(0, last + 1, 2))

    @property
    def bob_indices(self) -> list[int]:
        return list(range(1, 2 * self.n, 2))

    def links(self) -> list[tuple[int, int]]:
        """Adjacent (Alice, Bob) pairs in walk order A0-B1-A2-B3-..."""
        top = 2 * self.n if self.variant == EXTENDED else 2 * self.n - 1
        out = []
        for k in range(top):
            a, b = (k, k + 1) if k % 2 == 0 else (k + 1, k)
            out.append((a, b))
        return out

    def setting_rotation(self, k: int) -> np.ndarray:
        return rotation_power(self.step, k)


def joint_table(state: MaxEntangledState, rotation: np.ndarray) -> np.ndarray:
    r = np.asarray(rotation, dtype=float)
    if r.shape != (state.d, state.d):
        raise DimensionMismatchError(
            f"rotation shape {r.shape} does not match d={state.d}"
        )
    return r**2 / state.d


def joint_table_from_state(
    state: MaxEntangledState, alice_basis: np.ndarray, bob_basis: np.ndarray
) -> np.ndarray:
    """Project the explicit state vector onto product basis vectors.

    Basis vectors are the columns of ``alice_basis`` and ``bob_basis``.
    """
    d = state.d
    psi = state.vector()
    proj = np.kron(np.asarray(alice_basis).T, np.asarray(bob_basis).T) @ psi
    return (np.abs(proj) ** 2).reshape(d, d)


def _table_after(state: MaxEntangledState, op: np.ndarray) -> np.ndarray:
    return (np.abs(op @ state.vector()) ** 2).reshape(state.d, state.d)


def transfer_identity_check(
    state: MaxEntangledState, u: np.ndarray, tol: float = 1e-12
) -> bool:
    """(1 x U^T)|psi> and (U x 1)|psi> give the same computational-basis table."""
    eye = np.eye(state.d)
    bob_side = _table_after(state, np.kron(eye, np.asarray(u).T))
    alice_side = _table_after(state, np.kron(np.asarray(u), eye))
    return bool(np.allclose(bob_side, alice_side, rtol=0, atol=tol))


def _signed_power(step: RotationSpec, k: int) -> np.ndarray:
    p = rotation_power(step, abs(k))
    return p if k >= 0 else p.T


def pair_effective_rotation(ladder: SettingLadder, i: int, j: int) -> np.ndarray:
    """Net rotation between setting ``i`` and setting ``j`` of a valid link.

    Adjacent links give U or U^T (same diagonal, transposed table); the
    closing link gives the terminal power of U.
    """
    if (i, j) == ladder.closing_link or abs(i - j) == 1:
        return _signed_power(ladder.step, j - i)
    raise NonAdjacentLinkError(f"({i}, {j}) is neither adjacent nor the closing link")


def link_mismatch(ladder: SettingLadder, i: int, j: int) -> float:
    r = pair_effective_rotation(ladder, i, j)
    return mismatch_probability(joint_table(MaxEntangledState(ladder.d), r))
