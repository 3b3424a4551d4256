"""Block-orthogonal setting rotations built from 2x2 and 3x3 blocks.

A dimension d is tiled as d = 2m + 3s. Each 2x2 block is a plane rotation by
``theta1``; each 3x3 block is a rotation about the (1, 1, 1) axis by
``theta2``, written in circulant form. Blocks are laid out 2x2 first.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from chainbell.errors import DimensionMismatchError, InvalidDimensionError

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class BlockDecomposition:
    d: int
    m: int
    s: int

    def __post_init__(self):
        if self.m < 0 or self.s < 0:
            raise DimensionMismatchError("block counts must be nonnegative")
        if 2 * self.m + 3 * self.s != self.d:
            raise DimensionMismatchError(
                f"2*{self.m} + 3*{self.s} does not tile d={self.d}"
            )


@dataclass(frozen=True)
class RotationSpec:
    blocks: BlockDecomposition
    theta1: float = 0.0
    theta2: float = 0.0

    @property
    def d(self) -> int:
        return self.blocks.d

    def scaled(self, k: float) -> RotationSpec:
        return RotationSpec(self.blocks, k * self.theta1, k * self.theta2)


def canonical_decomposition(d: int) -> BlockDecomposition:
    if d < 2:
        raise InvalidDimensionError(f"dimension must be >= 2, got {d}")
    if d % 2 == 0:
        return BlockDecomposition(d, d // 2, 0)
    return BlockDecomposition(d, (d - 3) // 2, 1)


def qubit_block(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, s], [-s, c]])


def qutrit_block(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    x = (1 + 2 * c) / 3
    y = (1 - c - SQRT3 * s) / 3
    z = (1 - c + SQRT3 * s) / 3
    return np.array([[x, y, z], [z, x, y], [y, z, x]])


def build_rotation(spec: RotationSpec) -> np.ndarray:
    b = spec.blocks
    u = np.zeros((b.d, b.d))
    pos = 0
    for _ in range(b.m):
        u[pos : pos + 2, pos : pos + 2] = qubit_block(spec.theta1)
        pos += 2
    for _ in range(b.s):
        u[pos : pos + 3, pos : pos + 3] = qutrit_block(spec.theta2)
        pos += 3
    return u


def rotation_power(spec: RotationSpec, k: int) -> np.ndarray:
    """U(theta)**k by repeated multiplication."""
    if k < 0:
        raise ValueError(f"power must be nonnegative, got {k}")
    step = build_rotation(spec)
    out = np.eye(spec.d)
    for _ in range(k):
        out = out @ step
    return out


def is_orthogonal(u: np.ndarray, tol: float = 1e-12) -> bool:
    u = np.asarray(u, dtype=float)
    return u.ndim == 2 and u.shape[0] == u.shape[1] and bool(
        np.allclose(u.T @ u, np.eye(u.shape[0]), rtol=0, atol=tol)
    )


def is_zero_diagonal_permutation(u: np.ndarray, tol: float = 1e-10) -> bool:
    """Signed permutation matrix with an all-zero diagonal."""
    u = np.asarray(u, dtype=float)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    r = np.round(u)
    if not np.allclose(u, r, rtol=0, atol=tol) or np.any(np.abs(r) > 1):
        return False
    nz = r != 0
    return bool(
        np.all(nz.sum(axis=0) == 1)
        and np.all(nz.sum(axis=1) == 1)
        and not np.any(np.diag(nz))
    )


def step_spec(d: int, steps: int) -> RotationSpec:
    """Step angles whose ``steps``-th power is the terminal permutation."""
    return RotationSpec(
        canonical_decomposition(d),
        math.pi / (2 * steps),
        2 * math.pi / (3 * steps),
    )
