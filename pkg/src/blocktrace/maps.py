"""Blockwise application of the trace-augmented maps
phi(X) = (tr X) I + X and psi(X) = (tr X) I - X."""

from __future__ import annotations

import numpy as np

from .blocks import BlockMatrix, from_blocks


def phi(x: np.ndarray) -> np.ndarray:
    return np.trace(x) * np.eye(x.shape[0]) + x


def psi(x: np.ndarray) -> np.ndarray:
    return np.trace(x) * np.eye(x.shape[0]) - x


_MAPS = {"phi": phi, "psi": psi}


def apply_map_blockwise(kind: str, a: BlockMatrix, transpose_blocks: bool = False) -> BlockMatrix:
    """Apply phi or psi to every block of A.

    With ``transpose_blocks`` the map acts on A_{j,i} instead of A_{i,j},
    giving the copositivity-side block matrix [map(A_{j,i})]."""
    f = _MAPS[kind]
    blocks = a.as_blocks()
    if transpose_blocks:
        blocks = blocks.transpose(1, 0, 2, 3)
    out = np.empty_like(blocks)
    for i in range(a.m):
        for j in range(a.m):
            out[i, j] = f(blocks[i, j])
    return from_blocks(a.m, a.n, out)
