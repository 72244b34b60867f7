"""Block-structured operators on mn x mn matrices.

A :class:`BlockMatrix` is one dense matrix plus (m, n) metadata: m blocks per
side, each block n x n.  Degenerate structures (m = 1 or n = 1) are legal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import as_matrix


@dataclass(frozen=True)
class BlockMatrix:
    m: int
    n: int
    dense: np.ndarray

    def __post_init__(self):
        d = as_matrix(self.dense)
        if self.m < 1 or self.n < 1:
            raise ValueError("block counts must be positive")
        if d.shape != (self.m * self.n, self.m * self.n):
            raise ValueError(
                f"dense shape {d.shape} does not match m={self.m}, n={self.n}"
            )
        object.__setattr__(self, "dense", d)

    def block(self, i: int, j: int) -> np.ndarray:
        """The n x n submatrix at block position (i, j); a view."""
        n = self.n
        return self.dense[i * n : (i + 1) * n, j * n : (j + 1) * n]

    @property
    def size(self) -> int:
        return self.m * self.n

    def as_blocks(self) -> np.ndarray:
        """4-D view indexed [i, j, r, s] -> block(i, j)[r, s]."""
        m, n = self.m, self.n
        return self.dense.reshape(m, n, m, n).transpose(0, 2, 1, 3)


def from_blocks(m: int, n: int, blocks) -> BlockMatrix:
    """Assemble from a [i, j, r, s]-indexed array of blocks."""
    b = np.asarray(blocks, dtype=np.complex128)
    if b.shape != (m, m, n, n):
        raise ValueError(f"expected block array of shape {(m, m, n, n)}, got {b.shape}")
    dense = b.transpose(0, 2, 1, 3).reshape(m * n, m * n)
    return BlockMatrix(m, n, dense)


def partial_transpose(a: BlockMatrix) -> BlockMatrix:
    """A^tau: block (i, j) of the result is block (j, i) of the input.

    Blocks are swapped in position, not internally transposed."""
    return from_blocks(a.m, a.n, a.as_blocks().transpose(1, 0, 2, 3))


def full_transpose(a: BlockMatrix) -> BlockMatrix:
    """Plain entrywise transpose, keeping the block structure."""
    return BlockMatrix(a.m, a.n, a.dense.T.copy())


def partial_trace_1(a: BlockMatrix) -> np.ndarray:
    """tr_1 A = sum of the diagonal blocks; an n x n matrix."""
    return np.einsum("iirs->rs", a.as_blocks())


def partial_trace_2(a: BlockMatrix) -> np.ndarray:
    """tr_2 A = [tr A_{i,j}]; an m x m matrix of block traces."""
    return np.einsum("ijrr->ij", a.as_blocks())


def block_diag(a: BlockMatrix) -> BlockMatrix:
    """D_A: off-diagonal blocks zeroed, diagonal blocks kept."""
    blocks = a.as_blocks().copy()
    mask = np.eye(a.m, dtype=bool)
    blocks[~mask] = 0
    return from_blocks(a.m, a.n, blocks)


def j_block(m: int, n: int) -> BlockMatrix:
    """The m x m block matrix with every block I_n, i.e. J_m (x) I_n."""
    if m < 1 or n < 1:
        raise ValueError("block counts must be positive")
    return BlockMatrix(m, n, np.kron(np.ones((m, m)), np.eye(n)).astype(np.complex128))


def reshuffle(a: BlockMatrix) -> BlockMatrix:
    """The (n, m)-block matrix whose block (r, s)[i, j] = block (i, j)[r, s].

    An exact entry permutation: (r*m+i, s*m+j) <- (i*n+r, j*n+s).  Swaps the
    roles of block and intra-block indices."""
    return from_blocks(a.n, a.m, a.as_blocks().transpose(2, 3, 0, 1))


def embed_left(x, m: int) -> BlockMatrix:
    """I_m (x) x with block structure (m, n); x is n x n."""
    x = as_matrix(x)
    return BlockMatrix(m, x.shape[0], np.kron(np.eye(m), x))


def embed_right(x, n: int) -> BlockMatrix:
    """x (x) I_n with block structure (m, n); x is m x m."""
    x = as_matrix(x)
    return BlockMatrix(x.shape[0], n, np.kron(x, np.eye(n)))
