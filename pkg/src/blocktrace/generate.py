"""Seeded construction of the input classes the checks quantify over."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blocks import BlockMatrix
from .rng import Stream

KINDS = (
    "psd",
    "ppt",
    "hermitian",
    "gram-pair",
    "real-int",
    "matrix-unit-E",
    "ones-kron",
)


@dataclass(frozen=True)
class GenSpec:
    kind: str
    m: int = 1
    n: int = 1
    seed: int = 0
    rank: int | None = None
    int_bound: int = 100

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.m < 1 or self.n < 1:
            raise ValueError("dimensions must be positive")
        if self.rank is not None and not 1 <= self.rank <= self.m * self.n:
            raise ValueError(f"rank {self.rank} out of range for size {self.m * self.n}")
        if self.int_bound < 0:
            raise ValueError("int_bound must be non-negative")


def ginibre(stream: Stream, rows: int, cols: int) -> np.ndarray:
    return stream.complex_gaussians((rows, cols))


def random_psd(stream: Stream, size: int, rank: int | None = None) -> np.ndarray:
    """G G* with G a size x rank matrix of standard complex Gaussians."""
    g = ginibre(stream, size, rank if rank is not None else size)
    a = g @ g.conj().T
    return (a + a.conj().T) / 2


def random_hermitian(stream: Stream, size: int) -> np.ndarray:
    g = ginibre(stream, size, size)
    return (g + g.conj().T) / 2


def random_ppt(stream: Stream, m: int, n: int, terms: int | None = None) -> np.ndarray:
    """Separable mixture sum_t w_t (P_t (x) Q_t), rank-1 PSD factors, w_t > 0.

    PPT by construction: the partial transpose transposes each Q_t, which
    preserves its positivity.  Separable states under-cover PPT-entangled
    ones; good enough for instances that must certainly be PPT."""
    k = terms if terms is not None else m * n
    acc = np.zeros((m * n, m * n), dtype=np.complex128)
    weights = stream.doubles(k)
    for t in range(k):
        p = random_psd(stream, m, rank=1)
        q = random_psd(stream, n, rank=1)
        acc += weights[t] * np.kron(p, q)
    return (acc + acc.conj().T) / 2


def matrix_unit_block(n: int) -> np.ndarray:
    """The 2n x 2n block matrix [E_{i,j}], i,j in {1,2}, where E_{i,j} is the
    n x n matrix unit with 1 at entry (i, j) and 0 elsewhere.

    For n = 1 the units with an index of 2 have no such entry and are zero
    (degenerate case; the resulting E is diag(1, 0))."""
    out = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    for i in range(2):
        for j in range(2):
            if i < n and j < n:
                out[i * n + i, j * n + j] = 1
    return out


def ones_kron(m: int, n: int) -> np.ndarray:
    return np.kron(np.ones((m, m)), np.ones((n, n))).astype(np.complex128)


def gen(spec: GenSpec):
    """Produce the instance a GenSpec describes; pure in the spec."""
    stream = Stream(spec.seed)
    m, n = spec.m, spec.n
    if spec.kind == "psd":
        return BlockMatrix(m, n, random_psd(stream, m * n, spec.rank))
    if spec.kind == "ppt":
        return BlockMatrix(m, n, random_ppt(stream, m, n))
    if spec.kind == "hermitian":
        return BlockMatrix(m, n, random_hermitian(stream, m * n))
    if spec.kind == "gram-pair":
        return ginibre(stream, m, n), ginibre(stream, m, n)
    if spec.kind == "real-int":
        return stream.integers(-spec.int_bound, spec.int_bound, (m, n))
    if spec.kind == "matrix-unit-E":
        return BlockMatrix(2, n, matrix_unit_block(n))
    if spec.kind == "ones-kron":
        return BlockMatrix(m, n, ones_kron(m, n))
    raise AssertionError("unreachable")
