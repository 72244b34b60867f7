"""Tour of the block-matrix primitives.

An mn x mn matrix is viewed as an m x m array of n x n blocks.  Everything
here is an exact index permutation or contraction, so equalities are checked
bit-for-bit, not up to tolerance.
"""

import numpy as np

from blocktrace import (
    BlockMatrix,
    partial_trace_1,
    partial_trace_2,
    partial_transpose,
    reshuffle,
)
from blocktrace.rng import Stream

m, n = 2, 3
a = BlockMatrix(m, n, Stream(1).complex_gaussians((m * n, m * n)))
print(f"block matrix with m={m} blocks per side, each {n}x{n}")

# the partial transpose swaps block positions without touching block interiors
tau = partial_transpose(a)
print("block (0,1) of the swap equals block (1,0) of the original:",
      np.array_equal(tau.block(0, 1), a.block(1, 0)))
print("applying it twice restores the matrix:",
      np.array_equal(partial_transpose(tau).dense, a.dense))

# the two partial traces contract different tensor legs
t1 = partial_trace_1(a)   # n x n: sum of the diagonal blocks
t2 = partial_trace_2(a)   # m x m: matrix of block traces
print("both carry the full trace:",
      np.isclose(np.trace(t1), np.trace(a.dense)),
      np.isclose(np.trace(t2), np.trace(a.dense)))

# the reshuffle swaps the roles of block index and intra-block index;
# on a Kronecker product it simply swaps the factors
x = Stream(2).complex_gaussians((m, m))
y = Stream(3).complex_gaussians((n, n))
k = BlockMatrix(m, n, np.kron(x, y))
print("reshuffle of a Kronecker product swaps the factors:",
      np.allclose(reshuffle(k).dense, np.kron(y, x)))

# and it exchanges the two partial traces, giving an independent oracle
print("tracing the inner factor = tracing the outer factor after reshuffle:",
      np.array_equal(partial_trace_2(a), partial_trace_1(reshuffle(a))))
