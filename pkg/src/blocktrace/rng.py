"""Counter-based deterministic random stream.

The k-th raw word for seed s is splitmix64(s + (k+1) * GAMMA) with the usual
finalizer constants, so any counter range can be produced independently and
the stream is reproducible bit-for-bit across platforms and languages.
"""

from __future__ import annotations

import numpy as np

GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)

_U64 = np.uint64
_MASK = np.uint64(0xFFFFFFFFFFFFFFFF)


def _mix(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> _U64(30))) * _MIX1
    z = (z ^ (z >> _U64(27))) * _MIX2
    return z ^ (z >> _U64(31))


def splitmix64(seed: int, start: int, count: int) -> np.ndarray:
    """Raw words at counters [start, start+count) for the given seed."""
    with np.errstate(over="ignore"):
        counters = np.arange(start + 1, start + count + 1, dtype=np.uint64)
        return _mix((_U64(seed & 0xFFFFFFFFFFFFFFFF) + counters * GAMMA) & _MASK)


def derive_seed(base: int, *tokens) -> int:
    """Stable sub-seed from a base seed and a mix of str/int tokens."""
    h = np.uint64(base & 0xFFFFFFFFFFFFFFFF)
    with np.errstate(over="ignore"):
        for tok in tokens:
            if isinstance(tok, str):
                data = tok.encode("utf-8")
            elif isinstance(tok, int):
                data = tok.to_bytes(8, "little", signed=tok < 0)
            else:
                raise TypeError(f"unsupported token type {type(tok)!r}")
            for byte in data:
                h = _mix((h ^ _U64(byte)) * GAMMA + GAMMA)
    return int(h)


class Stream:
    """Value-like stateful view over the counter-based stream.

    Copies are cheap; parallel trials take independent streams by deriving
    distinct seeds, never by sharing one stream.
    """

    def __init__(self, seed: int, counter: int = 0):
        self.seed = int(seed) & 0xFFFFFFFFFFFFFFFF
        self.counter = int(counter)

    def words(self, count: int) -> np.ndarray:
        out = splitmix64(self.seed, self.counter, count)
        self.counter += count
        return out

    def doubles(self, count: int) -> np.ndarray:
        """Uniform doubles in (0, 1]; 53-bit resolution, never exactly 0."""
        return ((self.words(count) >> _U64(11)).astype(np.float64) + 1.0) * 2.0**-53

    def gaussians(self, count: int) -> np.ndarray:
        """Standard normals via Box-Muller on consecutive double pairs."""
        pairs = (count + 1) // 2
        u = self.doubles(2 * pairs)
        r = np.sqrt(-2.0 * np.log(u[:pairs]))
        theta = 2.0 * np.pi * u[pairs:]
        out = np.concatenate([r * np.cos(theta), r * np.sin(theta)])
        return out[:count]

    def complex_gaussians(self, shape) -> np.ndarray:
        """Matrix of independent standard complex Gaussians (re, im ~ N(0,1))."""
        shape = tuple(shape)
        count = int(np.prod(shape)) if shape else 1
        g = self.gaussians(2 * count)
        return (g[:count] + 1j * g[count:]).reshape(shape)

    def integers(self, low: int, high: int, shape) -> np.ndarray:
        """Uniform integers in [low, high] via rejection-free modular draw.

        The modulo bias is below 2^-50 for the bounds used here (|range| <=
        a few hundred), irrelevant for test-instance generation."""
        if high < low:
            raise ValueError("empty integer range")
        shape = tuple(shape)
        count = int(np.prod(shape)) if shape else 1
        span = np.uint64(high - low + 1)
        vals = (self.words(count) % span).astype(np.int64) + low
        return vals.reshape(shape)
