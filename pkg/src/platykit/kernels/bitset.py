"""Word-level bitset primitives shared by all kernels.

Vertex sets and adjacency rows are uint64 masks (one word for graphs on
up to 64 vertices, ``ceil(n/64)`` words beyond).  Everything here must
run both under numba and as plain NumPy scalar arithmetic, so masks stay
unsigned and shifts go through the precomputed tables below.
"""

import numpy as np

from platykit.accel import njit

U0 = np.uint64(0)
U1 = np.uint64(1)
FULL64 = np.uint64(0xFFFFFFFFFFFFFFFF)

# BIT[i] = 1 << i; LOWMASK[i] = (1 << i) - 1, with LOWMASK[64] = all ones.
BIT = np.left_shift(np.uint64(1), np.arange(64, dtype=np.uint64))
LOWMASK = np.concatenate([BIT - np.uint64(1), np.array([FULL64], dtype=np.uint64)])

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@njit
def popcount(x):
    """Number of set bits in a uint64 word (returned as int64)."""
    x = x - ((x >> U1) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit
def ctz(x):
    """Index of the lowest set bit as int64 (x must be nonzero)."""
    return popcount((x & (U0 - x)) - U1)
