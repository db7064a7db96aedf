"""Arithmetic over GF(2^8) with the irreducible polynomial 0x11D.

Log/antilog tables are built once at import; 0x02 is a generator for
this polynomial. Scalars are plain ints in [0, 255], vectors are
numpy uint8 arrays.
"""

import numpy as np

POLY = 0x11D
ORDER = 255

EXP = np.zeros(256, dtype=np.uint8)
LOG = np.zeros(256, dtype=np.int32)


def _build_tables():
    x = 1
    for i in range(ORDER):
        EXP[i] = x
        LOG[x] = i
        x <<= 1
        if x & 0x100:
            x ^= POLY
    EXP[ORDER] = EXP[0]


_build_tables()

# MUL_TABLE[a, b] = a*b; row MUL_TABLE[c] maps a whole vector at once.
MUL_TABLE = np.zeros((256, 256), dtype=np.uint8)
_l = LOG[1:]
MUL_TABLE[1:, 1:] = EXP[(_l[:, None] + _l[None, :]) % ORDER]
del _l


def add(a, b):
    return a ^ b


def mul(a, b):
    return int(MUL_TABLE[a, b])


def inv(a):
    if a == 0:
        raise ValueError("zero has no multiplicative inverse")
    return int(EXP[(ORDER - LOG[a]) % ORDER])


def scale_vec(c, vec):
    """c * vec elementwise; vec is uint8 ndarray."""
    if c == 0:
        return np.zeros_like(vec)
    if c == 1:
        return vec.copy()
    return MUL_TABLE[c][vec]


def addmul_vec(dst, c, vec):
    """dst ^= c * vec, in place."""
    if c == 0:
        return
    if c == 1:
        dst ^= vec
    else:
        dst ^= MUL_TABLE[c][vec]
