"""numba-compiled gate kernels.

Same call surface as _kernels_numpy. The stride of 0-based position p in the
flat array is d**(n-1-p). Single- and two-position kernels move contiguous
slices (everything less significant than the touched positions stays a
block); permute walks the destination index with an odometer so no per
element division is needed.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def cz(amps, n, d, a, b):
    out = amps.copy()
    sa = d ** (n - 1 - a)
    sb = d ** (n - 1 - b)
    if sa < sb:
        sa, sb = sb, sa
    for outer in range(0, out.size, d * sa):
        hi = outer + sa  # digit 1 at the more significant position
        for mid in range(0, sa, d * sb):
            lo = hi + mid + sb
            for f in range(lo, lo + sb):
                out[f] = -out[f]
    return out


@njit(cache=True)
def shift(amps, n, d, k):
    out = np.empty_like(amps)
    s = d ** (n - 1 - k)
    for outer in range(0, amps.size, d * s):
        for i in range(d):
            src = outer + i * s
            dst = outer + ((i + 1) % d) * s
            out[dst : dst + s] = amps[src : src + s]
    return out


@njit(cache=True)
def gr(amps, n, d, c, t):
    out = np.empty_like(amps)
    st = d ** (n - 1 - t)
    digits = np.zeros(n, dtype=np.int64)
    for f in range(amps.size):
        diff = digits[c] - digits[t]
        if diff < 0:
            diff += d
        out[f + (diff - digits[t]) * st] = amps[f]
        i = n - 1
        while i >= 0:  # odometer step
            digits[i] += 1
            if digits[i] < d:
                break
            digits[i] = 0
            i -= 1
    return out


@njit(cache=True)
def permute(amps, n, d, images):
    out = np.empty_like(amps)
    strides = np.empty(n, dtype=np.int64)
    s = 1
    for p in range(n - 1, -1, -1):
        strides[p] = s
        s *= d
    dest = np.empty(n, dtype=np.int64)
    for i in range(n):
        dest[i] = strides[images[i]]
    digits = np.zeros(n, dtype=np.int64)
    g = 0
    for f in range(amps.size):
        out[g] = amps[f]
        i = n - 1
        while i >= 0:  # odometer step on the source digits
            digits[i] += 1
            g += dest[i]
            if digits[i] < d:
                break
            digits[i] = 0
            g -= d * dest[i]
            i -= 1
    return out


@njit(cache=True)
def hadamard(amps, n, d, k, hmat):
    out = np.zeros_like(amps)
    right = d ** (n - 1 - k)
    left = amps.size // (d * right)
    for l in range(left):
        base = l * d * right
        for j in range(d):
            src = base + j * right
            for m in range(d):
                w = hmat[m, j]
                dst = base + m * right
                for r in range(right):
                    out[dst + r] += w * amps[src + r]
    return out
