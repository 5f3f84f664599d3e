"""Pure-numpy gate kernels.

Every kernel takes a flat complex128 amplitude array plus the register shape
(n qudits, d levels) and 0-based qudit positions, and returns a fresh array.
These are the vectorized reference implementations; _kernels_numba holds the
JIT-compiled flat-loop equivalents.
"""

from __future__ import annotations

import numpy as np

NAME = "numpy"


def cz(amps: np.ndarray, n: int, d: int, a: int, b: int) -> np.ndarray:
    """Negate amplitudes of every label with digit 1 at both positions."""
    out = amps.reshape((d,) * n).copy()
    sel: list = [slice(None)] * n
    sel[a] = 1
    sel[b] = 1
    out[tuple(sel)] *= -1.0
    return out.reshape(-1)


def shift(amps: np.ndarray, n: int, d: int, k: int) -> np.ndarray:
    """Increment the digit at position k by 1 mod d."""
    view = amps.reshape((d,) * n)
    return np.roll(view, 1, axis=k).reshape(-1)


def gr(amps: np.ndarray, n: int, d: int, c: int, t: int) -> np.ndarray:
    """Replace the digit at target t with (digit_c - digit_t) mod d."""
    view = amps.reshape((d,) * n)
    out = np.empty_like(view)
    src: list = [slice(None)] * n
    dst: list = [slice(None)] * n
    for j in range(d):
        src[c] = j
        dst[c] = j
        for i in range(d):
            src[t] = i
            dst[t] = (j - i) % d
            out[tuple(dst)] = view[tuple(src)]
    return out.reshape(-1)


def permute(amps: np.ndarray, n: int, d: int, images: np.ndarray) -> np.ndarray:
    """Move the digit at position i to position images[i] on every label."""
    view = amps.reshape((d,) * n)
    inv = np.empty(n, dtype=np.int64)
    inv[images] = np.arange(n, dtype=np.int64)
    return np.ascontiguousarray(view.transpose(tuple(inv))).reshape(-1)


def hadamard(amps: np.ndarray, n: int, d: int, k: int, hmat: np.ndarray) -> np.ndarray:
    """Apply the d x d matrix hmat along the axis of position k."""
    view = amps.reshape((d,) * n)
    out = np.tensordot(hmat, view, axes=([1], [k]))
    return np.ascontiguousarray(np.moveaxis(out, 0, k)).reshape(-1)
