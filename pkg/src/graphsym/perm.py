"""Permutations of subsystem positions, in one-line image form on {0..n-1}."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import DomainError


def as_permutation(images: Sequence[int]) -> np.ndarray:
    """Validate one-line form and return it as an int64 array."""
    arr = np.asarray(images, dtype=np.int64).reshape(-1)
    n = arr.size
    if n == 0:
        raise DomainError("empty permutation")
    seen = np.zeros(n, dtype=bool)
    for v in arr:
        if not 0 <= v < n or seen[v]:
            raise DomainError(f"{list(arr)} is not a permutation of 0..{n - 1}")
        seen[v] = True
    return arr


def identity(n: int) -> np.ndarray:
    return np.arange(n, dtype=np.int64)


def transposition(n: int, i: int, j: int) -> np.ndarray:
    """Permutation swapping positions i and j (0-based)."""
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise DomainError(f"invalid transposition ({i}, {j}) on {n} positions")
    p = identity(n)
    p[i], p[j] = j, i
    return p


def compose(p: Sequence[int], q: Sequence[int]) -> np.ndarray:
    """Composition (p o q): position i maps to p[q[i]]."""
    p = as_permutation(p)
    q = as_permutation(q)
    if p.size != q.size:
        raise DomainError("cannot compose permutations of different sizes")
    return p[q]


def inverse(p: Sequence[int]) -> np.ndarray:
    p = as_permutation(p)
    inv = np.empty_like(p)
    inv[p] = np.arange(p.size, dtype=np.int64)
    return inv


def signature(p: Sequence[int]) -> int:
    """+1 for even permutations, -1 for odd; equals (-1)**inversions."""
    p = as_permutation(p)
    seen = np.zeros(p.size, dtype=bool)
    sign = 1
    for start in range(p.size):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
