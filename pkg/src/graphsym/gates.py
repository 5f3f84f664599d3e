"""Matrix-free application of single- and two-qudit gates.

All gates here are either basis-label permutations (shift, gr, subsystem
permutations), diagonal sign flips (cz), or a single-axis unitary mix
(hadamard), so they run in O(d**n) without materializing d**n x d**n
matrices. Qudit indices are 1-based, matching vertex numbering; subsystem
permutations are 0-based one-line arrays over positions {0..n-1}.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from . import perm
from .backend import kernels
from .errors import DomainError
from .states import State, _wrap


@lru_cache(maxsize=None)
def fourier_matrix(d: int) -> np.ndarray:
    """d x d matrix with entries omega**(j*m) / sqrt(d), omega = e^(2i pi/d).

    Column j is the image of basis ket |j>.
    """
    if d < 2:
        raise DomainError(f"need at least two levels, got {d}")
    j, m = np.meshgrid(np.arange(d), np.arange(d))
    mat = np.exp(2j * np.pi * j * m / d) / np.sqrt(d)
    mat.setflags(write=False)
    return mat


def _position(state: State, k: int, role: str) -> int:
    if not 1 <= k <= state.num_qudits:
        raise DomainError(
            f"{role} index {k} outside [1, {state.num_qudits}]"
        )
    return k - 1


def apply_cz(state: State, a: int, b: int) -> State:
    """Controlled-Z on qubits a and b: negates every |..1..1..> amplitude."""
    if state.levels != 2:
        raise DomainError("cz is defined on two-level systems only")
    pa = _position(state, a, "qudit")
    pb = _position(state, b, "qudit")
    if pa == pb:
        raise DomainError("cz needs two distinct qudits")
    out = kernels().cz(state.amps, state.num_qudits, state.levels, pa, pb)
    return _wrap(state.num_qudits, state.levels, out)


def apply_hadamard(state: State, k: int) -> State:
    """Fourier gate on qudit k: |j> -> (1/sqrt d) sum_m omega**(j m) |m>."""
    pk = _position(state, k, "qudit")
    hmat = fourier_matrix(state.levels)
    out = kernels().hadamard(state.amps, state.num_qudits, state.levels, pk, hmat)
    return _wrap(state.num_qudits, state.levels, out)


def apply_shift(state: State, k: int) -> State:
    """Cyclic shift on qudit k: |j> -> |j + 1 mod d>."""
    pk = _position(state, k, "qudit")
    out = kernels().shift(state.amps, state.num_qudits, state.levels, pk)
    return _wrap(state.num_qudits, state.levels, out)


def apply_gr(state: State, control: int, target: int) -> State:
    """Two-qudit gate |i>_t |j>_c -> |j - i mod d>_t |j>_c.

    The control digit is unchanged; the target digit becomes the mod-d
    difference. Not symmetric in its arguments, so callers must fix the
    orientation.
    """
    pc = _position(state, control, "control")
    pt = _position(state, target, "target")
    if pc == pt:
        raise DomainError("gr needs two distinct qudits")
    out = kernels().gr(state.amps, state.num_qudits, state.levels, pc, pt)
    return _wrap(state.num_qudits, state.levels, out)


def apply_permutation(state: State, images: Sequence[int]) -> State:
    """Relabel subsystems: the digit at position i moves to position images[i].

    Equivalently, the amplitude of label L moves to the label L' with
    L'[images[i]] = L[i].
    """
    p = perm.as_permutation(images)
    if p.size != state.num_qudits:
        raise DomainError(
            f"permutation length {p.size} != number of qudits {state.num_qudits}"
        )
    out = kernels().permute(state.amps, state.num_qudits, state.levels, p)
    return _wrap(state.num_qudits, state.levels, out)
