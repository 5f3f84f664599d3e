"""Dense state vectors for registers of n qudits with d levels each.

Basis convention: the label (k1, k2, ..., kn) with qudit 1 written leftmost
maps to the flat index sum_i k_i * d**(n-i), i.e. qudit 1 is the most
significant digit. A state with n qudits and d levels is a read-only
complex128 array of exactly d**n amplitudes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import CapacityError, DomainError

#: Hard cap on amplitude-array length; requests beyond it raise CapacityError.
MAX_AMPLITUDES = 10_000_000

#: Default tolerance for all equality tests in the package.
DEFAULT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class State:
    """Immutable dense amplitude vector over the computational basis."""

    num_qudits: int
    levels: int
    amps: np.ndarray

    @property
    def dim(self) -> int:
        return self.amps.size

    def digit_view(self) -> np.ndarray:
        """Read-only view shaped (d,) * n; axis i indexes qudit i + 1."""
        return self.amps.reshape((self.levels,) * self.num_qudits)


def check_capacity(num_qudits: int, levels: int) -> None:
    """Reject register shapes whose amplitude count exceeds MAX_AMPLITUDES."""
    if levels ** num_qudits > MAX_AMPLITUDES:
        raise CapacityError(
            f"{levels}**{num_qudits} amplitudes exceed the cap of {MAX_AMPLITUDES}"
        )


def _wrap(num_qudits: int, levels: int, amps: np.ndarray) -> State:
    # Fast path for freshly built arrays the caller owns.
    amps.setflags(write=False)
    return State(num_qudits, levels, amps)


def make_state(num_qudits: int, levels: int, amps) -> State:
    """Validate and copy raw amplitudes into an immutable State."""
    if num_qudits < 1:
        raise DomainError(f"need at least one qudit, got {num_qudits}")
    if levels < 2:
        raise DomainError(f"need at least two levels, got {levels}")
    check_capacity(num_qudits, levels)
    arr = np.array(amps, dtype=np.complex128, order="C", copy=True).reshape(-1)
    if arr.size != levels**num_qudits:
        raise DomainError(
            f"expected {levels}**{num_qudits} amplitudes, got {arr.size}"
        )
    if not np.all(np.isfinite(arr.view(np.float64))):
        raise DomainError("amplitudes must be finite")
    return _wrap(num_qudits, levels, arr)


def flat_index(digits: Sequence[int], levels: int) -> int:
    """Flat index of a basis label, qudit 1 most significant."""
    idx = 0
    for k in digits:
        idx = idx * levels + k
    return idx


def digits_of(index: int, num_qudits: int, levels: int) -> tuple[int, ...]:
    """Inverse of flat_index."""
    out = []
    for _ in range(num_qudits):
        out.append(index % levels)
        index //= levels
    return tuple(reversed(out))


def basis_state(num_qudits: int, levels: int, digits: Sequence[int]) -> State:
    """Unit vector on the computational basis label `digits`."""
    if num_qudits < 1:
        raise DomainError(f"need at least one qudit, got {num_qudits}")
    if levels < 2:
        raise DomainError(f"need at least two levels, got {levels}")
    if len(digits) != num_qudits:
        raise DomainError(f"label has {len(digits)} digits, expected {num_qudits}")
    for k in digits:
        if not 0 <= k < levels:
            raise DomainError(f"digit {k} outside [0, {levels})")
    check_capacity(num_qudits, levels)
    amps = np.zeros(levels**num_qudits, dtype=np.complex128)
    amps[flat_index(digits, levels)] = 1.0
    return _wrap(num_qudits, levels, amps)


def tensor(a: State, b: State) -> State:
    """Tensor product; the label of the result is label_a followed by label_b."""
    if a.levels != b.levels:
        raise DomainError(f"mismatched levels: {a.levels} vs {b.levels}")
    check_capacity(a.num_qudits + b.num_qudits, a.levels)
    return _wrap(a.num_qudits + b.num_qudits, a.levels, np.kron(a.amps, b.amps))


def inner_product(a: State, b: State) -> complex:
    """<a|b> with conjugation on a."""
    _check_same_shape(a, b)
    return complex(np.vdot(a.amps, b.amps))


def norm(state: State) -> float:
    return float(np.linalg.norm(state.amps))


def negate(state: State) -> State:
    return _wrap(state.num_qudits, state.levels, -state.amps)


def equal_exact(a: State, b: State, tol: float = DEFAULT_TOL) -> bool:
    """Componentwise equality: max |a_i - b_i| <= tol. Phase sensitive."""
    _check_same_shape(a, b)
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    return float(np.max(np.abs(a.amps - b.amps))) <= tol


def equal_up_to_global_phase(a: State, b: State, tol: float = DEFAULT_TOL) -> bool:
    """True when |<a|b>| >= 1 - tol. Both states must be normalized."""
    _check_same_shape(a, b)
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    return abs(np.vdot(a.amps, b.amps)) >= 1.0 - tol


def embed(state: State, levels: int) -> State:
    """Reinterpret a state in a register with more levels per qudit.

    Basis labels are preserved digit for digit; the new levels are unused.
    """
    if levels < state.levels:
        raise DomainError(
            f"cannot embed {state.levels}-level state into {levels} levels"
        )
    if levels == state.levels:
        return state
    n = state.num_qudits
    check_capacity(n, levels)
    src = np.flatnonzero(state.amps)
    digits = np.unravel_index(src, (state.levels,) * n)
    amps = np.zeros(levels**n, dtype=np.complex128)
    amps[np.ravel_multi_index(digits, (levels,) * n)] = state.amps[src]
    return _wrap(n, levels, amps)


def _check_same_shape(a: State, b: State) -> None:
    if a.num_qudits != b.num_qudits or a.levels != b.levels:
        raise DomainError(
            f"shape mismatch: ({a.num_qudits}, {a.levels}) vs "
            f"({b.num_qudits}, {b.levels})"
        )
