"""Exchange-symmetry classification of multiqudit states.

A state is fully symmetric when every subsystem permutation fixes it and
fully antisymmetric when every permutation multiplies it by its signature.
Both conditions are multiplicative under composition, so checking the n-1
adjacent transpositions suffices; check_full_group is the brute-force
oracle over all n! permutations that validates this fast path.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import perm
from .errors import CapacityError
from .gates import apply_permutation
from .states import DEFAULT_TOL, State, equal_exact

#: check_full_group refuses factorials beyond this many permutations.
MAX_GROUP_SIZE = 1_000_000


@dataclass(frozen=True)
class SymmetryClass:
    """Classification outcome; prefix is set only for the prefix kind."""

    kind: str  # "symmetric" | "antisymmetric" | "prefix" | "none"
    prefix: int | None = None

    def label(self) -> str:
        if self.kind == "symmetric":
            return "FullySymmetric"
        if self.kind == "antisymmetric":
            return "FullyAntisymmetric"
        if self.kind == "prefix":
            return f"AntisymmetricOnPrefix({self.prefix})"
        return "NoSymmetry"


FULLY_SYMMETRIC = SymmetryClass("symmetric")
FULLY_ANTISYMMETRIC = SymmetryClass("antisymmetric")
NO_SYMMETRY = SymmetryClass("none")


def antisymmetric_on_prefix(k: int) -> SymmetryClass:
    return SymmetryClass("prefix", k)


def _swapped(state: State, i: int) -> State:
    # Adjacent transposition of 0-based positions (i, i+1).
    return apply_permutation(state, perm.transposition(state.num_qudits, i, i + 1))


def _negates(a: State, b: State, tol: float) -> bool:
    return float(np.max(np.abs(a.amps + b.amps))) <= tol


def is_symmetric(state: State, tol: float = DEFAULT_TOL) -> bool:
    """True when every adjacent transposition leaves the state unchanged."""
    return all(
        equal_exact(_swapped(state, i), state, tol)
        for i in range(state.num_qudits - 1)
    )


def is_antisymmetric(state: State, tol: float = DEFAULT_TOL) -> bool:
    """True when every adjacent transposition negates the state."""
    return all(
        _negates(_swapped(state, i), state, tol)
        for i in range(state.num_qudits - 1)
    )


def classify(state: State, tol: float = DEFAULT_TOL) -> SymmetryClass:
    """Full classification via adjacent transpositions.

    Precedence: fully symmetric, then fully antisymmetric, then the largest
    k in [2, n-1] such that every adjacent transposition inside positions
    1..k negates the state, then no symmetry.
    """
    n = state.num_qudits
    swapped = [_swapped(state, i) for i in range(n - 1)]
    if all(equal_exact(s, state, tol) for s in swapped):
        return FULLY_SYMMETRIC
    negs = [_negates(s, state, tol) for s in swapped]
    if all(negs):
        return FULLY_ANTISYMMETRIC
    run = 0
    for neg in negs:
        if not neg:
            break
        run += 1
    if run >= 1:
        return antisymmetric_on_prefix(run + 1)
    return NO_SYMMETRY


def check_full_group(state: State, tol: float = DEFAULT_TOL) -> SymmetryClass:
    """Same classification as classify, tested against every permutation.

    Exists to validate the generator fast path; cost is n! gate
    applications, refused beyond MAX_GROUP_SIZE.
    """
    n = state.num_qudits
    if math.factorial(n) > MAX_GROUP_SIZE:
        raise CapacityError(f"{n}! permutations exceed {MAX_GROUP_SIZE}")
    everyone = list(itertools.permutations(range(n)))
    if all(equal_exact(apply_permutation(state, p), state, tol) for p in everyone):
        return FULLY_SYMMETRIC
    if _antisymmetric_under_all(state, everyone, tol):
        return FULLY_ANTISYMMETRIC
    for k in range(n - 1, 1, -1):
        extended = [
            tuple(p) + tuple(range(k, n))
            for p in itertools.permutations(range(k))
        ]
        if _antisymmetric_under_all(state, extended, tol):
            return antisymmetric_on_prefix(k)
    return NO_SYMMETRY


def _antisymmetric_under_all(state: State, perms, tol: float) -> bool:
    for p in perms:
        moved = apply_permutation(state, p)
        if perm.signature(p) == 1:
            if not equal_exact(moved, state, tol):
                return False
        elif not _negates(moved, state, tol):
            return False
    return True
