"""Shared test helpers and frozen amplitude fixtures."""

import math

import numpy as np

from graphsym import make_state
from graphsym.states import flat_index

# Three-qubit CZ state of the path 1-2-3, times sqrt(8).
H1_PATTERN = {
    "000": 1, "100": 1, "010": 1, "001": 1,
    "110": -1, "101": 1, "011": -1, "111": 1,
}

# The same state after swapping qubits 1 and 2, times sqrt(8).
H1_SWAPPED_PATTERN = {
    "000": 1, "100": 1, "010": 1, "001": 1,
    "110": -1, "101": -1, "011": 1, "111": 1,
}

# Three-qubit CZ state of the single edge {1,2} with vertex 3 isolated.
H2_PATTERN = {
    "000": 1, "100": 1, "010": 1, "001": 1,
    "110": -1, "101": 1, "011": 1, "111": -1,
}

# Oriented-graph state on {2->1, 3->1} at three levels, times sqrt(6).
TRIPLE_ONE_EDGE_PATTERN = {
    "210": 1, "011": 1, "112": 1,
    "100": -1, "201": -1, "002": -1,
}

# Oriented-graph state on {2->1, 3->1, 3->2} at three levels, times sqrt(6).
TRIPLE_COMPLETE_PATTERN = {
    "210": 1, "021": 1, "102": 1,
    "120": -1, "201": -1, "012": -1,
}

# Antisymmetric pair, times sqrt(2).
BELL_PATTERN = {"01": 1, "10": -1}


def pattern_state(num_qudits, levels, pattern, scale=None):
    """State whose amplitude at each digit string is coeff * scale."""
    if scale is None:
        scale = 1.0 / math.sqrt(len(pattern))
    amps = np.zeros(levels**num_qudits, dtype=complex)
    for digits, coeff in pattern.items():
        label = tuple(int(c) for c in digits)
        amps[flat_index(label, levels)] = coeff * scale
    return make_state(num_qudits, levels, amps)


def random_state(num_qudits, levels, rng):
    size = levels**num_qudits
    amps = rng.normal(size=size) + 1j * rng.normal(size=size)
    amps /= np.linalg.norm(amps)
    return make_state(num_qudits, levels, amps)
