"""State builders.

Four constructions live here:

* cz_graph_state: controlled-Z graph state of an undirected graph on qubits.
* antisymmetric_state: the recursive chain that grows an antisymmetric pair
  one qudit at a time with shift, Fourier and gr gates.
* oracle_antisymmetric_state: closed-form summation over cyclically shifted
  permutation labels, used as an independent cross-check of the recursion.
* gr_graph_state: the oriented-graph generalization, incorporating vertices
  in index order and driving the gates from adjacency and edge orientation.

The recursive builders work at a growing working dimension: the step that
incorporates vertex m uses m-level arithmetic (the Fourier gate spans m
levels and the gr subtraction is mod m), with the state embedded into the
larger register first. gr_graph_state caps the working dimension at the
requested number of levels, so registers smaller than the vertex count are
legal and simply wrap.

Every gr_graph_state run is described by a Trace, a replayable list of
elementary steps; replaying a trace reproduces the returned state exactly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from . import gates, graphs, perm, states
from .errors import DomainError
from .states import State


@dataclass(frozen=True)
class Trace:
    """Replayable construction record for an oriented-graph state."""

    steps: tuple
    warnings: tuple = field(default=())


def _bell_pair() -> State:
    amps = np.zeros(4, dtype=np.complex128)
    amps[states.flat_index((0, 1), 2)] = 1.0 / math.sqrt(2.0)
    amps[states.flat_index((1, 0), 2)] = -1.0 / math.sqrt(2.0)
    return states._wrap(2, 2, amps)


def replay(trace: Trace) -> State:
    """Execute a Trace from scratch and return the resulting state."""
    state = None
    for step in trace.steps:
        op = step[0]
        if op == "pair-bell":
            state = _bell_pair()
        elif op == "pair-zero":
            state = states.basis_state(2, 2, (0, 0))
        elif op == "embed":
            state = states.embed(state, step[1])
        elif op == "attach":
            state = states.tensor(state, states.basis_state(1, state.levels, (0,)))
        elif op == "hadamard":
            state = gates.apply_hadamard(state, step[1])
        elif op == "shift":
            state = gates.apply_shift(state, step[1])
        elif op == "gr":
            state = gates.apply_gr(state, step[1], step[2])
        else:
            raise DomainError(f"unknown trace step {op!r}")
    if state is None:
        raise DomainError("empty trace")
    return state


def cz_graph_state(g: graphs.UndirectedGraph) -> State:
    """Controlled-Z graph state: CZ along every edge of |+...+>.

    Edge order does not matter; edges are applied in sorted order for
    determinism anyway.
    """
    n = g.num_vertices
    states.check_capacity(n, 2)
    amps = np.full(1 << n, 2.0 ** (-n / 2.0), dtype=np.complex128)
    state = states._wrap(n, 2, amps)
    for a, b in g.sorted_edges():
        state = gates.apply_cz(state, a, b)
    return state


def antisymmetric_state(n: int, d: int | None = None) -> State:
    """Recursive antisymmetric chain on n qudits, embedded in d levels.

    Starts from (|01> - |10>)/sqrt(2). The step adding qudit m shifts every
    earlier qudit up by one, appends the uniform m-level superposition, and
    subtracts each earlier digit from the new one with gr gates.
    """
    if n < 2:
        raise DomainError("the antisymmetric chain starts at two qudits")
    if d is None:
        d = n
    if d < n:
        raise DomainError(f"need at least {n} levels for {n} qudits, got {d}")
    states.check_capacity(n, d)
    state = _bell_pair()
    for m in range(3, n + 1):
        state = states.embed(state, m)
        for i in range(1, m):
            state = gates.apply_shift(state, i)
        state = states.tensor(state, states.basis_state(1, m, (0,)))
        state = gates.apply_hadamard(state, m)
        for i in range(1, m):
            state = gates.apply_gr(state, m, i)
    return states.embed(state, d)


def oracle_antisymmetric_state(n: int, d: int | None = None) -> State:
    """Closed-form summation cross-check for the antisymmetric chain.

    Sums n * (n-1)! signed basis terms: for every cyclic offset k and every
    permutation s of {0..n-2}, the label carries digits (k - (s_i + 1)) mod n
    on the first n-1 qudits and k on the last, weighted by the signature
    of s. Only defined at d == n, where the mod-n digit arithmetic closes.
    """
    if n < 2:
        raise DomainError("the summation form starts at two qudits")
    if d is None:
        d = n
    if d != n:
        raise DomainError(f"the summation form requires levels == {n}, got {d}")
    states.check_capacity(n, n)
    amps = np.zeros(n**n, dtype=np.complex128)
    for k in range(n):
        for sigma in itertools.permutations(range(n - 1)):
            digits = [(k - (s + 1)) % n for s in sigma]
            digits.append(k)
            amps[states.flat_index(digits, n)] += perm.signature(sigma)
    amps /= math.sqrt(math.factorial(n))
    return states._wrap(n, n, amps)


def alternator_state(n: int, d: int | None = None) -> State:
    """Signed sum over all orderings of |0 1 ... n-1>, normalized.

    The unique fully antisymmetric state when d == n; for d > n the same
    amplitude pattern embedded in the larger register.
    """
    if n < 1:
        raise DomainError("need at least one qudit")
    if d is None:
        d = n
    if d < n:
        raise DomainError(f"need at least {n} levels for {n} qudits, got {d}")
    states.check_capacity(n, d)
    amps = np.zeros(d**n, dtype=np.complex128)
    for p in itertools.permutations(range(n)):
        amps[states.flat_index(p, d)] += perm.signature(p)
    amps /= math.sqrt(math.factorial(n))
    return states._wrap(n, d, amps)


def _step_gates(g: graphs.OrientedGraph, m: int) -> list:
    """gr gates for the step adding vertex m: edges joining m to 1..m-1.

    Each edge (origin, target) is applied as gr(control=origin,
    target=target). Within the step, gates run in ascending target order,
    ties broken by ascending control.
    """
    incident = [
        (o, t)
        for o, t in g.edges
        if (o == m and t < m) or (t == m and o < m)
    ]
    incident.sort(key=lambda e: (e[1], e[0]))
    return incident


def gr_graph_state(g: graphs.OrientedGraph, d: int | None = None) -> tuple[State, Trace]:
    """State of an oriented graph, built by adding vertices in index order.

    The two-vertex base is |00> without an edge and (|01> - |10>)/sqrt(2)
    with one, whatever the orientation. When vertex m joins with at least
    one lower-indexed neighbor, those neighbors are shifted up by one, the
    new qudit starts in the uniform superposition, and one gr gate runs per
    incident edge, oriented by the edge's origin. A neighborless vertex is
    appended as |0>.

    The working dimension at step m is min(m, d). Returns the state and the
    Trace that rebuilds it; the trace carries a warning when the graph is
    complete but d is too small for the register to hold n distinct digits.
    """
    n = g.num_vertices
    if d is None:
        d = n
    if d < 2:
        raise DomainError(f"need at least two levels, got {d}")
    states.check_capacity(n, d)

    steps = [("pair-bell",) if g.has_pair(1, 2) else ("pair-zero",)]
    cur = 2
    for m in range(3, n + 1):
        q = min(m, d)
        if q > cur:
            steps.append(("embed", q))
            cur = q
        lower = sorted(v for v in g.neighbors(m) if v < m)
        if not lower:
            steps.append(("attach", m))
            continue
        for i in lower:
            steps.append(("shift", i))
        steps.append(("attach", m))
        steps.append(("hadamard", m))
        for control, target in _step_gates(g, m):
            steps.append(("gr", control, target))
    if d > cur:
        steps.append(("embed", d))

    warnings = ()
    if d < n and graphs.is_complete(g):
        warnings = (
            f"complete graph on {n} vertices built with {d} levels; "
            f"digit arithmetic wraps and the result is not the "
            f"antisymmetric chain state",
        )
    trace = Trace(tuple(steps), warnings)
    return replay(trace), trace
