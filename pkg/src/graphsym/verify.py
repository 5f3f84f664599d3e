"""Batch verification sweeps.

Three suites, each returning a machine-readable summary dict:

* theorem1: over every labeled graph up to max_n vertices, a CZ graph state
  with at least one edge is fully symmetric exactly when the graph is
  complete; edgeless graphs give the symmetric product state.
* impossibility: no CZ graph state classifies fully antisymmetric, and the
  all-zeros amplitude is exactly +2**(-N/2) on every graph.
* antisymmetry: classifications of the recursive antisymmetric chain,
  expected fully antisymmetric for odd n (and n = 2) and antisymmetric on
  the first n-1 qudits for even n >= 4.

Any violated expectation is recorded verbatim (graph edges plus the failing
permutation, 1-based one-line form) so a failing suite doubles as a
counterexample report.
"""

from __future__ import annotations

from . import perm
from .build import antisymmetric_state, cz_graph_state
from .errors import CapacityError
from .gates import apply_permutation
from .graphs import enumerate_undirected, find_witness, is_complete
from .states import DEFAULT_TOL, equal_exact
from .symmetry import FULLY_ANTISYMMETRIC, FULLY_SYMMETRIC, classify

MAX_THEOREM1_N = 5
MAX_IMPOSSIBILITY_N = 5
MAX_ANTISYMMETRY_N = 6

DEFAULTS = {"theorem1": 4, "impossibility": 4, "antisymmetry": 5}


def _one_based(images) -> list:
    return [int(i) + 1 for i in images]


def _breaking_permutation(g, state, tol: float):
    """A permutation witnessing non-symmetry, or one that should have.

    For a state that should be symmetric but is not: the first adjacent
    transposition changing it. For a non-complete graph whose state came
    out symmetric: the substructure transposition that was expected to
    change it.
    """
    n = state.num_qudits
    for i in range(n - 1):
        t = perm.transposition(n, i, i + 1)
        if not equal_exact(apply_permutation(state, t), state, tol):
            return _one_based(t)
    witness = find_witness(g)
    u, w, v = witness.vertices
    pair = (u, w) if witness.kind == "h1" else (w, v)
    return _one_based(perm.transposition(n, pair[0] - 1, pair[1] - 1))


def run_theorem1(max_n: int, tol: float = DEFAULT_TOL) -> dict:
    if max_n > MAX_THEOREM1_N:
        raise CapacityError(f"theorem1 sweep capped at {MAX_THEOREM1_N} vertices")
    checks = []
    for n in range(2, max_n + 1):
        checked = 0
        nontrivial = 0
        symmetric_nontrivial = 0
        counterexamples = []
        for g in enumerate_undirected(n):
            checked += 1
            state = cz_graph_state(g)
            symmetric = classify(state, tol) == FULLY_SYMMETRIC
            if not g.edges:
                if not symmetric:
                    counterexamples.append(
                        {
                            "num_vertices": n,
                            "edges": [],
                            "reason": "edgeless product state not symmetric",
                            "failing_permutation": _breaking_permutation(g, state, tol),
                        }
                    )
                continue
            nontrivial += 1
            if symmetric:
                symmetric_nontrivial += 1
            if symmetric != is_complete(g):
                counterexamples.append(
                    {
                        "num_vertices": n,
                        "edges": [list(e) for e in g.sorted_edges()],
                        "reason": (
                            "complete graph not symmetric"
                            if is_complete(g)
                            else "non-complete graph is symmetric"
                        ),
                        "failing_permutation": _breaking_permutation(g, state, tol),
                    }
                )
        checks.append(
            {
                "name": f"theorem1_n{n}",
                "graphs_checked": checked,
                "nontrivial_graphs": nontrivial,
                "symmetric_nontrivial": symmetric_nontrivial,
                "passed": not counterexamples and symmetric_nontrivial == 1,
                "counterexamples": counterexamples,
            }
        )
    return _summary("theorem1", max_n, checks)


def run_impossibility(max_n: int, tol: float = DEFAULT_TOL) -> dict:
    if max_n > MAX_IMPOSSIBILITY_N:
        raise CapacityError(f"impossibility sweep capped at {MAX_IMPOSSIBILITY_N} vertices")
    checks = []
    for n in range(1, max_n + 1):
        checked = 0
        counterexamples = []
        expected_corner = 2.0 ** (-n / 2.0)
        for g in enumerate_undirected(n):
            checked += 1
            state = cz_graph_state(g)
            if classify(state, tol) == FULLY_ANTISYMMETRIC:
                counterexamples.append(
                    {
                        "num_vertices": n,
                        "edges": [list(e) for e in g.sorted_edges()],
                        "reason": "CZ state classified fully antisymmetric",
                    }
                )
            corner = state.amps[0]
            if abs(corner.real - expected_corner) > 1e-12 or abs(corner.imag) > 1e-12:
                counterexamples.append(
                    {
                        "num_vertices": n,
                        "edges": [list(e) for e in g.sorted_edges()],
                        "reason": f"amplitude at |0...0> is {corner!r}, expected {expected_corner}",
                    }
                )
        checks.append(
            {
                "name": f"impossibility_n{n}",
                "graphs_checked": checked,
                "passed": not counterexamples,
                "counterexamples": counterexamples,
            }
        )
    return _summary("impossibility", max_n, checks)


def run_antisymmetry(max_n: int, tol: float = DEFAULT_TOL) -> dict:
    if max_n > MAX_ANTISYMMETRY_N:
        raise CapacityError(f"antisymmetry sweep capped at {MAX_ANTISYMMETRY_N} qudits")
    checks = []
    for n in range(2, max_n + 1):
        got = classify(antisymmetric_state(n, n), tol)
        if n == 2 or n % 2 == 1:
            expected = "FullyAntisymmetric"
        else:
            expected = f"AntisymmetricOnPrefix({n - 1})"
        checks.append(
            {
                "name": f"antisymmetry_n{n}",
                "expected": expected,
                "got": got.label(),
                "passed": got.label() == expected,
                "counterexamples": []
                if got.label() == expected
                else [{"num_qudits": n, "expected": expected, "got": got.label()}],
            }
        )
    return _summary("antisymmetry", max_n, checks)


def run_suite(name: str, max_n: int | None = None, tol: float = DEFAULT_TOL) -> dict:
    if name == "all":
        # Each suite runs at its own default, or at max_n clamped to its cap.
        parts = [
            run_theorem1(_pick(max_n, "theorem1", MAX_THEOREM1_N), tol),
            run_impossibility(_pick(max_n, "impossibility", MAX_IMPOSSIBILITY_N), tol),
            run_antisymmetry(_pick(max_n, "antisymmetry", MAX_ANTISYMMETRY_N), tol),
        ]
        return {
            "suite": "all",
            "passed": all(p["passed"] for p in parts),
            "suites": parts,
        }
    runners = {
        "theorem1": run_theorem1,
        "impossibility": run_impossibility,
        "antisymmetry": run_antisymmetry,
    }
    if name not in runners:
        raise ValueError(f"unknown suite {name!r}")
    return runners[name](max_n or DEFAULTS[name], tol)


def _pick(max_n: int | None, suite: str, cap: int) -> int:
    return DEFAULTS[suite] if max_n is None else min(max_n, cap)


def _summary(suite: str, max_n: int, checks: list) -> dict:
    return {
        "suite": suite,
        "max_n": max_n,
        "passed": all(c["passed"] for c in checks),
        "checks": checks,
    }
