"""Structured amplitude reports with deterministic JSON rendering.

Reports are plain dicts with a stable field order. render_json prints every
float with 12 significant digits, so identical inputs produce byte-identical
text. Amplitudes below AMPLITUDE_CUTOFF in magnitude are omitted from the
entry list; support_size counts the entries that remain.
"""

from __future__ import annotations

import json

import numpy as np

from . import graphs, states
from .build import Trace
from .errors import DomainError
from .states import State
from .symmetry import SymmetryClass

AMPLITUDE_CUTOFF = 1e-12


def basis_string(digits, levels: int) -> str:
    sep = "" if levels <= 10 else ","
    return sep.join(str(int(x)) for x in digits)


def parse_basis_string(text: str, num_qudits: int, levels: int) -> tuple:
    parts = list(text.split(",")) if levels > 10 else list(text)
    digits = tuple(int(p) for p in parts)
    if len(digits) != num_qudits:
        raise DomainError(f"basis string {text!r} has {len(digits)} digits, expected {num_qudits}")
    return digits


def amplitude_entries(state: State, cutoff: float = AMPLITUDE_CUTOFF) -> list:
    """Nonzero amplitudes in ascending flat-index order."""
    entries = []
    for idx in np.flatnonzero(np.abs(state.amps) >= cutoff):
        digits = states.digits_of(int(idx), state.num_qudits, state.levels)
        amp = state.amps[idx]
        entries.append(
            {
                "basis": basis_string(digits, state.levels),
                "re": float(amp.real),
                "im": float(amp.imag),
            }
        )
    return entries


def state_from_entries(num_qudits: int, levels: int, entries) -> State:
    """Rebuild a state from report entries; omitted amplitudes become zero."""
    amps = np.zeros(levels**num_qudits, dtype=np.complex128)
    for entry in entries:
        digits = parse_basis_string(entry["basis"], num_qudits, levels)
        amps[states.flat_index(digits, levels)] = entry["re"] + 1j * entry["im"]
    return states.make_state(num_qudits, levels, amps)


def graph_payload(g) -> dict:
    if isinstance(g, graphs.OrientedGraph):
        return {
            "num_vertices": g.num_vertices,
            "directed": True,
            "edges": [list(e) for e in g.edges],
        }
    return {
        "num_vertices": g.num_vertices,
        "directed": False,
        "edges": [list(e) for e in g.sorted_edges()],
    }


def symmetry_payload(cls: SymmetryClass) -> dict:
    name = "AntisymmetricOnPrefix" if cls.prefix is not None else cls.label()
    return {"class": name, "prefix": cls.prefix}


def state_report(
    kind: str,
    state: State,
    *,
    graph=None,
    symmetry: SymmetryClass | None = None,
    trace: Trace | None = None,
    extras: dict | None = None,
    tolerance: float | None = None,
) -> dict:
    entries = amplitude_entries(state)
    report: dict = {
        "kind": kind,
        "num_qudits": state.num_qudits,
        "levels": state.levels,
    }
    if graph is not None:
        report["graph"] = graph_payload(graph)
    if tolerance is not None:
        report["tolerance"] = tolerance
    if extras:
        report.update(extras)
    report["support_size"] = len(entries)
    report["amplitudes"] = entries
    if symmetry is not None:
        report["symmetry"] = symmetry_payload(symmetry)
    if trace is not None:
        report["trace"] = [list(step) for step in trace.steps]
        if trace.warnings:
            report["warnings"] = list(trace.warnings)
    return report


def _render(value, indent: int, out: list) -> None:
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        out.append("{\n")
        for i, (key, item) in enumerate(value.items()):
            out.append(f"{pad}  {json.dumps(str(key))}: ")
            _render(item, indent + 1, out)
            out.append(",\n" if i < len(value) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(value, (list, tuple)):
        seq = list(value)
        if not seq:
            out.append("[]")
            return
        if all(_is_scalar(v) for v in seq):
            out.append("[" + ", ".join(_scalar(v) for v in seq) + "]")
            return
        out.append("[\n")
        for i, item in enumerate(seq):
            out.append(pad + "  ")
            _render(item, indent + 1, out)
            out.append(",\n" if i < len(seq) - 1 else "\n")
        out.append(pad + "]")
    else:
        out.append(_scalar(value))


def _is_scalar(v) -> bool:
    return v is None or isinstance(v, (bool, int, float, str, np.integer, np.floating))


def _scalar(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".12g")
    if isinstance(v, str):
        return json.dumps(v)
    raise DomainError(f"cannot render {type(v).__name__} in a report")


def render_json(obj) -> str:
    """Deterministic JSON text: insertion order, 12 significant digits."""
    out: list = []
    _render(obj, 0, out)
    out.append("\n")
    return "".join(out)
