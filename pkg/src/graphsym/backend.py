"""Gate-kernel backend selection.

Two interchangeable kernel sets exist: numba JIT flat loops and pure-numpy
vectorized operations. The environment variable GRAPHSYM_BACKEND picks one:

    GRAPHSYM_BACKEND=numpy   force the pure-numpy kernels
    GRAPHSYM_BACKEND=numba   require the numba kernels (error if unavailable)
    unset / auto             numba when importable, numpy otherwise

benchmarks/bench_gates.py compares the two.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _kernels_numpy

ENV_VAR = "GRAPHSYM_BACKEND"

_active: ModuleType | None = None


def _load(choice: str) -> ModuleType:
    if choice == "numpy":
        return _kernels_numpy
    if choice == "numba":
        from . import _kernels_numba

        return _kernels_numba
    if choice == "auto":
        try:
            from . import _kernels_numba

            return _kernels_numba
        except ImportError:
            return _kernels_numpy
    raise ValueError(
        f"unknown backend {choice!r}; expected 'numpy', 'numba' or 'auto'"
    )


def kernels() -> ModuleType:
    """Active kernel module, resolving GRAPHSYM_BACKEND on first use."""
    global _active
    if _active is None:
        choice = os.environ.get(ENV_VAR, "auto").strip().lower() or "auto"
        try:
            _active = _load(choice)
        except ImportError as exc:
            raise RuntimeError(
                f"{ENV_VAR}={choice} requested but numba is not importable"
            ) from exc
    return _active


def backend_name() -> str:
    return kernels().NAME


def set_backend(choice: str) -> str:
    """Explicitly select 'numpy', 'numba' or 'auto'; returns the active name."""
    global _active
    _active = _load(choice)
    return _active.NAME
