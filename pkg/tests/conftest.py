import pytest

from graphsym import backend


@pytest.fixture(params=["numpy", "numba"])
def gate_backend(request):
    """Run a test under each kernel backend, restoring the default after."""
    if request.param == "numba":
        pytest.importorskip("numba")
    previous = backend.backend_name()
    backend.set_backend(request.param)
    yield request.param
    backend.set_backend(previous)
