import numpy as np
import pytest

from pickjet._backend import available_backends


def random_hermitian(rng, n, scale=1.0):
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return scale * 0.5 * (m + m.conj().T)


@pytest.fixture(params=available_backends())
def backend(request):
    from pickjet._backend import load_backend

    return load_backend(request.param)
