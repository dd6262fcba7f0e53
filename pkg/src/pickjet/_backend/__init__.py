"""Backend selection for the numerical kernels.

The compiled extension is preferred when it built; the plain-numpy fallback
implements the same contract.  Set ``PICKJET_PURE_PYTHON=1`` to force the
fallback, for example to compare the two in the benchmark suite.
"""

import os

__all__ = ["BACKEND", "cholesky_factor", "jacobi_sweeps", "load_backend", "off_diagonal_norm"]


def load_backend(name):
    """Return the kernel module for ``name`` ("cython" or "python")."""
    if name == "python":
        from . import _pykernels

        return _pykernels
    if name == "cython":
        from . import _ckernels

        return _ckernels
    raise ValueError(f"unknown backend {name!r}")


def available_backends():
    """Names of the backends that import in this installation."""
    names = []
    try:
        load_backend("cython")
    except ImportError:
        pass
    else:
        names.append("cython")
    names.append("python")
    return names


if os.environ.get("PICKJET_PURE_PYTHON"):
    _impl = load_backend("python")
    BACKEND = "python"
else:
    try:
        _impl = load_backend("cython")
        BACKEND = "cython"
    except ImportError:
        _impl = load_backend("python")
        BACKEND = "python"

jacobi_sweeps = _impl.jacobi_sweeps
cholesky_factor = _impl.cholesky_factor
off_diagonal_norm = _impl.off_diagonal_norm
