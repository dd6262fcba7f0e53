"""Kernel coefficient matrices for interpolation data.

Two Hermitian matrices are attached to an instance.  The first collects the
recentered Taylor coefficients a_{mn} of the kernel 1/(1 - z conj(zeta)),
expanded at a pair of nodes.  The second is the Gram matrix of the derivative
reproducing kernels z^m/(1 - conj(alpha) z)^{m+1}.  Both reduce to one
closed-form Leibniz sum whose combinatorial factors are exact integers, and
entrywise they are complex conjugates of each other.
"""

from math import factorial

import numpy as np

from .errors import OutsideDiscError
from .instance import Instance, kernel_index, validate
from .linalg import make_hermitian


def _check_in_disc(z: complex, name: str) -> complex:
    z = complex(z)
    if abs(z) >= 1.0:
        raise OutsideDiscError(f"{name} = {z} is not inside the unit disc")
    return z


def _deriv_coeff(w: complex, t: complex, m: int, n: int) -> complex:
    """(1/n!) d^n/dt^n of t^m/(1 - w t)^(m+1), by the Leibniz rule.

    The multinomial weights are computed in exact integer arithmetic before
    conversion, so the sum carries no combinatorial rounding.
    """
    base = 1.0 - w * t
    acc = 0j
    for j in range(min(m, n) + 1):
        weight = factorial(m + n - j) // (factorial(j) * factorial(n - j) * factorial(m - j))
        acc += weight * t ** (m - j) * w ** (n - j) * base ** -(m + n - j + 1)
    return acc


def szego_coeff(alpha: complex, beta: complex, m: int, n: int) -> complex:
    """Coefficient a_{mn} of (z - alpha)^m conj(zeta - beta)^n in the
    expansion of 1/(1 - z conj(zeta)) about (alpha, beta)."""
    alpha = _check_in_disc(alpha, "alpha")
    beta = _check_in_disc(beta, "beta")
    return _deriv_coeff(alpha, beta.conjugate(), m, n)


def gram_entry(alpha: complex, m: int, beta: complex, n: int) -> complex:
    """Inner product of the order-m kernel at alpha with the order-n kernel
    at beta; the conjugate of szego_coeff(alpha, beta, m, n)."""
    alpha = _check_in_disc(alpha, "alpha")
    beta = _check_in_disc(beta, "beta")
    return _deriv_coeff(alpha.conjugate(), beta, m, n)


def _assemble(instance: Instance, entry):
    validate(instance)
    layout = kernel_index(instance)
    dim = len(layout)
    out = np.empty((dim, dim), dtype=np.complex128)
    for r, (i, m) in enumerate(layout):
        for s, (j, n) in enumerate(layout):
            out[r, s] = entry(instance.nodes[i].alpha, m, instance.nodes[j].alpha, n)
    return make_hermitian(out)


def gamma_matrix(instance: Instance) -> np.ndarray:
    """The block matrix of szego_coeff values in the flattened basis order."""
    return _assemble(
        instance, lambda a, m, b, n: szego_coeff(a, b, m, n)
    )


def gram_matrix(instance: Instance) -> np.ndarray:
    """Gram matrix of the kernel basis in the flattened basis order."""
    return _assemble(instance, gram_entry)
