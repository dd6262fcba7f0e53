"""Coefficient matrices and the two equivalent feasibility criteria.

The prescribed jets enter through a block-diagonal matrix C whose blocks are
lower-triangular Toeplitz in the Taylor coefficients, and through its
counterpart D built independently from upper-triangular blocks of conjugated
coefficients.  D equals the conjugate transpose of C entry for entry; keeping
the two constructions separate lets tests confirm that instead of assuming
it.

The criteria themselves are Hermitian matrices whose positive semidefiniteness
decides feasibility: ``pick_matrix`` forms Gamma - C Gamma C*, and
``contraction_matrix`` forms G - D^T G conj(D) from the Gram side.
"""

import numpy as np

from .instance import Instance, validate
from .kernels import gamma_matrix, gram_matrix
from .linalg import HERMITIZE_TOL, make_hermitian, max_abs


def _block_diag(blocks):
    dim = sum(b.shape[0] for b in blocks)
    out = np.zeros((dim, dim), dtype=np.complex128)
    at = 0
    for b in blocks:
        n = b.shape[0]
        out[at : at + n, at : at + n] = b
        at += n
    return out


def coeff_matrix(instance: Instance) -> np.ndarray:
    """Block-diagonal C; block i is lower-triangular Toeplitz in the jet of
    node i, so C acts as multiplication by the data on each jet space."""
    validate(instance)
    blocks = []
    for node in instance.nodes:
        n = node.order
        b = np.zeros((n, n), dtype=np.complex128)
        for r in range(n):
            for s in range(r + 1):
                b[r, s] = node.jet[r - s]
        blocks.append(b)
    return _block_diag(blocks)


def adjoint_matrix(instance: Instance) -> np.ndarray:
    """Block-diagonal D; block i is upper-triangular Toeplitz in the
    conjugated jet of node i.  Equals coeff_matrix(instance) conjugate
    transposed, entry for entry."""
    validate(instance)
    blocks = []
    for node in instance.nodes:
        n = node.order
        b = np.zeros((n, n), dtype=np.complex128)
        for r in range(n):
            for s in range(r, n):
                b[r, s] = node.jet[s - r].conjugate()
        blocks.append(b)
    return _block_diag(blocks)


def pick_matrix(instance: Instance) -> np.ndarray:
    """The criterion matrix Gamma - C Gamma C*, hermitized.

    Positive semidefiniteness of this matrix is equivalent to the existence
    of an interpolant bounded by one.
    """
    gamma = gamma_matrix(instance)
    c = coeff_matrix(instance)
    raw = gamma - c @ gamma @ c.conj().T
    return make_hermitian(raw, HERMITIZE_TOL * max(1.0, max_abs(gamma)))


def contraction_matrix(instance: Instance) -> np.ndarray:
    """The Gram-side criterion G - D^T G conj(D), hermitized.

    Entrywise the complex conjugate of pick_matrix, so both carry the same
    eigenvalues; computing it independently gives the cross-check its teeth.
    """
    gram = gram_matrix(instance)
    d = adjoint_matrix(instance)
    raw = gram - d.T @ gram @ d.conj()
    return make_hermitian(raw, HERMITIZE_TOL * max(1.0, max_abs(gram)))
