"""Feasibility verdicts and the minimal sup-norm radius.

An instance is feasible exactly when the criterion matrix is positive
semidefinite.  The decision is made on the smallest eigenvalue with a
relative tolerance, and near-singular cases are flagged as boundary rather
than silently rounded to one side: data extracted from an inner function
sits exactly on the boundary.

The minimal radius rho* is the smallest bound r such that the data admits an
interpolant of sup-norm at most r.  Scaling the jets by 1/r turns the
criterion into r^2 Gamma - C Gamma C*, so rho* is the square root of the
largest eigenvalue of the pencil (C Gamma C*, Gamma).
"""

import dataclasses
import math

from .errors import NonPositiveScaleError
from .instance import Instance, Node, conditioning_warnings, validate
from .kernels import gamma_matrix
from .linalg import (
    HERMITIZE_TOL,
    make_hermitian,
    max_abs,
    min_eigenvalue,
    pencil_max_eig,
)
from .matrices import coeff_matrix, pick_matrix

# Relative PSD tolerance: feasible means lambda_min >= -PSD_TOL * max(1, |A|).
PSD_TOL = 1e-9


@dataclasses.dataclass(frozen=True)
class Verdict:
    """Outcome of the positive-semidefiniteness test."""

    feasible: bool
    lambda_min: float
    tolerance_used: float
    boundary: bool
    warnings: tuple

    def __post_init__(self):
        object.__setattr__(self, "warnings", tuple(self.warnings))


@dataclasses.dataclass(frozen=True)
class RadiusReport:
    """Minimal radius with its certifying pencil eigenvalue and the
    criticality residual of the rescaled data."""

    rho_star: float
    certifying_eig: float
    lambda_min_at_rho: float


def check(instance: Instance, tol: float = None) -> Verdict:
    """Decide feasibility from the smallest eigenvalue of the criterion matrix.

    ``tol`` overrides the default relative tolerance with an absolute one.
    The boundary flag marks |lambda_min| within tolerance, where the verdict
    is a choice of convention rather than a numerical fact.
    """
    a = pick_matrix(instance)
    lam = min_eigenvalue(a)
    tolerance = PSD_TOL * max(1.0, max_abs(a)) if tol is None else float(tol)
    return Verdict(
        feasible=lam >= -tolerance,
        lambda_min=lam,
        tolerance_used=tolerance,
        boundary=abs(lam) <= tolerance,
        warnings=tuple(conditioning_warnings(instance)),
    )


def scale_instance(instance: Instance, rho: float) -> Instance:
    """Divide every jet coefficient by ``rho``; nodes are unchanged."""
    if not rho > 0.0:
        raise NonPositiveScaleError(f"scale factor must be positive, got {rho}")
    return Instance(
        tuple(
            Node(node.alpha, tuple(c / rho for c in node.jet))
            for node in instance.nodes
        )
    )


def minimal_radius(instance: Instance) -> RadiusReport:
    """Smallest sup-norm bound for which the data stays feasible.

    Scaling by 1/rho* puts the data exactly on the feasibility boundary, and
    the smallest criterion eigenvalue there is reported as the certificate.
    All-zero data short-circuits to rho* = 0 with a vacuous certificate.
    """
    validate(instance)
    if all(c == 0 for node in instance.nodes for c in node.jet):
        return RadiusReport(0.0, 0.0, 0.0)
    gamma = gamma_matrix(instance)
    c = coeff_matrix(instance)
    b = make_hermitian(
        c @ gamma @ c.conj().T, HERMITIZE_TOL * max(1.0, max_abs(gamma))
    )
    lam = max(pencil_max_eig(b, gamma), 0.0)
    rho = math.sqrt(lam)
    if rho == 0.0:
        return RadiusReport(0.0, lam, 0.0)
    verdict = check(scale_instance(instance, rho))
    return RadiusReport(rho, lam, verdict.lambda_min)
