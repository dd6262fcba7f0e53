"""Feasibility of bounded analytic interpolation with prescribed Taylor jets.

Given distinct points of the unit disc, each carrying the first few Taylor
coefficients of an unknown function, this package decides whether some
holomorphic function bounded by one on the disc matches all of them, and
computes the smallest bound for which such a function exists.  The decision
reduces to positive semidefiniteness of a Hermitian matrix assembled from
recentered Szegő kernel coefficients; an equivalent Gram-matrix criterion is
built independently and cross-checked against it.
"""

from ._backend import BACKEND
from .errors import (
    CenterMismatchError,
    ConvergenceError,
    DuplicateNodeError,
    EmptyJetError,
    InstanceError,
    JetDivisionError,
    NodeOutsideDiscError,
    NonFiniteValueError,
    NonPositiveScaleError,
    NotHermitianError,
    NotPositiveDefiniteError,
    NotSquareError,
    OrderMismatchError,
    OutsideDiscError,
    ParseError,
    PickjetError,
)
from .feasibility import RadiusReport, Verdict, check, minimal_radius, scale_instance
from .instance import (
    Instance,
    KernelIndex,
    Node,
    instance_from_dict,
    instance_to_dict,
    kernel_index,
    load_instance,
    save_instance,
    validate,
)
from .jets import BlaschkeSpec, Jet, blaschke_jet, psi_jet
from .kernels import gamma_matrix, gram_entry, gram_matrix, szego_coeff
from .linalg import (
    EigenDecomposition,
    cholesky,
    eig_hermitian,
    make_hermitian,
    min_eigenvalue,
    pencil_max_eig,
)
from .matrices import adjoint_matrix, coeff_matrix, contraction_matrix, pick_matrix
from .oracle import (
    CrossCheckReport,
    OracleConfig,
    SelftestReport,
    cross_check,
    random_instance,
    run_selftest,
    szego_coeff_bruteforce,
    witness_instance,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BlaschkeSpec",
    "CenterMismatchError",
    "ConvergenceError",
    "CrossCheckReport",
    "DuplicateNodeError",
    "EigenDecomposition",
    "EmptyJetError",
    "Instance",
    "InstanceError",
    "Jet",
    "JetDivisionError",
    "KernelIndex",
    "Node",
    "NodeOutsideDiscError",
    "NonFiniteValueError",
    "NonPositiveScaleError",
    "NotHermitianError",
    "NotPositiveDefiniteError",
    "NotSquareError",
    "OracleConfig",
    "OrderMismatchError",
    "OutsideDiscError",
    "ParseError",
    "PickjetError",
    "RadiusReport",
    "SelftestReport",
    "Verdict",
    "adjoint_matrix",
    "blaschke_jet",
    "check",
    "cholesky",
    "coeff_matrix",
    "contraction_matrix",
    "cross_check",
    "eig_hermitian",
    "gamma_matrix",
    "gram_entry",
    "gram_matrix",
    "instance_from_dict",
    "instance_to_dict",
    "kernel_index",
    "load_instance",
    "make_hermitian",
    "min_eigenvalue",
    "minimal_radius",
    "pencil_max_eig",
    "pick_matrix",
    "psi_jet",
    "random_instance",
    "run_selftest",
    "save_instance",
    "scale_instance",
    "szego_coeff",
    "szego_coeff_bruteforce",
    "validate",
    "witness_instance",
]
