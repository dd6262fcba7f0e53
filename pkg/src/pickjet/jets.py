"""Truncated Taylor series at a point of the disc.

A jet stores the first n Taylor coefficients of a function at a fixed
center, so derivatives up to order n-1 are carried as c_k = f^(k)/k!.
Sums, truncated Cauchy products, and reciprocals are enough to evaluate
finite Blaschke products to any order; no composition is ever needed.
"""

import cmath
import dataclasses
import math

from .errors import (
    CenterMismatchError,
    JetDivisionError,
    NonFiniteValueError,
    OrderMismatchError,
    OutsideDiscError,
)
from .instance import Instance, validate

# Reciprocals require |c0| above this floor; Blaschke denominators 1 - conj(a) z
# stay far above it for the node magnitudes this package accepts.
DIVISION_FLOOR = 1e-13


@dataclasses.dataclass(frozen=True)
class Jet:
    """Taylor coefficients c_0..c_{n-1} of a function at ``center``."""

    center: complex
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))
        if abs(self.center) >= 1.0:
            raise OutsideDiscError(f"jet center {self.center} is not inside the unit disc")
        if not self.coeffs:
            raise OrderMismatchError("a jet needs at least one coefficient")
        for c in self.coeffs:
            if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                raise NonFiniteValueError(f"jet coefficient {c} is not finite")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def _check_compatible(self, other: "Jet") -> None:
        if self.center != other.center:
            raise CenterMismatchError(
                f"jet centers differ: {self.center} vs {other.center}"
            )
        if self.order != other.order:
            raise OrderMismatchError(f"jet orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "Jet") -> "Jet":
        self._check_compatible(other)
        return Jet(self.center, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "Jet") -> "Jet":
        """Cauchy product truncated to the common order."""
        self._check_compatible(other)
        n = self.order
        coeffs = [
            sum(self.coeffs[j] * other.coeffs[k - j] for j in range(k + 1))
            for k in range(n)
        ]
        return Jet(self.center, tuple(coeffs))

    def reciprocal(self) -> "Jet":
        """Jet q with self * q equal to the unit jet (1, 0, ..., 0)."""
        c0 = self.coeffs[0]
        if abs(c0) <= DIVISION_FLOOR:
            raise JetDivisionError(
                f"leading coefficient {c0} too small to invert (floor {DIVISION_FLOOR:g})"
            )
        q = [1.0 / c0]
        for k in range(1, self.order):
            acc = sum(self.coeffs[j] * q[k - j] for j in range(1, k + 1))
            q.append(-acc / c0)
        return Jet(self.center, tuple(q))


def constant_jet(value: complex, center: complex, order: int) -> Jet:
    return Jet(center, (complex(value),) + (0j,) * (order - 1))


def _linear_jet(a: complex, b: complex, center: complex, order: int) -> Jet:
    """Jet of z -> a + b z at ``center``."""
    coeffs = [complex(a) + complex(b) * complex(center)]
    if order > 1:
        coeffs.append(complex(b))
    coeffs.extend([0j] * (order - len(coeffs)))
    return Jet(center, tuple(coeffs))


@dataclasses.dataclass(frozen=True)
class BlaschkeSpec:
    """A finite Blaschke product: unimodular phase times disc-automorphism factors."""

    zeros: tuple
    phase: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "zeros", tuple(complex(a) for a in self.zeros))
        object.__setattr__(self, "phase", float(self.phase))
        for a in self.zeros:
            if abs(a) >= 1.0:
                raise OutsideDiscError(f"Blaschke zero {a} is not inside the unit disc")

    @property
    def degree(self) -> int:
        return len(self.zeros)


def blaschke_jet(spec: BlaschkeSpec, center: complex, order: int) -> Jet:
    """Jet at ``center`` of e^{i phase} * prod_k (z - a_k)/(1 - conj(a_k) z).

    Built factor by factor from linear jets and reciprocals, so it is exact
    up to rounding at every order.
    """
    center = complex(center)
    if abs(center) >= 1.0:
        raise OutsideDiscError(f"expansion point {center} is not inside the unit disc")
    if order < 1:
        raise OrderMismatchError("jet order must be at least 1")
    result = constant_jet(cmath.exp(1j * spec.phase), center, order)
    for a in spec.zeros:
        numerator = _linear_jet(-a, 1.0, center, order)
        denominator = _linear_jet(1.0, -a.conjugate(), center, order)
        result = result * numerator * denominator.reciprocal()
    return result


def psi_jet(instance: Instance, node_index: int, order: int) -> Jet:
    """Jet at node ``node_index`` of the Blaschke product vanishing to order
    n_i at every node alpha_i of the instance.

    Its first n_{node_index} coefficients vanish up to rounding.
    """
    validate(instance)
    if not 0 <= node_index < len(instance.nodes):
        raise IndexError(f"node index {node_index} out of range")
    zeros = tuple(
        node.alpha for node in instance.nodes for _ in range(node.order)
    )
    return blaschke_jet(BlaschkeSpec(zeros), instance.nodes[node_index].alpha, order)
