"""Interpolation data: nodes in the disc, each carrying a Taylor jet.

A node prescribes the first n Taylor coefficients of the sought function at
its center, coefficient convention (not raw derivatives).  The flattened
basis order is node-major with derivative order ascending; every matrix in
the package uses this layout.

The JSON form is a single object ``{"nodes": [{"alpha": [re, im], "jet":
[[re, im], ...]}, ...]}``.  Complex numbers are always two-element arrays of
finite reals; unknown fields are rejected.
"""

import dataclasses
import json
import math
from typing import NamedTuple

from .errors import (
    DuplicateNodeError,
    EmptyJetError,
    NodeOutsideDiscError,
    NonFiniteValueError,
    ParseError,
)

# Nodes must satisfy |alpha| <= 1 - DISC_MARGIN.
DISC_MARGIN = 1e-9
# Below this pairwise distance two nodes count as coincident.
DISTINCTNESS_TOL = 1e-12
# Conditioning guards: results carry a warning past these, computation proceeds.
RADIUS_WARNING = 0.999
SEPARATION_WARNING = 1e-6


def _is_finite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


@dataclasses.dataclass(frozen=True)
class Node:
    """A center in the disc with the jet prescribed there."""

    alpha: complex
    jet: tuple

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "jet", tuple(complex(c) for c in self.jet))

    @property
    def order(self) -> int:
        return len(self.jet)


@dataclasses.dataclass(frozen=True)
class Instance:
    """A full interpolation problem: distinct nodes, each with a jet."""

    nodes: tuple

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))

    @property
    def dimension(self) -> int:
        """Total number of prescribed coefficients, the size of all matrices."""
        return sum(node.order for node in self.nodes)


class KernelIndex(NamedTuple):
    """Position in the flattened basis: node index and derivative order."""

    node: int
    derivative: int


def kernel_index(instance: Instance):
    """The flattened basis layout, node-major with derivative ascending."""
    return [
        KernelIndex(i, m)
        for i, node in enumerate(instance.nodes)
        for m in range(node.order)
    ]


def validate(instance: Instance) -> None:
    """Enforce every structural invariant, raising the first violation."""
    if not instance.nodes:
        raise EmptyJetError("instance has no nodes")
    for i, node in enumerate(instance.nodes):
        if not node.jet:
            raise EmptyJetError(f"node {i} has an empty jet")
        if not _is_finite(node.alpha):
            raise NonFiniteValueError(f"node {i} center is not finite")
        if any(not _is_finite(c) for c in node.jet):
            raise NonFiniteValueError(f"node {i} jet has a non-finite coefficient")
        if abs(node.alpha) > 1.0 - DISC_MARGIN:
            raise NodeOutsideDiscError(
                f"node {i} center {node.alpha} is not strictly inside the unit disc"
            )
    for i in range(len(instance.nodes)):
        for j in range(i + 1, len(instance.nodes)):
            gap = abs(instance.nodes[i].alpha - instance.nodes[j].alpha)
            if gap <= DISTINCTNESS_TOL:
                raise DuplicateNodeError(f"nodes {i} and {j} coincide (distance {gap:.3e})")


def conditioning_warnings(instance: Instance):
    """Ill-conditioning advisories for near-boundary or near-coincident nodes."""
    warnings = []
    for i, node in enumerate(instance.nodes):
        if abs(node.alpha) > RADIUS_WARNING:
            warnings.append(f"node {i} lies within {1.0 - RADIUS_WARNING:g} of the boundary")
    for i in range(len(instance.nodes)):
        for j in range(i + 1, len(instance.nodes)):
            gap = abs(instance.nodes[i].alpha - instance.nodes[j].alpha)
            if gap < SEPARATION_WARNING:
                warnings.append(f"nodes {i} and {j} are only {gap:.3e} apart")
    return warnings


def _parse_real(value, where: str) -> float:
    # bool is an int subclass; JSON true/false is not a number here.
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{where}: expected a number, got {value!r}")
    return float(value)


def _parse_complex(value, where: str) -> complex:
    if not isinstance(value, list) or len(value) != 2:
        raise ParseError(f"{where}: expected [re, im], got {value!r}")
    return complex(_parse_real(value[0], where), _parse_real(value[1], where))


def _reject_unknown(doc: dict, allowed, where: str) -> None:
    extra = set(doc) - set(allowed)
    if extra:
        raise ParseError(f"{where}: unknown field(s) {sorted(extra)}")


def instance_from_dict(doc) -> Instance:
    """Build and validate an Instance from its JSON object form."""
    if not isinstance(doc, dict):
        raise ParseError(f"instance: expected an object, got {type(doc).__name__}")
    _reject_unknown(doc, {"nodes"}, "instance")
    if "nodes" not in doc:
        raise ParseError("instance: missing field 'nodes'")
    raw_nodes = doc["nodes"]
    if not isinstance(raw_nodes, list) or not raw_nodes:
        raise ParseError("instance: 'nodes' must be a non-empty list")
    nodes = []
    for i, raw in enumerate(raw_nodes):
        where = f"nodes[{i}]"
        if not isinstance(raw, dict):
            raise ParseError(f"{where}: expected an object")
        _reject_unknown(raw, {"alpha", "jet"}, where)
        if "alpha" not in raw or "jet" not in raw:
            raise ParseError(f"{where}: needs both 'alpha' and 'jet'")
        alpha = _parse_complex(raw["alpha"], f"{where}.alpha")
        raw_jet = raw["jet"]
        if not isinstance(raw_jet, list) or not raw_jet:
            raise ParseError(f"{where}.jet: expected a non-empty list of [re, im] pairs")
        jet = tuple(
            _parse_complex(c, f"{where}.jet[{k}]") for k, c in enumerate(raw_jet)
        )
        nodes.append(Node(alpha, jet))
    instance = Instance(tuple(nodes))
    validate(instance)
    return instance


def instance_to_dict(instance: Instance) -> dict:
    return {
        "nodes": [
            {
                "alpha": [node.alpha.real, node.alpha.imag],
                "jet": [[c.real, c.imag] for c in node.jet],
            }
            for node in instance.nodes
        ]
    }


def load_instance(path) -> Instance:
    """Read and validate an instance from a UTF-8 JSON file."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: not valid JSON ({exc})") from None
    return instance_from_dict(doc)


def save_instance(instance: Instance, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(instance_to_dict(instance), fh, indent=2, sort_keys=True)
        fh.write("\n")
