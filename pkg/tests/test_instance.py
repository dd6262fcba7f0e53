"""Data model invariants and the strict JSON wire format."""

import json

import pytest

from pickjet.errors import (
    DuplicateNodeError,
    EmptyJetError,
    NodeOutsideDiscError,
    NonFiniteValueError,
    ParseError,
)
from pickjet.instance import (
    Instance,
    KernelIndex,
    Node,
    conditioning_warnings,
    instance_from_dict,
    instance_to_dict,
    kernel_index,
    load_instance,
    save_instance,
    validate,
)


def simple_instance():
    return Instance((Node(0.0, (0.5,)), Node(0.3 + 0.1j, (0.1, 0.2j))))


class TestValidate:
    def test_single_node_ok(self):
        validate(Instance((Node(0.0, (0.5,)),)))

    def test_node_on_circle_rejected(self):
        with pytest.raises(NodeOutsideDiscError):
            validate(Instance((Node(1.0, (0.0,)),)))

    def test_node_just_inside_margin_rejected(self):
        with pytest.raises(NodeOutsideDiscError):
            validate(Instance((Node(1.0 - 1e-10, (0.0,)),)))

    def test_duplicate_nodes_rejected(self):
        with pytest.raises(DuplicateNodeError):
            validate(Instance((Node(0.0, (0.1,)), Node(0.0, (0.2,)))))

    def test_nearly_duplicate_nodes_rejected(self):
        with pytest.raises(DuplicateNodeError):
            validate(Instance((Node(0.0, (0.1,)), Node(1e-13, (0.2,)))))

    def test_empty_jet_rejected(self):
        with pytest.raises(EmptyJetError):
            validate(Instance((Node(0.0, ()),)))

    def test_no_nodes_rejected(self):
        with pytest.raises(EmptyJetError):
            validate(Instance(()))

    def test_non_finite_jet_rejected(self):
        with pytest.raises(NonFiniteValueError):
            validate(Instance((Node(0.0, (float("nan"),)),)))

    def test_non_finite_center_rejected(self):
        with pytest.raises(NonFiniteValueError):
            validate(Instance((Node(float("inf"), (0.0,)),)))


class TestLayout:
    def test_kernel_index_order(self):
        assert kernel_index(simple_instance()) == [
            KernelIndex(0, 0),
            KernelIndex(1, 0),
            KernelIndex(1, 1),
        ]

    def test_dimension(self):
        assert simple_instance().dimension == 3


class TestConditioningWarnings:
    def test_clean_instance_is_silent(self):
        assert conditioning_warnings(simple_instance()) == []

    def test_near_boundary_node_warns(self):
        instance = Instance((Node(0.9995, (0.1,)),))
        validate(instance)
        assert any("boundary" in w for w in conditioning_warnings(instance))

    def test_close_pair_warns(self):
        instance = Instance((Node(0.0, (0.1,)), Node(1e-8, (0.2,))))
        validate(instance)
        assert any("apart" in w for w in conditioning_warnings(instance))


class TestWireFormat:
    def test_roundtrip(self):
        instance = simple_instance()
        again = instance_from_dict(instance_to_dict(instance))
        assert again == instance

    def test_parse_minimal_document(self):
        doc = {"nodes": [{"alpha": [0.0, 0.0], "jet": [[0.5, 0.0]]}]}
        instance = instance_from_dict(doc)
        assert instance.nodes[0].alpha == 0.0
        assert instance.nodes[0].jet == (0.5,)

    def test_unknown_top_level_field_rejected(self):
        with pytest.raises(ParseError):
            instance_from_dict({"nodes": [], "extra": 1})

    def test_unknown_node_field_rejected(self):
        doc = {"nodes": [{"alpha": [0.0, 0.0], "jet": [[0.5, 0.0]], "note": "x"}]}
        with pytest.raises(ParseError):
            instance_from_dict(doc)

    def test_boolean_component_rejected(self):
        doc = {"nodes": [{"alpha": [True, 0.0], "jet": [[0.5, 0.0]]}]}
        with pytest.raises(ParseError):
            instance_from_dict(doc)

    def test_scalar_alpha_rejected(self):
        doc = {"nodes": [{"alpha": 0.5, "jet": [[0.5, 0.0]]}]}
        with pytest.raises(ParseError):
            instance_from_dict(doc)

    def test_three_component_complex_rejected(self):
        doc = {"nodes": [{"alpha": [0.0, 0.0, 0.0], "jet": [[0.5, 0.0]]}]}
        with pytest.raises(ParseError):
            instance_from_dict(doc)

    def test_missing_jet_rejected(self):
        with pytest.raises(ParseError):
            instance_from_dict({"nodes": [{"alpha": [0.0, 0.0]}]})

    def test_empty_nodes_rejected(self):
        with pytest.raises(ParseError):
            instance_from_dict({"nodes": []})

    def test_validation_runs_on_parse(self):
        doc = {"nodes": [{"alpha": [2.0, 0.0], "jet": [[0.5, 0.0]]}]}
        with pytest.raises(NodeOutsideDiscError):
            instance_from_dict(doc)

    def test_file_roundtrip(self, tmp_path):
        path = tmp_path / "instance.json"
        save_instance(simple_instance(), path)
        assert load_instance(path) == simple_instance()

    def test_invalid_json_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{nodes", encoding="utf-8")
        with pytest.raises(ParseError):
            load_instance(path)

    def test_wire_form_is_plain_json(self):
        text = json.dumps(instance_to_dict(simple_instance()))
        assert instance_from_dict(json.loads(text)) == simple_instance()
