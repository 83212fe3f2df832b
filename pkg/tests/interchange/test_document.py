"""
Tests for the JSON/YAML document format
"""

import json
import logging

import pytest

from semitop.consensus.value_assignment import ValueAssignment
from semitop.errors import ParseError, SchemaError
from semitop.gallery.fixture_library import FIXED_SPACES
from semitop.interchange.document import (
    SemiTopologyDocument,
    from_space,
    load,
    load_document,
    parse_document,
    save,
    to_json,
    to_space,
    to_yaml,
)

SQUARE = {
    "name": "square",
    "points": ["0", "1", "2", "3"],
    "basis": [["0", "3"], ["0", "1"], ["1", "2"], ["2", "3"]],
}


class TestParseDocument:
    """Test cases for parsing and validation."""

    def test_parse_json(self):
        document = parse_document(json.dumps(SQUARE))
        assert document.points == ["0", "1", "2", "3"]
        assert len(document.basis) == 4

    def test_parse_yaml(self):
        text = "name: tiny\npoints: [a, b]\nbasis:\n  - [a]\n"
        document = parse_document(text, fmt="yaml")
        assert document.name == "tiny"
        assert document.basis == [["a"]]

    def test_unknown_label_names_field(self):
        data = {"points": ["0", "1"], "basis": [["0"], ["1", "zz"]]}
        with pytest.raises(SchemaError, match="zz") as excinfo:
            parse_document(json.dumps(data))
        assert excinfo.value.field == "basis[1]"

    def test_duplicate_point(self):
        with pytest.raises(SchemaError, match="Duplicate point label '1'") as excinfo:
            parse_document(json.dumps({"points": ["0", "1", "1"]}))
        assert excinfo.value.field == "points"

    def test_missing_points(self):
        with pytest.raises(SchemaError):
            parse_document(json.dumps({"basis": []}))

    def test_extra_key_rejected(self):
        with pytest.raises(SchemaError):
            parse_document(json.dumps({**SQUARE, "colour": "red"}))

    def test_not_an_object(self):
        with pytest.raises(SchemaError, match="must be an object"):
            parse_document("[1, 2]")

    def test_malformed_json_reports_line(self):
        text = '{\n  "points": ["0",\n  "basis": []\n}'
        with pytest.raises(ParseError) as excinfo:
            parse_document(text)
        assert excinfo.value.line == 3
        assert excinfo.value.to_dict()['type'] == 'ParseError'

    def test_malformed_yaml_reports_line(self):
        with pytest.raises(ParseError) as excinfo:
            parse_document("points: [a, b\nbasis: [", fmt="yaml")
        assert excinfo.value.line is not None

    def test_assignment_unknown_point(self):
        data = {"points": ["0"], "assignment": {"0": "A", "9": "B"}}
        with pytest.raises(SchemaError, match="unknown point '9'") as excinfo:
            parse_document(json.dumps(data))
        assert excinfo.value.field == "assignment.9"

    def test_assignment_incomplete(self):
        data = {"points": ["0", "1"], "assignment": {"0": "A"}}
        with pytest.raises(SchemaError, match="missing points: 1"):
            parse_document(json.dumps(data))


class TestDocumentConversion:
    """Test cases for converting between documents and spaces."""

    def test_to_space(self):
        space, assignment = to_space(SemiTopologyDocument(**SQUARE))
        assert space.n == 4
        assert assignment is None
        assert space.is_open(space.set_of(["3", "0"]))

    def test_to_space_with_assignment(self):
        document = SemiTopologyDocument(points=["a", "b"], basis=[["a"], ["b"]],
                                        assignment={"a": "x", "b": "y"})
        space, assignment = to_space(document)
        assert assignment.to_mapping(space) == {"a": "x", "b": "y"}

    def test_dropped_generators_logged(self, caplog):
        document = SemiTopologyDocument(points=["a", "b"], basis=[["a"], [], ["a"]])
        with caplog.at_level(logging.WARNING):
            space, _ = to_space(document)
        assert len(space.basis) == 1
        assert "Dropping empty generator basis[1]" in caplog.text
        assert "Dropping duplicate generator basis[2]" in caplog.text

    @pytest.mark.parametrize("name", sorted(FIXED_SPACES))
    def test_canonical_round_trip(self, build, name):
        space = build(name)
        text = to_json(from_space(space))
        again, _ = to_space(parse_document(text))
        assert again == space
        assert to_json(from_space(again)) == text

    def test_yaml_round_trip(self, build):
        space = build('fig2_lower_right')
        again, _ = to_space(parse_document(to_yaml(from_space(space)), fmt="yaml"))
        assert again == space

    def test_json_layout(self, build):
        text = to_json(from_space(build('sierpinski')))
        assert text.endswith("}\n")
        assert '\n  "points": [' in text

    def test_unnamed_space_omits_name(self):
        document = SemiTopologyDocument(points=["a"], basis=[])
        space, _ = to_space(document)
        assert "name" not in json.loads(to_json(from_space(space)))


class TestDocumentFiles:
    """Test cases for reading and writing files."""

    def test_save_and_load_json(self, build, tmp_path):
        space = build('square')
        path = save(space, tmp_path / "out" / "square.json")
        assert path.exists()
        loaded, assignment = load(path)
        assert loaded == space and assignment is None

    def test_save_yaml_by_suffix(self, build, tmp_path):
        space = build('fig2_top_left')
        f = ValueAssignment.from_labels(space, {'0': 'A', '1': 'A', '2': 'B'})
        path = save(space, tmp_path / "top_left.yaml", assignment=f)
        assert path.read_text(encoding='utf-8').startswith("name: fig2_top_left\n")
        loaded, assignment = load(path)
        assert assignment.to_mapping(loaded) == {'0': 'A', '1': 'A', '2': 'B'}

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError, match="Could not read"):
            load_document(tmp_path / "absent.json")

    def test_load_document_uses_suffix(self, tmp_path):
        path = tmp_path / "tiny.yml"
        path.write_text("points: [a]\n", encoding='utf-8')
        assert load_document(path).points == ["a"]
