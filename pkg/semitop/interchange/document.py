"""
Semitopology Documents
JSON/YAML interchange format with schema validation and canonical output
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator
from pydantic_core import PydanticCustomError

from semitop.consensus.value_assignment import ValueAssignment
from semitop.errors import ParseError, SchemaError
from semitop.topology.semitopology import SemiTopology

logger = logging.getLogger(__name__)

YAML_SUFFIXES = {'.yaml', '.yml'}


class SemiTopologyDocument(BaseModel):
    """On-disk form of a semitopology, optionally with a value assignment."""

    model_config = ConfigDict(extra='forbid')

    name: Optional[str] = Field(None, description="Display name")
    points: List[str] = Field(..., description="Point labels, in index order")
    basis: List[List[str]] = Field(default_factory=list, description="Generating open sets")
    assignment: Optional[Dict[str, str]] = Field(None, description="Point label -> value")

    @field_validator('points')
    @classmethod
    def points_unique(cls, points: List[str]) -> List[str]:
        seen = set()
        for label in points:
            if label in seen:
                raise PydanticCustomError('duplicate_point', "Duplicate point label '{label}'",
                                          {'label': label})
            seen.add(label)
        return points

    @model_validator(mode='after')
    def references_known(self) -> "SemiTopologyDocument":
        known = set(self.points)
        for i, generator in enumerate(self.basis):
            for label in generator:
                if label not in known:
                    raise PydanticCustomError(
                        'unknown_label', "Basis entry {index} names unknown point '{label}'",
                        {'index': i, 'label': label, 'field': f"basis[{i}]"},
                    )
        if self.assignment is not None:
            for label in self.assignment:
                if label not in known:
                    raise PydanticCustomError(
                        'unknown_label', "Assignment names unknown point '{label}'",
                        {'label': label, 'field': f"assignment.{label}"},
                    )
            missing = [label for label in self.points if label not in self.assignment]
            if missing:
                raise PydanticCustomError(
                    'incomplete_assignment', "Assignment missing points: {missing}",
                    {'missing': ', '.join(missing), 'field': 'assignment'},
                )
        return self


def _schema_error(error: ValidationError) -> SchemaError:
    first = error.errors()[0]
    ctx = first.get('ctx') or {}
    location = ".".join(str(part) for part in first.get('loc', ()))
    return SchemaError(first['msg'], field=ctx.get('field') or location or None)


def parse_document(text: str, source: str = "<string>", fmt: str = "json") -> SemiTopologyDocument:
    """
    Parse and validate document text.

    Raises:
        ParseError: if the text is not well-formed JSON/YAML
        SchemaError: if it parses but violates the schema
    """
    if fmt == "yaml":
        try:
            data = yaml.safe_load(text)
        except yaml.YAMLError as e:
            mark = getattr(e, 'problem_mark', None)
            raise ParseError(f"{source}: malformed YAML: {e}",
                             line=mark.line + 1 if mark else None) from e
    else:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"{source}: malformed JSON: {e.msg}", line=e.lineno) from e

    if not isinstance(data, dict):
        raise SchemaError(f"{source}: document must be an object", field=None)
    try:
        return SemiTopologyDocument.model_validate(data)
    except ValidationError as e:
        raise _schema_error(e) from e


def load_document(path: Union[str, Path]) -> SemiTopologyDocument:
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise ParseError(f"Could not read {path}: {e}") from e
    fmt = "yaml" if path.suffix in YAML_SUFFIXES else "json"
    document = parse_document(text, source=str(path), fmt=fmt)
    logger.info(f"Loaded document {path} with {len(document.points)} points")
    return document


def to_space(document: SemiTopologyDocument) -> Tuple[SemiTopology, Optional[ValueAssignment]]:
    """Build the space (and assignment, if present); empty and repeated generators are dropped."""
    index = {label: i for i, label in enumerate(document.points)}
    seen = set()
    basis: List[List[int]] = []
    for i, generator in enumerate(document.basis):
        members = frozenset(index[label] for label in generator)
        if not members:
            logger.warning(f"Dropping empty generator basis[{i}]")
            continue
        if members in seen:
            logger.warning(f"Dropping duplicate generator basis[{i}] {generator}")
            continue
        seen.add(members)
        basis.append(sorted(members))
    space = SemiTopology.from_index_sets(len(document.points), basis,
                                         labels=document.points, name=document.name or "")
    assignment = None
    if document.assignment is not None:
        assignment = ValueAssignment.from_labels(space, document.assignment)
    return space, assignment


def load(path: Union[str, Path]) -> Tuple[SemiTopology, Optional[ValueAssignment]]:
    return to_space(load_document(path))


def from_space(space: SemiTopology,
               assignment: Optional[ValueAssignment] = None) -> SemiTopologyDocument:
    """Canonical document: generators in canonical order, members in point order."""
    return SemiTopologyDocument(
        name=space.name or None,
        points=list(space.labels),
        basis=[space.labels_of(g) for g in space.basis],
        assignment=assignment.to_mapping(space) if assignment is not None else None,
    )


def _payload(document: SemiTopologyDocument) -> Dict[str, Any]:
    return document.model_dump(exclude_none=True)


def to_json(document: SemiTopologyDocument) -> str:
    return json.dumps(_payload(document), indent=2, ensure_ascii=False) + "\n"


def to_yaml(document: SemiTopologyDocument) -> str:
    return yaml.safe_dump(_payload(document), sort_keys=False, allow_unicode=True)


def save(space: SemiTopology, path: Union[str, Path],
         assignment: Optional[ValueAssignment] = None, fmt: Optional[str] = None) -> Path:
    """
    Write a space as a document.

    Args:
        space: Space to write
        path: Output path; its suffix picks YAML or JSON unless fmt is given
        assignment: Optional value assignment to include
        fmt: "json" or "yaml"

    Returns:
        The path written
    """
    path = Path(path)
    fmt = fmt or ("yaml" if path.suffix in YAML_SUFFIXES else "json")
    document = from_space(space, assignment)
    text = to_yaml(document) if fmt == "yaml" else to_json(document)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding='utf-8')
    logger.info(f"Wrote {fmt} document for {space.name or 'space'} to {path}")
    return path
