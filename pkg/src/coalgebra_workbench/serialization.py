"""Structure files: canonical JSON for every kind of structure.

A document looks like::

    {
      "format_version": 1,
      "kind": "comodule",
      "field": {"type": "Q"},
      "dim": 2,
      "over": {... a coalgebra document ...} or "relative/path.json",
      "rho": [["1", "0"], ...]
    }

Rational entries are strings ``"p/q"`` (or ``"p"``), GF(p) entries are ints.
"""

import json
import logging
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from .coalgebra import Algebra, Coalgebra, check_algebra, check_coalgebra
from .comodules import Comodule, Contramodule, check_comodule, check_contramodule
from .cotensor import Bicomodule, RightComodule, check_bicomodule, check_right_comodule
from .errors import (
    FieldElementError,
    FieldSpecError,
    MalformedDocumentError,
    ParseError,
    ShapeMismatchError,
    UnknownKindError,
    WorkbenchError,
)
from .field import FieldSpec, GF, QQ
from .matrix import Matrix
from .models import CertReport
from .modules import LeftModule, RightModule, check_left_module, check_right_module
from .resolver import NameResolver
from .towers import FiniteTower, check_tower

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1

Structure = Union[
    Coalgebra, Algebra, Comodule, RightComodule, Contramodule, LeftModule, RightModule, Bicomodule, FiniteTower
]

KINDS: Dict[str, Tuple[type, Callable[[Any], CertReport]]] = {
    "coalgebra": (Coalgebra, check_coalgebra),
    "algebra": (Algebra, check_algebra),
    "comodule": (Comodule, check_comodule),
    "right_comodule": (RightComodule, check_right_comodule),
    "contramodule": (Contramodule, check_contramodule),
    "left_module": (LeftModule, check_left_module),
    "right_module": (RightModule, check_right_module),
    "bicomodule": (Bicomodule, check_bicomodule),
    "tower": (FiniteTower, check_tower),
}

kind_resolver = NameResolver(list(KINDS))


def kind_of(structure: Structure) -> str:
    for kind, (cls, _) in KINDS.items():
        if type(structure) is cls:
            return kind
    raise UnknownKindError(f"cannot serialize a {type(structure).__name__}")


def check_structure(structure: Structure) -> CertReport:
    """Run the certifier that matches the structure's kind."""
    return KINDS[kind_of(structure)][1](structure)


def resolve_kind(name: str, location: str = "$.kind") -> str:
    """The known kind named by ``name``.

    Raises:
        UnknownKindError: With the closest kinds as suggestions
    """
    found = kind_resolver.exact(name) if isinstance(name, str) else None
    if found is None:
        suggestions = kind_resolver.suggestions(name) if isinstance(name, str) else []
        hint = f"; did you mean {', '.join(suggestions)}?" if suggestions else ""
        raise UnknownKindError(
            f"unknown kind {name!r}{hint}",
            location,
            details={"suggestions": suggestions, "kinds": list(KINDS)},
        )
    return found


# ============================================================================
# Emission
# ============================================================================

def _field_document(field: FieldSpec) -> dict:
    if field.is_prime_field:
        return {"type": "GF", "p": field.characteristic}
    return {"type": "Q"}


def _header(kind: str, field: FieldSpec) -> dict:
    return {"format_version": FORMAT_VERSION, "kind": kind, "field": _field_document(field)}


def emit(structure: Structure) -> dict:
    """The JSON value of ``structure``; nested bases are written inline."""
    kind = kind_of(structure)
    doc = _header(kind, structure.field)
    if isinstance(structure, Coalgebra):
        doc.update(dim=structure.dim, delta=structure.delta.to_strings(), eps=structure.eps.to_strings())
        if structure.label:
            doc["label"] = structure.label
    elif isinstance(structure, Algebra):
        doc.update(dim=structure.dim, mult=structure.mult.to_strings(), unit=structure.unit.to_strings())
        if structure.label:
            doc["label"] = structure.label
    elif isinstance(structure, Comodule):
        doc.update(over=emit(structure.over), dim=structure.dim, rho=structure.rho.to_strings())
    elif isinstance(structure, RightComodule):
        doc.update(over=emit(structure.over), dim=structure.dim, mu=structure.mu.to_strings())
    elif isinstance(structure, Contramodule):
        doc.update(over=emit(structure.over), dim=structure.dim, theta=structure.theta.to_strings())
    elif isinstance(structure, (LeftModule, RightModule)):
        doc.update(over=emit(structure.over), dim=structure.dim, action=structure.action.to_strings())
    elif isinstance(structure, Bicomodule):
        doc.update(
            over_left=emit(structure.over_left),
            over_right=emit(structure.over_right),
            dim=structure.dim,
            **{"lambda": structure.lam.to_strings(), "mu": structure.mu.to_strings()},
        )
    else:
        doc.update(
            over=emit(structure.over),
            levels=[{"dim": z.dim, "theta": z.theta.to_strings()} for z in structure.levels],
            transitions=[f.to_strings() for f in structure.transitions],
        )
    return doc


def dumps(value: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(value, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit_document(structure: Structure) -> str:
    return dumps(emit(structure))


# ============================================================================
# Parsing
# ============================================================================

class _Reader:
    """Parses one document; ``base_dir`` resolves file references in ``over``."""

    def __init__(self, base_dir: Optional[Path], seen: Tuple[Path, ...] = ()):
        self.base_dir = base_dir
        self.seen = seen

    def require(self, doc: dict, key: str, location: str) -> Any:
        if key not in doc:
            raise MalformedDocumentError(f"missing key {key!r}", f"{location}.{key}")
        return doc[key]

    def dimension(self, doc: dict, location: str, key: str = "dim") -> int:
        value = self.require(doc, key, location)
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise MalformedDocumentError(f"{key} must be a non-negative integer, got {value!r}", f"{location}.{key}")
        return value

    def field(self, doc: dict, location: str) -> FieldSpec:
        value = self.require(doc, "field", location)
        where = f"{location}.field"
        if not isinstance(value, dict) or "type" not in value:
            raise FieldSpecError('field must be {"type": "Q"} or {"type": "GF", "p": <prime>}', where)
        if value["type"] == "Q":
            return QQ
        if value["type"] == "GF":
            p = value.get("p")
            try:
                return GF(p)
            except WorkbenchError as exc:
                raise FieldSpecError(exc.message, f"{where}.p", details={"value": repr(p)}) from exc
        raise FieldSpecError(f"unknown field type {value['type']!r}", f"{where}.type")

    def matrix(self, doc: dict, key: str, rows: int, cols: int, field: FieldSpec, location: str) -> Matrix:
        where = f"{location}.{key}" if key else location
        value = self.require(doc, key, location) if key else doc
        if not isinstance(value, list):
            raise MalformedDocumentError("a matrix is a list of rows", where)
        if len(value) != rows:
            raise ShapeMismatchError(f"expected {rows} rows, got {len(value)}", where,
                                     details={"expected": [rows, cols]})
        entries: List[Any] = []
        for i, row in enumerate(value):
            if not isinstance(row, list):
                raise MalformedDocumentError("a matrix row is a list of entries", f"{where}[{i}]")
            if len(row) != cols:
                raise ShapeMismatchError(f"expected {cols} entries, got {len(row)}", f"{where}[{i}]",
                                         details={"expected": [rows, cols]})
            for j, entry in enumerate(row):
                try:
                    entries.append(field.parse(entry))
                except FieldElementError as exc:
                    raise FieldElementError(exc.reason, f"{where}[{i}][{j}]", details=exc.details) from exc
        return Matrix(rows, cols, tuple(entries), field)

    def base(self, doc: dict, key: str, location: str, expected_kind: str, field: FieldSpec):
        value = self.require(doc, key, location)
        where = f"{location}.{key}"
        reader = self
        if isinstance(value, str):
            path = Path(value)
            if not path.is_absolute() and self.base_dir is not None:
                path = self.base_dir / path
            path = path.resolve()
            if path in self.seen:
                raise MalformedDocumentError(f"circular file reference to {value!r}", where)
            value = _load_json(path, where)
            reader = _Reader(path.parent, self.seen + (path,))
        if not isinstance(value, dict):
            raise MalformedDocumentError("expected an inline document or a file path", where)
        structure = reader.document(value, where)
        if kind_of(structure) != expected_kind:
            raise MalformedDocumentError(f"expected a {expected_kind}, got a {kind_of(structure)}", where)
        if structure.field != field:
            raise FieldSpecError(f"base is over {structure.field.label}, document over {field.label}", f"{where}.field")
        return structure

    def document(self, doc: Any, location: str = "$") -> Structure:
        if not isinstance(doc, dict):
            raise MalformedDocumentError("a structure document is a JSON object", location)
        version = self.require(doc, "format_version", location)
        if version != FORMAT_VERSION:
            raise MalformedDocumentError(
                f"unsupported format_version {version!r}", f"{location}.format_version",
                details={"supported": [FORMAT_VERSION]},
            )
        kind = resolve_kind(self.require(doc, "kind", location), f"{location}.kind")
        field = self.field(doc, location)
        label = doc.get("label", "")
        if not isinstance(label, str):
            raise MalformedDocumentError("label must be a string", f"{location}.label")

        if kind == "coalgebra":
            n = self.dimension(doc, location)
            return Coalgebra(n, self.matrix(doc, "delta", n * n, n, field, location),
                             self.matrix(doc, "eps", 1, n, field, location), label=label)
        if kind == "algebra":
            n = self.dimension(doc, location)
            return Algebra(n, self.matrix(doc, "mult", n, n * n, field, location),
                           self.matrix(doc, "unit", n, 1, field, location), label=label)
        if kind == "bicomodule":
            c = self.base(doc, "over_left", location, "coalgebra", field)
            d = self.base(doc, "over_right", location, "coalgebra", field)
            x = self.dimension(doc, location)
            return Bicomodule(c, d, x, self.matrix(doc, "lambda", c.dim * x, x, field, location),
                              self.matrix(doc, "mu", x * d.dim, x, field, location))
        if kind in ("left_module", "right_module"):
            a = self.base(doc, "over", location, "algebra", field)
            x = self.dimension(doc, location)
            cls = LeftModule if kind == "left_module" else RightModule
            return cls(a, x, self.matrix(doc, "action", x, a.dim * x, field, location))

        c = self.base(doc, "over", location, "coalgebra", field)
        if kind == "tower":
            return self.tower(doc, c, field, location)
        x = self.dimension(doc, location)
        if kind == "comodule":
            return Comodule(c, x, self.matrix(doc, "rho", c.dim * x, x, field, location))
        if kind == "right_comodule":
            return RightComodule(c, x, self.matrix(doc, "mu", x * c.dim, x, field, location))
        return Contramodule(c, x, self.matrix(doc, "theta", x, c.dim * x, field, location))

    def tower(self, doc: dict, c: Coalgebra, field: FieldSpec, location: str) -> FiniteTower:
        levels_doc = self.require(doc, "levels", location)
        transitions_doc = self.require(doc, "transitions", location)
        if not isinstance(levels_doc, list) or not levels_doc:
            raise MalformedDocumentError("levels must be a non-empty list", f"{location}.levels")
        if not isinstance(transitions_doc, list) or len(transitions_doc) != len(levels_doc) - 1:
            raise ShapeMismatchError(
                f"{len(levels_doc)} levels need {len(levels_doc) - 1} transitions", f"{location}.transitions"
            )
        levels = []
        for i, level in enumerate(levels_doc):
            where = f"{location}.levels[{i}]"
            if not isinstance(level, dict):
                raise MalformedDocumentError("a level is an object with dim and theta", where)
            z = self.dimension(level, where)
            levels.append(Contramodule(c, z, self.matrix(level, "theta", z, c.dim * z, field, where)))
        transitions = [
            self.matrix(f, "", levels[i].dim, levels[i + 1].dim, field, f"{location}.transitions[{i}]")
            for i, f in enumerate(transitions_doc)
        ]
        return FiniteTower(c, tuple(levels), tuple(transitions))


def _load_json(path: Path, location: str = "$") -> Any:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise MalformedDocumentError(f"cannot read {path}: {exc.strerror}", location) from exc
    except UnicodeDecodeError as exc:
        raise MalformedDocumentError(f"{path} is not UTF-8", location) from exc
    return _decode(text, location)


def _decode(text: str, location: str = "$") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocumentError(
            f"invalid JSON: {exc.msg}", location, details={"line": exc.lineno, "column": exc.colno}
        ) from exc


def parse(document: Any, base_dir: Optional[Path] = None) -> Structure:
    """Build a structure from a decoded JSON value.

    Raises:
        ParseError: A subclass naming the offending location
    """
    return _Reader(base_dir).document(document)


def parse_text(text: str, base_dir: Optional[Path] = None) -> Structure:
    return parse(_decode(text), base_dir)


def parse_file(path: Union[str, Path]) -> Structure:
    path = Path(path).resolve()
    logger.info(f"reading {path}")
    return _Reader(path.parent, (path,)).document(_load_json(path))


__all__ = [
    "KINDS",
    "ParseError",
    "check_structure",
    "dumps",
    "emit",
    "emit_document",
    "kind_of",
    "parse",
    "parse_file",
    "parse_text",
    "resolve_kind",
]
