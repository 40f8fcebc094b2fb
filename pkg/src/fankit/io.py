"""JSON document formats for fans, complexes, realizations, and reports.

All integers inside documents are serialized as decimal strings so that
deeply subdivided fans with coordinates beyond 64 bits survive any JSON
implementation.  Serialization is canonical (sorted keys, two-space indent,
trailing newline): parse followed by serialize is the identity on canonical
files, and re-running a deterministic pipeline reproduces byte-identical
output.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .complexes import SimplicialComplex
from .errors import ParseError
from .fan import Fan
from .polytopality import Realization

FAN_SCHEMA = "fankit.fan/1"
COMPLEX_SCHEMA = "fankit.complex/1"
REALIZATION_SCHEMA = "fankit.realization/1"
REPORT_SCHEMA = "fankit.report/1"


def dumps_canonical(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def bytes_digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def file_digest(path: str | Path) -> str:
    return bytes_digest(Path(path).read_bytes())


def _expect(doc: Any, key: str, kind: type, where: str):
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError(f"{where}: missing key {key!r}")
    value = doc[key]
    if not isinstance(value, kind):
        raise ParseError(f"{where}: {key!r} must be {kind.__name__}")
    return value


def _parse_int(text: Any, where: str) -> int:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ParseError(f"{where}: expected a decimal-string integer, got {text!r}")
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{where}: not an integer: {text!r}") from None


def fan_to_document(fan: Fan, name: str | None = None, metadata: dict | None = None) -> dict:
    doc: dict[str, Any] = {
        "schema": FAN_SCHEMA,
        "ambient_dim": fan.ambient_dim,
        "rays": [
            {"label": r.label, "vector": [str(x) for x in r.vector]} for r in fan.rays
        ],
        "max_cones": [list(fan.cone_labels(i)) for i in range(len(fan.max_cones))],
    }
    if name is not None:
        doc["name"] = name
    if metadata:
        doc["metadata"] = metadata
    return doc


def fan_from_document(doc: dict) -> Fan:
    schema = _expect(doc, "schema", str, "fan document")
    if schema != FAN_SCHEMA:
        raise ParseError(f"fan document: unsupported schema {schema!r}")
    dim = _expect(doc, "ambient_dim", int, "fan document")
    rays = []
    for i, entry in enumerate(_expect(doc, "rays", list, "fan document")):
        label = _expect(entry, "label", str, f"ray #{i}")
        vector = _expect(entry, "vector", list, f"ray #{i}")
        rays.append((label, tuple(_parse_int(x, f"ray {label!r}") for x in vector)))
    cones = []
    for i, cone in enumerate(_expect(doc, "max_cones", list, "fan document")):
        if not isinstance(cone, list) or not all(isinstance(l, str) for l in cone):
            raise ParseError(f"max cone #{i} must be a list of ray labels")
        cones.append(tuple(cone))
    try:
        return Fan.from_labels(dim, rays, cones)
    except Exception as e:
        raise ParseError(f"fan document is not a valid fan: {e}") from e


def complex_to_document(
    c: SimplicialComplex, name: str | None = None, metadata: dict | None = None
) -> dict:
    doc: dict[str, Any] = {
        "schema": COMPLEX_SCHEMA,
        "vertices": list(c.vertex_labels),
        "facets": [sorted(c.label_set(f)) for f in c.facets],
    }
    if name is not None:
        doc["name"] = name
    if metadata:
        doc["metadata"] = metadata
    return doc


def complex_from_document(doc: dict) -> SimplicialComplex:
    schema = _expect(doc, "schema", str, "complex document")
    if schema != COMPLEX_SCHEMA:
        raise ParseError(f"complex document: unsupported schema {schema!r}")
    vertices = _expect(doc, "vertices", list, "complex document")
    facets = _expect(doc, "facets", list, "complex document")
    if not all(isinstance(v, str) for v in vertices):
        raise ParseError("complex document: vertices must be strings")
    for i, f in enumerate(facets):
        if not isinstance(f, list) or not all(isinstance(v, str) for v in f):
            raise ParseError(f"facet #{i} must be a list of vertex labels")
        if not set(f) <= set(vertices):
            raise ParseError(f"facet #{i} references unknown vertices")
    try:
        complex_ = SimplicialComplex.from_label_facets(facets)
    except Exception as e:
        raise ParseError(f"complex document is not a valid complex: {e}") from e
    extra = set(vertices) - set(complex_.vertex_labels)
    if extra:
        raise ParseError(f"complex document: vertices {sorted(extra)} appear in no facet")
    return complex_


def realization_to_document(r: Realization, name: str | None = None) -> dict:
    doc: dict[str, Any] = {
        "schema": REALIZATION_SCHEMA,
        "dim": r.dim,
        "coords": {
            label: [str(x) for x in vec] for label, vec in sorted(r.coords.items())
        },
    }
    if name is not None:
        doc["name"] = name
    return doc


def realization_from_document(doc: dict) -> Realization:
    schema = _expect(doc, "schema", str, "realization document")
    if schema != REALIZATION_SCHEMA:
        raise ParseError(f"realization document: unsupported schema {schema!r}")
    dim = _expect(doc, "dim", int, "realization document")
    coords = _expect(doc, "coords", dict, "realization document")
    parsed = {}
    for label, vec in coords.items():
        if not isinstance(vec, list) or len(vec) != dim:
            raise ParseError(f"coordinates of {label!r} must be a list of {dim} entries")
        entries = []
        for x in vec:
            if not isinstance(x, str):
                raise ParseError(f"coordinates of {label!r} must be 'p' or 'p/q' strings")
            try:
                entries.append(Fraction(x))
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad rational {x!r} in coordinates of {label!r}") from None
        parsed[label] = tuple(entries)
    return Realization(parsed)


def load_document(path: str | Path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top-level value must be an object")
    return doc


def save_document(path: str | Path, doc: dict) -> None:
    Path(path).write_text(dumps_canonical(doc), encoding="utf-8")


def load_fan(path: str | Path) -> Fan:
    return fan_from_document(load_document(path))


def load_complex(path: str | Path) -> SimplicialComplex:
    return complex_from_document(load_document(path))


def load_realization(path: str | Path) -> Realization:
    return realization_from_document(load_document(path))
