"""JSON instance documents and exact serialization.

An instance is one JSON object.  Recognised top-level keys::

    ground      list of atom labels
    sets        list of sets, each a list of labels
    measure     {label: rational}
    measures    list of {label: rational}
    ideal       {"generators": [set, ...]} or {"members": [set, ...]}
    functional  {"vertices": [{label: rational}, ...]}
    families    list of families, each a list of sets
    order       {"f": {label: rational}, "g": {label: rational}}
    function    {label: rational}
    matrix      list of rows of rationals

Rationals are ``"p/q"`` strings (``"3"`` for integers) or JSON integers.
Unlisted labels in a measure or function map default to 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .core import (
    GroundSet,
    Ideal,
    Measure,
    SetSystem,
    SimpleFunction,
    VertexFunctional,
    format_rational,
    ideal_validate,
    to_rational,
)
from .errors import KelleyError

KEYS = (
    "families",
    "function",
    "functional",
    "ground",
    "ideal",
    "matrix",
    "measure",
    "measures",
    "order",
    "sets",
)


class ParseError(KelleyError, ValueError):
    pass


class SchemaError(KelleyError, ValueError):
    pass


@dataclass
class Instance:
    raw: dict
    ground: GroundSet | None = None
    sets: list[int] = field(default_factory=list)

    def require(self, *keys):
        for key in keys:
            if key not in self.raw:
                raise SchemaError(f"missing section {key!r}")
        if "matrix" not in keys and self.ground is None:
            raise SchemaError("missing section 'ground'")

    def system(self) -> SetSystem:
        self.require("sets")
        return SetSystem(self.ground, self.sets)

    def measure(self) -> Measure:
        self.require("measure")
        return _measure(self.ground, self.raw["measure"], "measure")

    def measures(self) -> list[Measure]:
        self.require("measures")
        return [
            _measure(self.ground, m, f"measures[{i}]")
            for i, m in enumerate(self.raw["measures"])
        ]

    def ideal_members(self) -> list[int] | None:
        """The explicit ``members`` list, or None when given by generators."""
        self.require("ideal")
        members = self.raw["ideal"].get("members")
        if members is None:
            return None
        return [_set(self.ground, s, "ideal.members") for s in members]

    def ideal(self) -> Ideal:
        """The ideal; explicit members are validated (may raise NotAnIdeal)."""
        self.require("ideal")
        members = self.ideal_members()
        if members is not None:
            return ideal_validate(self.ground, members)
        generator = 0
        for s in self.raw["ideal"]["generators"]:
            generator |= _set(self.ground, s, "ideal.generators")
        return Ideal(self.ground, generator)

    def functional(self) -> VertexFunctional:
        self.require("functional")
        vertices = [
            _measure(self.ground, v, f"functional.vertices[{i}]")
            for i, v in enumerate(self.raw["functional"]["vertices"])
        ]
        return VertexFunctional(self.ground, vertices)

    def families(self) -> list[SetSystem]:
        self.require("families")
        return [
            SetSystem(self.ground, [_set(self.ground, s, f"families[{i}]") for s in fam])
            for i, fam in enumerate(self.raw["families"])
        ]

    def order_pair(self) -> tuple[SimpleFunction, SimpleFunction]:
        self.require("order")
        order = self.raw["order"]
        return (
            _function(self.ground, order["f"], "order.f"),
            _function(self.ground, order["g"], "order.g"),
        )

    def function(self) -> SimpleFunction:
        self.require("function")
        return _function(self.ground, self.raw["function"], "function")

    def matrix(self) -> list[list[Fraction]]:
        self.require("matrix")
        return [list(row) for row in self.raw["matrix"]]


def _rational(value, where) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise SchemaError(f"{where}: expected a 'p/q' string or integer, got {value!r}")
    try:
        return to_rational(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise SchemaError(f"{where}: bad rational {value!r} ({exc})") from None


def _label(ground: GroundSet, label, where) -> int:
    if not isinstance(label, (str, int)) or isinstance(label, bool):
        raise SchemaError(f"{where}: bad label {label!r}")
    try:
        return ground.index(label)
    except KeyError:
        raise SchemaError(f"{where}: unknown label {str(label)!r}") from None


def _set(ground: GroundSet, labels, where) -> int:
    if not isinstance(labels, list):
        raise SchemaError(f"{where}: a set must be a list of labels, got {labels!r}")
    mask = 0
    for label in labels:
        mask |= 1 << _label(ground, label, where)
    return mask


def _mapping(ground, raw, where) -> list[Fraction]:
    if not isinstance(raw, dict):
        raise SchemaError(f"{where}: expected an object mapping labels to rationals")
    values = [Fraction(0)] * len(ground)
    for label, v in raw.items():
        values[_label(ground, label, where)] = _rational(v, f"{where}[{label!r}]")
    return values


def _measure(ground, raw, where) -> Measure:
    values = _mapping(ground, raw, where)
    if any(v < 0 for v in values):
        raise SchemaError(f"{where}: masses must be nonnegative")
    return Measure(ground, values)


def _function(ground, raw, where) -> SimpleFunction:
    return SimpleFunction(ground, _mapping(ground, raw, where))


def _expect(raw, key, kind, allowed_keys=None):
    value = raw[key]
    if not isinstance(value, kind):
        raise SchemaError(f"{key}: expected {kind.__name__}, got {type(value).__name__}")
    if allowed_keys is not None:
        extra = sorted(set(value) - set(allowed_keys))
        if extra:
            raise SchemaError(f"{key}: unknown keys {extra}")
    return value


def load_instance(doc: Any) -> Instance:
    """Validate a decoded JSON document and resolve every label."""
    if not isinstance(doc, dict):
        raise SchemaError("the instance must be a JSON object")
    unknown = sorted(set(doc) - set(KEYS))
    if unknown:
        raise SchemaError(f"unknown keys {unknown}")
    inst = Instance(doc)
    if "ground" in doc:
        labels = _expect(doc, "ground", list)
        if not labels or any(not isinstance(x, (str, int)) or isinstance(x, bool) for x in labels):
            raise SchemaError("ground: expected a nonempty list of labels")
        try:
            inst.ground = GroundSet(labels)
        except ValueError as exc:
            raise SchemaError(f"ground: {exc}") from None
    needs_ground = [k for k in doc if k not in ("ground", "matrix")]
    if needs_ground and inst.ground is None:
        raise SchemaError(f"sections {needs_ground} need a 'ground' list")
    g = inst.ground

    # resolve everything eagerly so schema errors surface before any work
    if "sets" in doc:
        inst.sets = [_set(g, s, "sets") for s in _expect(doc, "sets", list)]
    if "measure" in doc:
        _measure(g, doc["measure"], "measure")
    if "measures" in doc:
        for i, m in enumerate(_expect(doc, "measures", list)):
            _measure(g, m, f"measures[{i}]")
    if "ideal" in doc:
        ideal = _expect(doc, "ideal", dict, ("generators", "members"))
        if len(ideal) != 1:
            raise SchemaError("ideal: give exactly one of 'generators' or 'members'")
        for key, sets in ideal.items():
            if not isinstance(sets, list):
                raise SchemaError(f"ideal.{key}: expected a list of sets")
            for s in sets:
                _set(g, s, f"ideal.{key}")
    if "functional" in doc:
        fn = _expect(doc, "functional", dict, ("vertices",))
        vertices = fn.get("vertices")
        if not isinstance(vertices, list) or not vertices:
            raise SchemaError("functional.vertices: expected a nonempty list of measures")
        for i, v in enumerate(vertices):
            _measure(g, v, f"functional.vertices[{i}]")
    if "families" in doc:
        for i, fam in enumerate(_expect(doc, "families", list)):
            if not isinstance(fam, list):
                raise SchemaError(f"families[{i}]: expected a list of sets")
            for s in fam:
                _set(g, s, f"families[{i}]")
    if "order" in doc:
        order = _expect(doc, "order", dict, ("f", "g"))
        if set(order) != {"f", "g"}:
            raise SchemaError("order: needs both 'f' and 'g'")
        for key in ("f", "g"):
            _mapping(g, order[key], f"order.{key}")
    if "function" in doc:
        _mapping(g, doc["function"], "function")
    if "matrix" in doc:
        rows = _expect(doc, "matrix", list)
        if not rows or not all(isinstance(r, list) and r for r in rows):
            raise SchemaError("matrix: expected a nonempty list of nonempty rows")
        if len({len(r) for r in rows}) != 1:
            raise SchemaError("matrix: rows must have equal length")
        doc["matrix"] = [
            [_rational(v, f"matrix[{i}][{j}]") for j, v in enumerate(r)]
            for i, r in enumerate(rows)
        ]
    return inst


def parse_instance(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    return load_instance(doc)


def to_jsonable(value):
    """Recursively turn Fractions into canonical strings."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


def dumps(value) -> str:
    return json.dumps(to_jsonable(value), sort_keys=True, indent=2, ensure_ascii=False)


def measure_json(m: Measure) -> dict[str, str]:
    return {label: format_rational(v) for label, v in m.as_dict().items()}


def set_json(ground: GroundSet, mask: int) -> list[str]:
    return ground.labels_of(mask)
