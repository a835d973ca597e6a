"""Structured output documents and the class-data input format.

Documents serialize to JSON with sorted keys. Every number is written as a
decimal string (``"p/q"`` for non-integral rationals) so that arbitrarily
large coefficients survive any consumer, and parsing a serialized document
gives back an equal document.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

import yaml

from .molien import ClassDataError, ClassRecord, GroupClassData
from .series import DensePoly, FactoredSeries, TruncatedSeries


def encode(value: Any) -> Any:
    """Normalize a payload to JSON-safe, string-numbered form."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, str):
        return value
    if isinstance(value, DensePoly):
        return [str(c) for c in value.coeffs]
    if isinstance(value, TruncatedSeries):
        return [str(c) for c in value.coeffs]
    if isinstance(value, FactoredSeries):
        return {
            "numerator": encode(value.numerator),
            "denominator": {str(i): str(e) for i, e in value.denom.items()},
        }
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    raise TypeError(f"cannot encode {type(value).__name__}")


@dataclass
class OutputDocument:
    command: str
    inputs: dict = field(default_factory=dict)
    result: dict = field(default_factory=dict)
    status: str | None = None

    def __post_init__(self):
        self.inputs = encode(self.inputs)
        self.result = encode(self.result)

    def to_dict(self) -> dict:
        return {"command": self.command, "inputs": self.inputs, "result": self.result, "status": self.status}

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def loads(cls, text: str) -> OutputDocument:
        raw = json.loads(text)
        return cls(raw["command"], raw.get("inputs", {}), raw.get("result", {}), raw.get("status"))


def decode_series(payload: dict) -> FactoredSeries:
    """Inverse of ``encode`` for a factored series payload."""
    return FactoredSeries(
        DensePoly(Fraction(c) for c in payload["numerator"]),
        {int(i): int(e) for i, e in payload["denominator"].items()},
    )


class ClassDataParseError(ValueError):
    """The class-data file is not well-formed."""


def _rational(x) -> Fraction:
    try:
        return Fraction(str(x).strip())
    except (ValueError, ZeroDivisionError):
        raise ClassDataParseError(f"not an exact rational: {x!r}") from None


def parse_class_data(text: str) -> GroupClassData:
    """Parse a YAML class-data document.

    Expected keys: ``order`` (|G|), ``classes`` (list of ``size`` and
    ``det_factors`` given as ``[i, mult]`` pairs meaning ``(1 - t^i)^mult``),
    and ``characters`` (one row per irreducible character, entries ``"p/q"``).
    """
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ClassDataParseError(f"invalid YAML: {exc}") from None
    if not isinstance(raw, dict):
        raise ClassDataParseError("class data must be a mapping")
    for key in ("order", "classes", "characters"):
        if key not in raw:
            raise ClassDataParseError(f"missing key {key!r}")
    try:
        order = int(raw["order"])
        classes = []
        for entry in raw["classes"]:
            factors: dict[int, int] = {}
            for i, m in entry["det_factors"]:
                factors[int(i)] = factors.get(int(i), 0) + int(m)
            classes.append(ClassRecord(int(entry["size"]), factors))
        chars = tuple(tuple(_rational(v) for v in row) for row in raw["characters"])
    except (TypeError, KeyError, ValueError) as exc:
        if isinstance(exc, ClassDataParseError):
            raise
        raise ClassDataParseError(f"malformed class data: {exc}") from None
    if any(i < 1 for c in classes for i in c.det_factors):
        raise ClassDataParseError("det factor indices must be >= 1")
    return GroupClassData(order, tuple(classes), chars)


def load_class_data(path: str | Path) -> GroupClassData:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ClassDataParseError(f"cannot read {path}: {exc}") from None
    return parse_class_data(text)


def dump_class_data(data: GroupClassData) -> str:
    return yaml.safe_dump(
        {
            "order": data.order,
            "classes": [
                {"size": c.size, "det_factors": [[i, m] for i, m in sorted(c.det_factors.items())]}
                for c in data.classes
            ],
            "characters": [[str(v) for v in row] for row in data.characters],
        },
        sort_keys=True,
    )


__all__ = [
    "ClassDataError",
    "ClassDataParseError",
    "OutputDocument",
    "decode_series",
    "dump_class_data",
    "encode",
    "load_class_data",
    "parse_class_data",
]
