"""Deterministic JSON/Markdown report documents."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


def exact(value: Any) -> Any:
    """Convert to JSON-ready data; rationals become ``"a/b"`` strings, never floats."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        raise TypeError("floating point values are not allowed in reports")
    if isinstance(value, enum.Enum):
        return exact(value.value)
    if isinstance(value, dict):
        return {str(k): exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


@dataclass(frozen=True)
class Discrepancy:
    claim_location: str
    paper_value: str
    derived_value: str

    def as_dict(self) -> dict:
        return {
            "claim_location": self.claim_location,
            "paper_value": self.paper_value,
            "derived_value": self.derived_value,
        }


@dataclass
class ReportDocument:
    command: str
    inputs: dict
    results: Any
    discrepancies: list[Discrepancy] = field(default_factory=list)

    def as_dict(self) -> dict:
        return exact({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "discrepancies": [d.as_dict() for d in self.discrepancies],
        })

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"

    def to_markdown(self) -> str:
        doc = self.as_dict()
        lines = [f"# {doc['command']}", ""]
        if doc["inputs"]:
            lines += ["## Inputs", ""] + _md_block(doc["inputs"]) + [""]
        lines += ["## Results", ""] + _md_block(doc["results"]) + [""]
        if doc["discrepancies"]:
            lines += ["## Discrepancies", "", "| claim | printed | derived |", "|---|---|---|"]
            lines += [f"| {d['claim_location']} | {d['paper_value']} | {d['derived_value']} |"
                      for d in doc["discrepancies"]]
            lines.append("")
        return "\n".join(lines)


def _md_block(data: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(data, dict):
        out = []
        for key in sorted(data):
            value = data[key]
            if isinstance(value, (dict, list)) and value:
                out.append(f"{pad}- {key}:")
                out += _md_block(value, indent + 1)
            else:
                out.append(f"{pad}- {key}: {_scalar(value)}")
        return out
    if isinstance(data, list) and _is_record_list(data):
        keys = sorted(data[0])
        out = [pad + "| " + " | ".join(keys) + " |", pad + "|" + "---|" * len(keys)]
        out += [pad + "| " + " | ".join(_scalar(item[k]) for k in keys) + " |" for item in data]
        return out
    if isinstance(data, list):
        out = []
        for item in data:
            if isinstance(item, (dict, list)):
                sub = _md_block(item, indent + 1)
                out.append(f"{pad}- " + sub[0].lstrip(" -") if sub else f"{pad}-")
                out += sub[1:]
            else:
                out.append(f"{pad}- {_scalar(item)}")
        return out
    return [f"{pad}{_scalar(data)}"]


def _is_record_list(data: list) -> bool:
    if not data or not all(isinstance(item, dict) for item in data):
        return False
    keys = set(data[0])
    return all(set(item) == keys and not any(isinstance(v, (dict, list)) for v in item.values())
               for item in data)


def _scalar(value: Any) -> str:
    if value is True:
        return "yes"
    if value is False:
        return "no"
    if value is None:
        return "-"
    if isinstance(value, list) and not value:
        return "[]"
    if isinstance(value, dict) and not value:
        return "{}"
    return str(value)
