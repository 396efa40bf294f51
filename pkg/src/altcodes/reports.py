"""JSON rendering of verdicts and reports (schema version 1)."""
from __future__ import annotations

import dataclasses
import enum
import json
from fractions import Fraction
from typing import Any

from .language import Language

SCHEMA_VERSION = 1


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, Language):
        return obj.sorted()
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, Fraction):
        return str(obj)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        out = {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
        if hasattr(obj, "candidates") and "candidates" not in out:
            out["candidates"] = obj.candidates
        return out
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [to_jsonable(v) for v in obj]
    return obj


def report(command: str, **payload: Any) -> dict:
    out = {"schema": SCHEMA_VERSION, "command": command}
    out.update({k: to_jsonable(v) for k, v in payload.items()})
    return out


def dumps(doc: dict) -> str:
    return json.dumps(doc, ensure_ascii=False, indent=2)


def decision_payload(rep) -> dict:
    return {
        "verdict": rep.verdict,
        "route": rep.route,
        "decomposition": rep.decomposition,
        "search_stats": rep.stats,
        "gcd": rep.gcd,
        "trace": rep.trace,
    }
