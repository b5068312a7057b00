"""Structured-record serialization for CLI output.

Records are one JSON object per line with sorted keys and no float
anywhere: big integers print in full, exact ratios as "num/den" strings.
Identical inputs therefore serialize byte-identically.
"""

from __future__ import annotations

import dataclasses
import json
from enum import Enum
from fractions import Fraction

from .arith import Factorization


def to_jsonable(obj):
    if isinstance(obj, Factorization):
        return obj.text()
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, frozenset):
        return sorted(obj)
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def record_line(payload: dict) -> str:
    return json.dumps(to_jsonable(payload), sort_keys=True, separators=(",", ":"))
