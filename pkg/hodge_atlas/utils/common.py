import json
import re
from dataclasses import fields, is_dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, List

import mpmath

from hodge_atlas.models.period_models import decimal_string


def convert(obj):
    """Plain JSON-ready data: dataclasses through their to_dict, reals as decimal strings."""
    if isinstance(obj, Enum):
        return obj.value
    if hasattr(obj, "to_dict"):
        return convert(obj.to_dict())
    if is_dataclass(obj):
        return {f.name: convert(getattr(obj, f.name)) for f in fields(obj)}
    if isinstance(obj, (list, tuple)):
        return [convert(v) for v in obj]
    if isinstance(obj, dict):
        return {str(k): convert(v) for k, v in obj.items()}
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, mpmath.mpc):
        return {"re": decimal_string(obj.real, mpmath.mp.dps), "im": decimal_string(obj.imag, mpmath.mp.dps)}
    if isinstance(obj, mpmath.mpf):
        return decimal_string(obj, mpmath.mp.dps)
    if isinstance(obj, float):
        return repr(obj)
    return obj


def to_json(obj: Any) -> str:
    return json.dumps(convert(obj), sort_keys=True, indent=2, ensure_ascii=False)


def parse_complex(text: str) -> str:
    """
    Normalize a complex literal such as ``0.3``, ``1/2``, ``0.2+0.1i`` or ``-1j`` to the
    form the period evaluators parse; raises ValueError on anything else.
    """
    cleaned = text.strip().replace(" ", "").replace("I", "i").replace("i", "j")
    if not cleaned:
        raise ValueError("empty number")
    # a bare unit j needs its coefficient
    cleaned = re.sub(r"(^|[+-])j$", r"\g<1>1j", cleaned)
    if "/" in cleaned:
        try:
            Fraction(cleaned)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"not a rational number: {text!r}") from e
        return cleaned
    try:
        mpmath.mpmathify(cleaned)
    except (ValueError, TypeError) as e:
        raise ValueError(f"not a number: {text!r}") from e
    return cleaned


def parse_list(text: str) -> List[str]:
    """Comma-separated complex literals."""
    return [parse_complex(item) for item in text.split(",") if item.strip()]


def read_json_spec(file_path: Path) -> Any:
    """Read a UTF-8 JSON input spec; raises OSError or ValueError."""
    with open(file_path, "r", encoding="utf-8") as f:
        return json.load(f)
