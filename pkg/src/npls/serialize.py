"""JSON and CSV encodings for data, systems, reports and grids.

Complex numbers are stored as ``{"re": x, "im": y}``. Matrices in system
files keep full double precision (Python's shortest round-trip repr, at most
17 significant digits), so a write/read cycle is bit-exact. Reports round to
12 significant digits.
"""

from __future__ import annotations

import json
import math
from typing import Any, Iterable, Optional

import numpy as np

from .errors import InvalidData
from .pick import InterpolationData, validate_data
from .system import FORMS, LSystem

REPORT_DIGITS = 12


def complex_to_json(z: complex) -> dict:
    z = complex(z)
    return {"re": float(z.real), "im": float(z.imag)}


def complex_from_json(obj: Any, where: str = "value") -> complex:
    if isinstance(obj, dict) and set(obj) >= {"re", "im"}:
        try:
            return complex(float(obj["re"]), float(obj["im"]))
        except (TypeError, ValueError) as exc:
            raise InvalidData(f"{where}: re/im must be numbers") from exc
    raise InvalidData(f"{where}: expected an object with 're' and 'im'")


# -- interpolation data -----------------------------------------------------


def data_from_json(text: str) -> InterpolationData:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidData(f"malformed JSON: {exc}") from exc
    if not isinstance(obj, dict) or not isinstance(obj.get("nodes"), list):
        raise InvalidData("data file needs a 'nodes' list")
    nodes = [complex_from_json(n, f"node {k}") for k, n in enumerate(obj["nodes"], start=1)]
    values = obj.get("values")
    if values is not None:
        if not isinstance(values, list):
            raise InvalidData("'values' must be a list")
        values = [complex_from_json(v, f"value {k}") for k, v in enumerate(values, start=1)]
    return validate_data(nodes, values)


def data_to_json(data: InterpolationData) -> str:
    obj: dict = {"nodes": [complex_to_json(z) for z in data.nodes]}
    if not data.values_defaulted:
        obj["values"] = [complex_to_json(v) for v in data.values]
    return json.dumps(obj, indent=2) + "\n"


# -- systems ------------------------------------------------------------------


def _matrix_to_json(M: np.ndarray) -> list:
    return [[complex_to_json(x) for x in row] for row in M]


def _matrix_from_json(obj: Any, name: str) -> np.ndarray:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise InvalidData(f"'{name}' must be a list of rows")
    return np.array([[complex_from_json(x, name) for x in row] for row in obj], dtype=complex)


def system_to_dict(sys: LSystem) -> dict:
    return {
        "form": sys.form,
        "T": _matrix_to_json(sys.T),
        "K": [complex_to_json(x) for x in sys.K],
        "metric": None if sys.metric is None else _matrix_to_json(sys.metric),
    }


def system_to_json(sys: LSystem) -> str:
    return json.dumps(system_to_dict(sys), indent=2) + "\n"


def system_from_json(text: str) -> LSystem:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidData(f"malformed JSON: {exc}") from exc
    if not isinstance(obj, dict) or obj.get("form") not in FORMS:
        raise InvalidData(f"system file needs 'form' in {FORMS}")
    T = _matrix_from_json(obj.get("T"), "T")
    K = np.array([complex_from_json(x, "K") for x in obj.get("K", [])], dtype=complex)
    metric = obj.get("metric")
    metric = None if metric is None else _matrix_from_json(metric, "metric")
    try:
        return LSystem(T, K, obj["form"], metric=metric)
    except ValueError as exc:
        raise InvalidData(str(exc)) from exc


# -- reports and grids ------------------------------------------------------


def round_sig(x: float, digits: int = REPORT_DIGITS) -> float:
    if x == 0:
        return 0.0
    if not math.isfinite(x):
        return float(x)
    return float(f"{x:.{digits}g}")


def rounded(obj: Any, digits: int = REPORT_DIGITS) -> Any:
    """Recursively round floats for report output; ``inf`` becomes ``"inf"``."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return "inf" if math.isinf(obj) else round_sig(obj, digits)
    if isinstance(obj, complex):
        return {"re": round_sig(obj.real, digits), "im": round_sig(obj.imag, digits)}
    if isinstance(obj, dict):
        return {k: rounded(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [rounded(v, digits) for v in obj]
    if isinstance(obj, np.generic):
        return rounded(obj.item(), digits)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def report_to_json(report: dict) -> str:
    return json.dumps(rounded(report), indent=2) + "\n"


def _fmt(x: float) -> str:
    # adding 0.0 folds -0.0 into 0.0 so signed zeros do not leak into output
    return f"{x + 0.0:.{REPORT_DIGITS}g}"


def grid_csv(points: Iterable[complex], values: Iterable[Optional[complex]]) -> str:
    """``z_re,z_im,f_re,f_im`` rows; ``None`` values (poles) are written as ``nan``."""
    rows = ["z_re,z_im,f_re,f_im"]
    for z, f in zip(points, values):
        f = complex(math.nan, math.nan) if f is None else complex(f)
        rows.append(",".join(_fmt(x) for x in (z.real, z.imag, f.real, f.imag)))
    return "\n".join(rows) + "\n"
