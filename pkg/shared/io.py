# -*- coding: utf-8 -*-
"""
JSON input/output for complexes, weight vectors, heights and points.

Vertices are 1-based and rationals are "p/q" strings in every file.
"""

import json
import os
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from shared.rationals import parse_rational
from utils.complex_core import SimplicialComplex, WeightVector, from_labels
from utils.errors import DomainError


def dumps(data: Any) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2)


def read_json(path: str) -> Any:
    if not os.path.exists(path):
        raise DomainError("IO_ERROR", f"no such file: {path}", {"path": path})
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise DomainError("PARSE_ERROR", f"{path}: {e.msg} at line {e.lineno}", {"path": path})
    except UnicodeDecodeError as e:
        raise DomainError("PARSE_ERROR", f"{path} is not UTF-8: {e.reason} at byte {e.start}", {"path": path})
    except OSError as e:
        raise DomainError("IO_ERROR", f"cannot read {path}: {e}", {"path": path})


def write_json(path: str, data: Any) -> None:
    """Atomic write through a temporary file."""
    folder = os.path.dirname(path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as f:
        f.write(dumps(data))
        f.write("\n")
    os.replace(tmp, path)


def complex_from_json(data: Any) -> SimplicialComplex:
    """{"n": 4, "facets": [[1, 2], [3]]}; listed sets need not be maximal."""
    if not isinstance(data, dict) or "n" not in data or "facets" not in data:
        raise DomainError("PARSE_ERROR", 'a complex needs the keys "n" and "facets"')
    n, facets = data["n"], data["facets"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError("PARSE_ERROR", f'"n" must be an integer, got {n!r}')
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise DomainError("PARSE_ERROR", '"facets" must be a list of vertex lists')
    return from_labels(n, facets)


def weights_from_json(data: Any) -> WeightVector:
    """{"l": ["3/10", "3/10", "4/10"], "nu": "1/2"}."""
    if not isinstance(data, dict) or "l" not in data or "nu" not in data:
        raise DomainError("PARSE_ERROR", 'weights need the keys "l" and "nu"')
    if not isinstance(data["l"], list):
        raise DomainError("PARSE_ERROR", '"l" must be a list of rationals')
    return WeightVector(tuple(parse_rational(v) for v in data["l"]), parse_rational(data["nu"]))


def heights_from_json(data: Any) -> Dict[str, Any]:
    """Accepts a bare {"1": "1", "1bar": "2", ...} map or a solve report with a "witness"."""
    if isinstance(data, dict) and isinstance(data.get("witness"), dict):
        data = data["witness"]
    if not isinstance(data, dict):
        raise DomainError("PARSE_ERROR", "heights must be an object keyed by Bier vertex labels")
    return data


def load_complex(path: str) -> SimplicialComplex:
    return complex_from_json(read_json(path))


def load_weights(path: str) -> WeightVector:
    return weights_from_json(read_json(path))


def parse_point(text: str) -> Tuple[Fraction, ...]:
    """"1/3,-1/3,0" -> (1/3, -1/3, 0)."""
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if not parts:
        raise DomainError("PARSE_ERROR", "empty coordinate list")
    return tuple(parse_rational(p) for p in parts)


def parse_labels(text: str) -> List[int]:
    """"1,3" -> [1, 3]; an empty string is the empty set."""
    parts = [p for p in text.replace(" ", "").split(",") if p]
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise DomainError("PARSE_ERROR", f"not a vertex list: {text!r}")
