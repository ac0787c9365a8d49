"""Readers for the file formats the command line accepts."""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from .poly import SparsePoly


class InputError(ValueError):
    """Malformed or inconsistent input file."""


def _text(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _json(path):
    try:
        return json.loads(_text(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def parse_matrix(text: str, source: str = "<matrix>") -> np.ndarray:
    """Dense matrix from CSV rows or JSON {"rows": [[...], ...]}."""
    stripped = text.strip()
    if not stripped:
        raise InputError(f"{source}: empty matrix")
    if stripped.startswith("{"):
        try:
            rows = json.loads(stripped)["rows"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise InputError(f"{source}: matrix JSON needs a 'rows' list") from exc
    else:
        rows = [r for r in csv.reader(io.StringIO(stripped)) if r and any(c.strip() for c in r)]
    try:
        data = [[float(c) for c in r] for r in rows]
    except (TypeError, ValueError) as exc:
        raise InputError(f"{source}: non-numeric entry ({exc})") from exc
    widths = {len(r) for r in data}
    if len(widths) != 1:
        raise InputError(f"{source}: ragged rows (lengths {sorted(widths)})")
    A = np.array(data, dtype=float)
    if not np.all(np.isfinite(A)):
        raise InputError(f"{source}: non-finite entry")
    return A


def read_matrix(path) -> np.ndarray:
    return parse_matrix(_text(path), str(path))


def read_square(path) -> np.ndarray:
    A = read_matrix(path)
    if A.shape[0] != A.shape[1]:
        raise InputError(f"{path}: expected a square matrix, got {A.shape[0]}x{A.shape[1]}")
    return A


def read_poly(path) -> SparsePoly:
    try:
        return SparsePoly.from_dict(_json(path))
    except InputError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def read_graph(path) -> dict:
    data = _json(path)
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise InputError(f"{path}: graph JSON needs 'vertices' and 'edges'")
    return data


def read_partition(path):
    """(parts, b) from {"parts": [[...], ...], "b": [...]}."""
    data = _json(path)
    try:
        parts = [[int(i) for i in part] for part in data["parts"]]
        b = [int(x) for x in data["b"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: partition JSON needs integer 'parts' and 'b'") from exc
    if len(parts) != len(b):
        raise InputError(f"{path}: {len(parts)} parts but {len(b)} bounds")
    return parts, b


def parse_vector(text: str) -> np.ndarray:
    """Comma-separated numbers, e.g. '1,0.5,2'."""
    try:
        v = np.array([float(c) for c in text.split(",") if c.strip()], dtype=float)
    except ValueError as exc:
        raise InputError(f"bad vector {text!r}") from exc
    if v.size == 0:
        raise InputError("empty vector")
    return v
