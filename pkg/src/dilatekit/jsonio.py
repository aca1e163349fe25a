"""JSON wire formats.

Matrix (the interchange object every CLI command reads and writes)::

    {"rows": int, "cols": int, "entries": [[re, im], ...]}   # row-major

Block operator::

    {"splits": {"row": int, "col": int}, "matrix": <matrix object>}

Power dilation::

    {"n_steps": int, "dim_h": int, "matrix": <matrix object>}

Residual report::

    {"checks": [{"name": str, "residual": float, "tolerance": float,
                 "pass": bool}, ...]}

Numbers are plain JSON doubles; Python's round-trip float formatting makes
write-then-read bit-exact.  Schema violations raise :class:`SchemaError`
naming the offending field.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .dilation import Block2x2
from .linalg import block2x2_extract
from .powerdil import PowerDilation
from .report import ResidualCheck, ResidualReport

__all__ = [
    "SchemaError",
    "matrix_to_json",
    "matrix_from_json",
    "block2x2_to_json",
    "block2x2_from_json",
    "power_dilation_to_json",
    "power_dilation_from_json",
    "report_to_json",
    "read_json",
    "write_json",
]


class SchemaError(ValueError):
    """A JSON document does not match its schema; names the offending field."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"field {field!r}: {message}")


def _require_positive_int(obj: dict, field: str) -> int:
    value = obj.get(field)
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise SchemaError(field, f"expected a positive integer, got {value!r}")
    return value


def matrix_to_json(m: np.ndarray) -> dict:
    rows, cols = m.shape
    flat = np.asarray(m, dtype=np.complex128).ravel()
    return {
        "rows": int(rows),
        "cols": int(cols),
        "entries": [[float(z.real), float(z.imag)] for z in flat],
    }


def matrix_from_json(obj) -> np.ndarray:
    if not isinstance(obj, dict):
        raise SchemaError("matrix", f"expected an object, got {type(obj).__name__}")
    rows = _require_positive_int(obj, "rows")
    cols = _require_positive_int(obj, "cols")
    entries = obj.get("entries")
    if not isinstance(entries, list):
        raise SchemaError("entries", "expected a list of [re, im] pairs")
    if len(entries) != rows * cols:
        raise SchemaError(
            "entries", f"expected {rows * cols} pairs for a {rows}x{cols} matrix, got {len(entries)}"
        )
    values = np.empty(rows * cols, dtype=np.complex128)
    for i, pair in enumerate(entries):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise SchemaError(f"entries[{i}]", f"expected [re, im] numbers, got {pair!r}")
        re, im = float(pair[0]), float(pair[1])
        if not (math.isfinite(re) and math.isfinite(im)):
            raise SchemaError(f"entries[{i}]", "entries must be finite")
        values[i] = complex(re, im)
    return values.reshape(rows, cols)


def block2x2_to_json(b: Block2x2) -> dict:
    return {
        "splits": {"row": int(b.row_split), "col": int(b.col_split)},
        "matrix": matrix_to_json(b.to_matrix()),
    }


def block2x2_from_json(obj) -> Block2x2:
    if not isinstance(obj, dict):
        raise SchemaError("block", f"expected an object, got {type(obj).__name__}")
    splits = obj.get("splits")
    if not isinstance(splits, dict):
        raise SchemaError("splits", "expected an object with 'row' and 'col'")
    row = _require_positive_int(splits, "row")
    col = _require_positive_int(splits, "col")
    m = matrix_from_json(obj.get("matrix"))
    if row >= m.shape[0]:
        raise SchemaError("splits.row", f"split {row} not strictly inside {m.shape[0]} rows")
    if col >= m.shape[1]:
        raise SchemaError("splits.col", f"split {col} not strictly inside {m.shape[1]} columns")
    tl, tr, bl, br = block2x2_extract(m, row, col)
    return Block2x2(tl=tl, tr=tr, bl=bl, br=br)


def power_dilation_to_json(d: PowerDilation) -> dict:
    return {
        "n_steps": int(d.n_steps),
        "dim_h": int(d.dim_h),
        "matrix": matrix_to_json(d.u),
    }


def power_dilation_from_json(obj) -> PowerDilation:
    if not isinstance(obj, dict):
        raise SchemaError("dilation", f"expected an object, got {type(obj).__name__}")
    n_steps = _require_positive_int(obj, "n_steps")
    dim_h = _require_positive_int(obj, "dim_h")
    m = matrix_from_json(obj.get("matrix"))
    expected = (n_steps + 1) * dim_h
    if m.shape != (expected, expected):
        raise SchemaError(
            "matrix", f"expected shape {expected}x{expected} for n_steps={n_steps}, "
            f"dim_h={dim_h}, got {m.shape[0]}x{m.shape[1]}"
        )
    return PowerDilation(u=m, n_steps=n_steps, dim_h=dim_h)


def report_to_json(r: ResidualReport) -> dict:
    return {
        "checks": [
            {
                "name": c.name,
                "residual": float(c.residual),
                "tolerance": float(c.tolerance),
                "pass": bool(c.passed),
            }
            for c in r.checks
        ]
    }


def report_from_json(obj) -> ResidualReport:
    if not isinstance(obj, dict) or not isinstance(obj.get("checks"), list):
        raise SchemaError("checks", "expected a list of check objects")
    checks = []
    for i, c in enumerate(obj["checks"]):
        if not isinstance(c, dict):
            raise SchemaError(f"checks[{i}]", "expected an object")
        try:
            checks.append(
                ResidualCheck(
                    name=str(c["name"]),
                    residual=float(c["residual"]),
                    tolerance=float(c["tolerance"]),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"checks[{i}]", str(exc)) from exc
    return ResidualReport(checks=tuple(checks))


def read_json(path) -> object:
    with open(Path(path), "r", encoding="utf-8") as fh:
        return json.load(fh)


def write_json(path, obj) -> None:
    with open(Path(path), "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")
