"""File formats: matrices, 2-vectors, embeddings, reports, trajectories.

CSV matrices are a plain n-by-n numeric grid with no header. JSON
matrices are {"n": ..., "mode": "additive"|"multiplicative", "entries":
[[...], ...]}. Numbers are serialized at full round-trip precision (the
shortest decimal that reparses to the same double), so write-then-read is
exact.
"""

from __future__ import annotations

import csv
import io as _io
import json
from pathlib import Path
from typing import Any, TextIO

import numpy as np

from .embedding import Embedding, custom_embedding
from .errors import PCGeomError
from .exterior import TwoVector, new_two_vector
from .pc_core import (
    AdditiveMatrix,
    DEFAULT_TOLERANCE,
    MultiplicativeMatrix,
    new_additive,
    new_multiplicative,
)
from .reduction import ReductionTrajectory

ADDITIVE = "additive"
MULTIPLICATIVE = "multiplicative"


class FormatError(PCGeomError):
    """Input file does not parse under the declared format."""


def infer_format(path: str | Path, fallback: str | None = None) -> str:
    suffix = Path(path).suffix.lower()
    if suffix == ".json":
        return "json"
    if suffix == ".csv":
        return "csv"
    if suffix == ".jsonl":
        return "jsonl"
    if fallback:
        return fallback
    raise FormatError(
        f"cannot infer format from {path!r}; pass an explicit format"
    )


def _parse_grid(rows: list[list[str]], source: str) -> np.ndarray:
    grid = []
    for r, row in enumerate(rows):
        if not row:
            continue
        try:
            grid.append([float(cell) for cell in row])
        except ValueError as exc:
            raise FormatError(f"{source}: row {r + 1} has a non-numeric cell") from exc
    if not grid:
        raise FormatError(f"{source}: no numeric rows found")
    widths = {len(row) for row in grid}
    if len(widths) != 1:
        raise FormatError(f"{source}: rows have differing lengths {sorted(widths)}")
    return np.asarray(grid, dtype=float)


def _as_float_array(values, source: str, what: str) -> np.ndarray:
    try:
        return np.asarray(values, dtype=float)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"{source}: {what} is not a numeric array") from exc


def _load_matrix_doc(path: str | Path, fmt: str, declared_mode: str | None):
    if fmt == "csv":
        with open(path, newline="") as fh:
            rows = [row for row in csv.reader(fh)]
        return _parse_grid(rows, str(path)), declared_mode or ADDITIVE
    if fmt == "json":
        with open(path) as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as exc:
                raise FormatError(f"{path}: invalid JSON ({exc})") from exc
        if not isinstance(doc, dict) or "entries" not in doc:
            raise FormatError(f'{path}: expected an object with "entries"')
        mode = doc.get("mode", declared_mode or ADDITIVE)
        if declared_mode and doc.get("mode") and doc["mode"] != declared_mode:
            raise FormatError(
                f"{path}: file says mode={doc['mode']!r} but "
                f"mode={declared_mode!r} was requested"
            )
        arr = _as_float_array(doc["entries"], str(path), "entries")
        if "n" in doc and arr.shape != (doc["n"], doc["n"]):
            raise FormatError(
                f"{path}: entries shape {arr.shape} does not match n={doc['n']}"
            )
        return arr, mode
    raise FormatError(f"unsupported matrix format {fmt!r}")


def read_matrix(
    path: str | Path,
    fmt: str | None = None,
    mode: str | None = None,
    tol: float = DEFAULT_TOLERANCE,
) -> AdditiveMatrix | MultiplicativeMatrix:
    """Read and validate a matrix file in the declared or inferred format."""
    fmt = fmt or infer_format(path)
    arr, resolved_mode = _load_matrix_doc(path, fmt, mode)
    if resolved_mode == ADDITIVE:
        return new_additive(arr, tol=tol)
    if resolved_mode == MULTIPLICATIVE:
        return new_multiplicative(arr, tol=tol)
    raise FormatError(f"unknown matrix mode {resolved_mode!r}")


def matrix_to_dict(
    m: AdditiveMatrix | MultiplicativeMatrix, version: str | None = None
) -> dict:
    if isinstance(m, AdditiveMatrix):
        entries, mode = m.to_array(), ADDITIVE
    else:
        entries, mode = m.entries, MULTIPLICATIVE
    doc: dict[str, Any] = {
        "n": int(m.n),
        "mode": mode,
        "entries": [[float(v) for v in row] for row in entries],
    }
    if version:
        doc["version"] = version
    return doc


def write_matrix(
    m: AdditiveMatrix | MultiplicativeMatrix,
    dest: TextIO,
    fmt: str = "json",
    version: str | None = None,
) -> None:
    if fmt == "json":
        json.dump(matrix_to_dict(m, version=version), dest, indent=2)
        dest.write("\n")
    elif fmt == "csv":
        entries = (
            m.to_array() if isinstance(m, AdditiveMatrix) else m.entries
        )
        write_grid_csv(entries, dest)
    else:
        raise FormatError(f"unsupported matrix format {fmt!r}")


def write_grid_csv(entries: np.ndarray, dest: TextIO) -> None:
    writer = csv.writer(dest)
    for row in np.asarray(entries):
        writer.writerow([repr(float(v)) for v in row])


def two_vector_to_dict(p: TwoVector, version: str | None = None) -> dict:
    doc: dict[str, Any] = {
        "n": int(p.n),
        "coords": [float(v) for v in p.coords],
    }
    if version:
        doc["version"] = version
    return doc


def read_two_vector(path: str | Path) -> TwoVector:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(doc, dict) or "n" not in doc or "coords" not in doc:
        raise FormatError(f'{path}: expected an object with "n" and "coords"')
    return new_two_vector(int(doc["n"]), _as_float_array(doc["coords"], str(path), "coords"))


def read_vector_pair(path: str | Path) -> tuple[np.ndarray, np.ndarray]:
    """Read {"u": [...], "v": [...]} for wedge-style commands."""
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(doc, dict) or "u" not in doc or "v" not in doc:
        raise FormatError(f'{path}: expected an object with "u" and "v"')
    return (
        _as_float_array(doc["u"], str(path), "u"),
        _as_float_array(doc["v"], str(path), "v"),
    )


def read_embedding(path: str | Path) -> Embedding:
    """Read a custom embedding {"n": ..., "vectors": [[...], ...]}."""
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(doc, dict) or "vectors" not in doc:
        raise FormatError(f'{path}: expected an object with "vectors"')
    vectors = _as_float_array(doc["vectors"], str(path), "vectors")
    if "n" in doc and vectors.shape[0] != doc["n"]:
        raise FormatError(
            f"{path}: {vectors.shape[0]} vectors do not match n={doc['n']}"
        )
    return custom_embedding(vectors)


def write_report(report: dict, dest: TextIO, fmt: str = "json") -> None:
    """Write a report as a JSON document or as key,value CSV rows."""
    if fmt == "json":
        json.dump(report, dest, indent=2)
        dest.write("\n")
    elif fmt == "csv":
        writer = csv.writer(dest)
        for key, value in report.items():
            if isinstance(value, (list, dict)):
                value = json.dumps(value)
            elif isinstance(value, float):
                value = repr(value)
            writer.writerow([key, value])
    else:
        raise FormatError(f"unsupported report format {fmt!r}")


def write_trajectory_jsonl(
    trajectory: ReductionTrajectory, dest: TextIO
) -> None:
    """One JSON record per descent step: {"step", "I_alg", "I_geom"}."""
    for record in trajectory.records():
        dest.write(json.dumps(record))
        dest.write("\n")


def dumps_report(report: dict, fmt: str = "json") -> str:
    buf = _io.StringIO()
    write_report(report, buf, fmt=fmt)
    return buf.getvalue()
