"""Byte-stable writers for JSON, CSV and Matrix Market output."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
import scipy.io
import scipy.sparse

from .liealg import OperatorMatrix


def dumps_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json(obj, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_json(obj), encoding="utf-8")
    return path


def read_json(path: str | Path):
    return json.loads(Path(path).read_text(encoding="utf-8"))


def write_csv(rows: Iterable[dict], columns: Sequence[str], path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n", extrasaction="raise")
    w.writeheader()
    for row in rows:
        w.writerow(row)
    path.write_text(buf.getvalue(), encoding="utf-8")
    return path


def read_csv(path: str | Path) -> list[dict]:
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def write_matrix_market(mat: OperatorMatrix, path: str | Path, meta: dict | None = None) -> Path:
    """Coordinate complex file with 17 significant digits, plus an exact JSON sidecar."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    keys = sorted(mat.entries)
    rows = np.array([k[0] for k in keys], dtype=int)
    cols = np.array([k[1] for k in keys], dtype=int)
    vals = np.array([complex(mat.entries[k]) for k in keys], dtype=complex)
    coo = scipy.sparse.coo_matrix((vals, (rows, cols)), shape=(mat.dim, mat.dim))
    with open(path, "wb") as fh:
        scipy.io.mmwrite(fh, coo, field="complex", precision=17, symmetry="general")
    sidecar = {"matrix": mat.to_json()}
    if meta:
        sidecar["meta"] = meta
    write_json(sidecar, sidecar_path(path))
    return path


def sidecar_path(path: str | Path) -> Path:
    path = Path(path)
    return path.with_name(path.name + ".exact.json")


def read_matrix_market(path: str | Path) -> np.ndarray:
    return np.asarray(scipy.io.mmread(str(path)).toarray())


def read_exact_sidecar(path: str | Path) -> OperatorMatrix:
    return OperatorMatrix.from_json(read_json(sidecar_path(path))["matrix"])
