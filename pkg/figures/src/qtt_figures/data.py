"""Read-only access to qtt sweep CSV files.

This layer never calls the simulator: figures are regenerated from persisted
CSVs only, so the primary package stays runnable without this component.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

SCHEMA_LINE = "# qtt sweep schema v1"

SWEEP_COLUMNS = (
    "scenario", "state_id", "class", "seed", "T_B", "t",
    "J_A", "J_B", "J_C", "alpha_A", "alpha_C", "dJB_dTB", "diverged", "alpha_gap",
)


class SchemaMismatchError(RuntimeError):
    """The CSV does not carry the expected sweep schema."""


class EmptyDataError(RuntimeError):
    """The CSV has a valid header but no data rows."""


@dataclass(frozen=True)
class SweepRow:
    scenario: str
    state_id: str
    state_class: str
    t_b: float
    t: float | None  # None marks a steady-mode row
    alpha_a: float
    alpha_c: float
    djb_dtb: float
    diverged: bool
    alpha_gap: float


@dataclass(frozen=True)
class SweepTable:
    """All rows of one scenario CSV, plus optional manifest metadata."""

    path: Path
    rows: tuple[SweepRow, ...]
    sign_changes: tuple[float, ...]  # from the companion manifest, if present

    @property
    def state_ids(self) -> list[str]:
        seen: dict[str, None] = {}
        for r in self.rows:
            seen.setdefault(r.state_id)
        return list(seen)

    @property
    def times(self) -> list[float]:
        return sorted({r.t for r in self.rows if r.t is not None})

    @property
    def temperatures(self) -> list[float]:
        return sorted({r.t_b for r in self.rows})

    def select(self, *, state_id: str | None = None,
               t: float | None = None, t_b: float | None = None) -> list[SweepRow]:
        out = []
        for r in self.rows:
            if state_id is not None and r.state_id != state_id:
                continue
            if t is not None and (r.t is None or abs(r.t - t) > 1e-12):
                continue
            if t_b is not None and abs(r.t_b - t_b) > 1e-12:
                continue
            out.append(r)
        return out


def _parse_float(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        return math.nan


def load_sweep(path: Path) -> SweepTable:
    """Parse a sweep CSV; raises on schema mismatch or an empty table."""
    path = Path(path)
    with open(path, newline="") as fh:
        first = fh.readline().rstrip("\n")
        if first != SCHEMA_LINE:
            raise SchemaMismatchError(
                f"{path}: expected {SCHEMA_LINE!r}, got {first!r}")
        reader = csv.DictReader(fh)
        if tuple(reader.fieldnames or ()) != SWEEP_COLUMNS:
            raise SchemaMismatchError(
                f"{path}: columns {reader.fieldnames} do not match sweep schema")
        rows = []
        for rec in reader:
            t_text = rec["t"]
            rows.append(SweepRow(
                scenario=rec["scenario"],
                state_id=rec["state_id"],
                state_class=rec["class"],
                t_b=float(rec["T_B"]),
                t=None if t_text == "steady" else float(t_text),
                alpha_a=_parse_float(rec["alpha_A"]),
                alpha_c=_parse_float(rec["alpha_C"]),
                djb_dtb=_parse_float(rec["dJB_dTB"]),
                diverged=rec["diverged"] == "true",
                alpha_gap=_parse_float(rec["alpha_gap"]),
            ))
    if not rows:
        raise EmptyDataError(f"{path}: no data rows")
    return SweepTable(path=path, rows=tuple(rows),
                      sign_changes=_manifest_sign_changes(path))


def _manifest_sign_changes(csv_path: Path) -> tuple[float, ...]:
    manifest = csv_path.with_name(csv_path.stem + "_manifest.json")
    if not manifest.exists():
        return ()
    try:
        data = json.loads(manifest.read_text())
    except json.JSONDecodeError:
        return ()
    return tuple(float(x) for x in data.get("djb_sign_change", []))


def broken_series(rows: list[SweepRow], x_attr: str, y_attr: str):
    """Sorted (x, y) arrays with NaN at diverged / non-finite rows.

    NaN samples make matplotlib break the line instead of drawing a spike
    through the divergence sentinel."""
    rows = sorted(rows, key=lambda r: getattr(r, x_attr))
    x = np.array([getattr(r, x_attr) for r in rows], dtype=float)
    y = np.array([getattr(r, y_attr) for r in rows], dtype=float)
    y[[r.diverged for r in rows]] = np.nan
    y[~np.isfinite(y)] = np.nan
    return x, y
