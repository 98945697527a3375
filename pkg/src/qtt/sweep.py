"""Batch scenario runner: sweeps over (initial state, T_B, t) into CSV files."""

from __future__ import annotations

import concurrent.futures
import configparser
import dataclasses
import json
import time as _time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .dynamics import IntegratorConfig
from .model import CouplingConfig, TransistorModel
from .observables import (
    DivergedAmplificationError,
    StencilConfig,
    alpha_gap,
    amplification,
    transient_identity_residual,
)
from .states import (
    PARADIGM_NAMES,
    PAPER_EXAMPLE_NAMES,
    StateClass,
    density_of,
    paper_example_state,
    paradigm_state,
    sample_random,
)

SCHEMA_VERSION = 1

SWEEP_COLUMNS = (
    "scenario", "state_id", "class", "seed", "T_B", "t",
    "J_A", "J_B", "J_C", "alpha_A", "alpha_C", "dJB_dTB", "diverged", "alpha_gap",
)

IDENTITY_COLUMNS = (
    "scenario", "state_id", "class", "seed", "T_B", "t",
    "alpha_A", "alpha_C", "dJB_dTB", "identity_residual",
)

DEFAULT_TIMES = (0.1, 0.3, 0.8, 3.0, 6.0, 10.0)
TIME_SCAN_TEMPERATURES = (0.05, 0.13, 0.26, 0.36)


def default_tb_grid() -> tuple[float, ...]:
    """~200 log-spaced points over (0.004, 0.8] with extra density across the
    amplification divergence around T_B ~ 0.12."""
    coarse = np.geomspace(0.004, 0.8, 140)
    fine = np.linspace(0.10, 0.16, 61)
    grid = np.unique(np.round(np.concatenate([coarse, fine]), 12))
    return tuple(float(x) for x in grid)


@dataclass(frozen=True)
class StateSpec:
    """Reconstructible initial-state reference (kept tiny for worker dispatch)."""

    kind: str  # steady | paradigm | paper | random
    name: str = ""
    seed: int = 0

    @property
    def state_id(self) -> str:
        if self.kind == "steady":
            return "steady"
        if self.kind == "random":
            return f"{self.name}-{self.seed:04d}"
        return self.name

    @property
    def class_name(self) -> str:
        if self.kind == "random":
            return self.name
        return self.kind

    def density(self) -> np.ndarray | None:
        if self.kind == "steady":
            return None
        if self.kind == "paradigm":
            return density_of(paradigm_state(self.name))
        if self.kind == "paper":
            return density_of(paper_example_state(self.name))
        if self.kind == "random":
            return density_of(sample_random(StateClass(self.name), self.seed))
        raise ValueError(f"unknown state kind {self.kind!r}")


@dataclass
class SweepConfig:
    scenario: str
    t_a: float = 0.2
    t_c: float = 0.02
    tb_grid: tuple[float, ...] = field(default_factory=default_tb_grid)
    times: tuple[float, ...] = DEFAULT_TIMES
    stencil_h: float = 1e-3
    dt: float = 1e-3
    jobs: int = 1
    out_dir: Path = Path("out")
    master_seed: int = 2024
    count_per_class: int = 50

    def validate(self):
        if not self.tb_grid:
            raise ValueError("empty T_B grid")
        if min(self.tb_grid) <= 2 * self.stencil_h:
            raise ValueError("min(T_B) must exceed 2h")
        if self.t_a <= 0 or self.t_c <= 0:
            raise ValueError("temperatures must be > 0")
        if not self.times:
            raise ValueError("empty time list")

    def base_model(self) -> TransistorModel:
        return TransistorModel.default(t_a=self.t_a, t_b=0.08, t_c=self.t_c)


@dataclass(frozen=True)
class Point:
    state: StateSpec
    t_b: float
    t: float | None  # None = steady mode


def _random_states(cfg: SweepConfig) -> list[StateSpec]:
    specs = []
    for cls in StateClass:
        for k in range(cfg.count_per_class):
            specs.append(StateSpec("random", cls.value, cfg.master_seed + k))
    return specs


def _points_for_scenario(cfg: SweepConfig) -> list[Point]:
    name = cfg.scenario
    if name == "steady-sweep":
        return [Point(StateSpec("steady"), tb, None) for tb in cfg.tb_grid]
    if name.startswith("transient-"):
        state = {"ghz": "GHZ", "w": "W", "000": "k000",
                 "001": "k001", "011": "k011"}[name.removeprefix("transient-")]
        spec = StateSpec("paradigm", state)
        return [Point(spec, tb, t) for t in cfg.times for tb in cfg.tb_grid]
    if name == "necessarily-transient":
        return [
            Point(StateSpec("paper", s), tb, 0.1)
            for s in PAPER_EXAMPLE_NAMES for tb in cfg.tb_grid
        ]
    if name == "time-scan":
        tgrid = tuple(np.round(np.linspace(0.1, 8.0, 80), 12))
        return [
            Point(StateSpec("paper", s), tb, float(t))
            for s in ("GHZ'", "W'") for tb in TIME_SCAN_TEMPERATURES for t in tgrid
        ]
    if name == "random-scan":
        return [Point(s, tb, 0.1) for s in _random_states(cfg) for tb in cfg.tb_grid]
    if name == "random-time-scan":
        tgrid = tuple(np.round(np.linspace(0.1, 8.0, 60), 12))
        return [Point(s, 0.08, float(t)) for s in _random_states(cfg) for t in tgrid]
    if name == "identity-check":
        coarse = cfg.tb_grid[::10]
        return [
            Point(StateSpec("paradigm", s), tb, 0.1)
            for s in PARADIGM_NAMES for tb in coarse
        ]
    raise ValueError(f"unknown scenario {name!r}")


def list_scenarios() -> list[dict]:
    """Machine-readable catalog of the canned scenarios."""
    sweep = list(SWEEP_COLUMNS)
    identity = list(IDENTITY_COLUMNS)
    return [
        {"name": "steady-sweep", "figure": "steady-state alpha vs T_B reference curve",
         "columns": sweep},
        {"name": "transient-ghz", "figure": "F1: alpha vs T_B per time, GHZ start",
         "columns": sweep},
        {"name": "transient-w", "figure": "alpha vs T_B per time, W start",
         "columns": sweep},
        {"name": "transient-000", "figure": "alpha vs T_B per time, |000> start",
         "columns": sweep},
        {"name": "transient-001", "figure": "F2: alpha vs T_B per time, |001> start",
         "columns": sweep},
        {"name": "transient-011", "figure": "F3: alpha vs T_B per time, |011> start",
         "columns": sweep},
        {"name": "random-scan", "figure": "F4/F7a: 350 random states at t = 0.1",
         "columns": sweep},
        {"name": "necessarily-transient",
         "figure": "F5: four published example states at t = 0.1", "columns": sweep},
        {"name": "time-scan", "figure": "F6: alpha vs t at four fixed T_B",
         "columns": sweep},
        {"name": "random-time-scan", "figure": "F7b: 350 random states vs t at T_B = 0.08",
         "columns": sweep},
        {"name": "identity-check", "figure": "transient-identity residual sweep",
         "columns": identity},
    ]


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _evaluate_point(cfg_dict: dict, point: Point) -> tuple:
    """Worker: one grid point -> one CSV row (as a tuple of strings)."""
    cfg = SweepConfig(**{**cfg_dict, "out_dir": Path(cfg_dict["out_dir"])})
    model = cfg.base_model()
    stencil = StencilConfig(cfg.stencil_h)
    integrator = IntegratorConfig(cfg.dt)
    spec = point.state
    rho0 = spec.density()
    t_str = "steady" if point.t is None else _fmt(point.t)
    seed_str = str(spec.seed) if spec.kind == "random" else ""
    base = [cfg.scenario, spec.state_id, spec.class_name, seed_str, _fmt(point.t_b), t_str]

    if cfg.scenario == "identity-check":
        try:
            res = amplification(model, point.t_b, rho0=rho0, t=point.t,
                                stencil=stencil, integrator=integrator)
            residual = transient_identity_residual(
                model, point.t_b, rho0=rho0, t=point.t,
                stencil=stencil, integrator=integrator)
            return tuple(base + [_fmt(res.alpha_a), _fmt(res.alpha_c),
                                 _fmt(res.djb_dtb), _fmt(residual)])
        except Exception:
            return tuple(base + ["nan"] * 4)

    try:
        res = amplification(model, point.t_b, rho0=rho0, t=point.t,
                            stencil=stencil, integrator=integrator,
                            state_id=spec.state_id)
        try:
            gap = alpha_gap(res)
        except DivergedAmplificationError:
            gap = float("nan")
        cur = res.currents
        return tuple(base + [
            _fmt(cur.j_a), _fmt(cur.j_b), _fmt(cur.j_c),
            _fmt(res.alpha_a), _fmt(res.alpha_c), _fmt(res.djb_dtb),
            "true" if res.diverged else "false", _fmt(gap),
        ])
    except Exception:
        # per-point failure: record the row, never abort the sweep
        return tuple(base + ["nan"] * 6 + ["true", "nan"])


def _sort_key(row: tuple) -> tuple:
    t = float("inf") if row[5] == "steady" else float(row[5])
    return (row[1], t, float(row[4]))


def run_scenario(cfg: SweepConfig) -> dict:
    """Run one canned scenario; writes <scenario>.csv and <scenario>_manifest.json.

    Deterministic for fixed (config, master seed); parallel and serial
    execution yield identical files because rows are sorted before writing."""
    cfg.validate()
    points = _points_for_scenario(cfg)
    cfg_dict = {**dataclasses.asdict(cfg), "out_dir": str(cfg.out_dir)}

    if cfg.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            rows = list(pool.map(_evaluate_point, [cfg_dict] * len(points), points,
                                 chunksize=max(1, len(points) // (cfg.jobs * 8))))
    else:
        rows = [_evaluate_point(cfg_dict, p) for p in points]
    rows.sort(key=_sort_key)

    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    columns = IDENTITY_COLUMNS if cfg.scenario == "identity-check" else SWEEP_COLUMNS
    csv_path = cfg.out_dir / f"{cfg.scenario}.csv"
    with open(csv_path, "w") as fh:
        fh.write(f"# qtt sweep schema v{SCHEMA_VERSION}\n")
        fh.write(",".join(columns) + "\n")
        for row in rows:
            fh.write(",".join(row) + "\n")

    manifest = {
        "scenario": cfg.scenario,
        "schema_version": SCHEMA_VERSION,
        "code_version": __version__,
        "generator": "numpy.random.Philox keyed by (seed, class stream offset)",
        "master_seed": cfg.master_seed,
        "model": {
            "coupling": dataclasses.asdict(CouplingConfig()),
            "T_A": cfg.t_a, "T_C": cfg.t_c, "kappa": 1.0,
        },
        "stencil_h": cfg.stencil_h,
        "dt": cfg.dt,
        "n_points": len(points),
        "timestamp": _time.strftime("%Y-%m-%dT%H:%M:%SZ", _time.gmtime()),
    }
    if cfg.scenario == "steady-sweep":
        manifest["djb_sign_change"] = _djb_sign_change(rows)
    manifest_path = cfg.out_dir / f"{cfg.scenario}_manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=2) + "\n")
    return {"csv": str(csv_path), "manifest": str(manifest_path), "rows": len(rows)}


def _djb_sign_change(rows: list[tuple]) -> list[float]:
    """T_B intervals where the steady dJ_B/dT_B derivative changes sign."""
    pts = sorted((float(r[4]), float(r[11])) for r in rows)
    crossings = []
    for (tb0, d0), (tb1, d1) in zip(pts, pts[1:]):
        if np.isfinite(d0) and np.isfinite(d1) and d0 * d1 < 0:
            crossings.append(round((tb0 + tb1) / 2, 6))
    return crossings


def load_config(path: Path, scenario: str) -> SweepConfig:
    """Read overrides from a flat key = value INI file."""
    parser = configparser.ConfigParser()
    parser.read(path)
    cfg = SweepConfig(scenario=scenario)
    g = parser["grid"] if parser.has_section("grid") else {}
    if "t_b_min" in g or "t_b_points" in g:
        lo = float(g.get("t_b_min", 0.004))
        hi = float(g.get("t_b_max", 0.8))
        n = int(g.get("t_b_points", 200))
        cfg.tb_grid = tuple(np.round(np.geomspace(lo, hi, n), 12))
    if "times" in g:
        cfg.times = tuple(float(x) for x in g["times"].split(","))
    t = parser["temperatures"] if parser.has_section("temperatures") else {}
    cfg.t_a = float(t.get("t_a", cfg.t_a))
    cfg.t_c = float(t.get("t_c", cfg.t_c))
    if parser.has_section("stencil"):
        cfg.stencil_h = float(parser["stencil"].get("h", cfg.stencil_h))
    if parser.has_section("integrator"):
        cfg.dt = float(parser["integrator"].get("dt", cfg.dt))
    r = parser["run"] if parser.has_section("run") else {}
    cfg.jobs = int(r.get("jobs", cfg.jobs))
    cfg.master_seed = int(r.get("seed", cfg.master_seed))
    cfg.count_per_class = int(r.get("count_per_class", cfg.count_per_class))
    if "out" in r:
        cfg.out_dir = Path(r["out"])
    return cfg
