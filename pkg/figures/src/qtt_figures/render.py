"""Render the seven figure families from sweep CSVs."""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "qtt-figures"

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .data import SweepTable, broken_series, load_sweep  # noqa: E402

FAMILIES = ("F1", "F2", "F3", "F4", "F5", "F6", "F7")

FAMILY_DESCRIPTIONS = {
    "F1": "alpha vs T_B per evolution time (GHZ start; also steady-sweep)",
    "F2": "alpha vs T_B per evolution time (|001> start)",
    "F3": "alpha vs T_B per evolution time (|011> start)",
    "F4": "alpha vs T_B for the random-state ensemble at fixed t",
    "F5": "alpha vs T_B for the necessarily-transient states, with insets",
    "F6": "alpha vs t at fixed T_B values",
    "F7": "alpha_gap scatter (vs T_B, or vs t for a time scan)",
}

_FORMATS = (".png", ".svg")


class UnknownFamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FigureSpec:
    """One figure-rendering request."""

    family: str
    csv: Path
    out: Path
    gap_range: tuple[float, float] = (0.0, 100.0)  # alpha_gap scatter clip
    inset_range: tuple[float, float] = (0.25, 0.75)  # F5 magnified T_B window
    dpi: int = 150

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnknownFamilyError(
                f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if Path(self.out).suffix not in _FORMATS:
            raise ValueError(f"output must end in one of {_FORMATS}")
        for lo, hi in (self.gap_range, self.inset_range):
            if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
                raise ValueError("axis ranges must be finite and increasing")


def render(spec: FigureSpec) -> Path:
    """Render one figure family to spec.out; returns the output path."""
    table = load_sweep(Path(spec.csv))
    renderer = {
        "F1": _render_alpha_vs_tb,
        "F2": _render_alpha_vs_tb,
        "F3": _render_alpha_vs_tb,
        "F4": _render_ensemble_vs_tb,
        "F5": _render_with_insets,
        "F6": _render_alpha_vs_time,
        "F7": _render_gap_scatter,
    }[spec.family]
    fig = renderer(spec, table)
    out = Path(spec.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=spec.dpi)
    plt.close(fig)
    return out


def _panel_grid(n: int):
    cols = min(n, 2)
    rows = (n + cols - 1) // cols
    fig, axes = plt.subplots(rows, cols, figsize=(5.0 * cols, 3.2 * rows),
                             squeeze=False, constrained_layout=True)
    flat = axes.ravel()
    for ax in flat[n:]:
        ax.set_visible(False)
    return fig, flat[:n]


def _plot_alpha_pair(ax, rows, label_suffix=""):
    x, ya = broken_series(rows, "t_b", "alpha_a")
    _, yc = broken_series(rows, "t_b", "alpha_c")
    ax.plot(x, ya, label=r"$\alpha_A$" + label_suffix, color="tab:blue")
    ax.plot(x, yc, label=r"$\alpha_C$" + label_suffix, color="tab:red")
    ax.set_xlabel(r"$T_B$")
    ax.set_ylabel(r"$\alpha$")


def _mark_sign_changes(ax, table: SweepTable):
    for t_b in table.sign_changes:
        ax.axvline(t_b, color="gray", linestyle="--", linewidth=0.8)


def _render_alpha_vs_tb(spec: FigureSpec, table: SweepTable):
    """F1-F3: one panel per evolution time (or a single steady panel)."""
    times = table.times
    steady_rows = [r for r in table.rows if r.t is None]
    n = len(times) + (1 if steady_rows else 0)
    fig, axes = _panel_grid(n)
    for ax, t in zip(axes, times):
        _plot_alpha_pair(ax, table.select(t=t))
        _mark_sign_changes(ax, table)
        ax.set_title(f"t = {t:g}")
        ax.legend(fontsize=8)
    if steady_rows:
        ax = axes[-1]
        _plot_alpha_pair(ax, steady_rows)
        _mark_sign_changes(ax, table)
        ax.set_title("steady state")
        ax.legend(fontsize=8)
    return fig


def _render_ensemble_vs_tb(spec: FigureSpec, table: SweepTable):
    """F4: thin per-state alpha curves of the random ensemble at fixed t."""
    fig, (ax_a, ax_c) = _panel_grid(2)
    for state_id in table.state_ids:
        rows = table.select(state_id=state_id)
        x, ya = broken_series(rows, "t_b", "alpha_a")
        _, yc = broken_series(rows, "t_b", "alpha_c")
        ax_a.plot(x, ya, color="tab:blue", alpha=0.25, linewidth=0.7)
        ax_c.plot(x, yc, color="tab:red", alpha=0.25, linewidth=0.7)
    for ax, name in ((ax_a, r"$\alpha_A$"), (ax_c, r"$\alpha_C$")):
        ax.set_xlabel(r"$T_B$")
        ax.set_ylabel(name)
        _mark_sign_changes(ax, table)
    return fig


def _render_with_insets(spec: FigureSpec, table: SweepTable):
    """F5: one panel per state, each with a magnified inset window in T_B."""
    states = table.state_ids
    fig, axes = _panel_grid(len(states))
    lo, hi = spec.inset_range
    for ax, state_id in zip(axes, states):
        rows = table.select(state_id=state_id)
        _plot_alpha_pair(ax, rows)
        ax.set_title(state_id)
        ax.legend(fontsize=8, loc="upper right")
        inset = ax.inset_axes([0.55, 0.12, 0.4, 0.35])
        window = [r for r in rows if lo <= r.t_b <= hi]
        if window:
            _plot_alpha_pair(inset, window)
            inset.set_xlabel("")
            inset.set_ylabel("")
        inset.set_xlim(lo, hi)
        inset.tick_params(labelsize=6)
        ax.indicate_inset_zoom(inset, edgecolor="gray")
    return fig


def _render_alpha_vs_time(spec: FigureSpec, table: SweepTable):
    """F6: one panel per T_B; alpha vs t curves for each state."""
    temperatures = table.temperatures
    fig, axes = _panel_grid(len(temperatures))
    styles = ("-", "--", ":", "-.")
    for ax, t_b in zip(axes, temperatures):
        for k, state_id in enumerate(table.state_ids):
            rows = table.select(state_id=state_id, t_b=t_b)
            x, ya = broken_series(rows, "t", "alpha_a")
            _, yc = broken_series(rows, "t", "alpha_c")
            ls = styles[k % len(styles)]
            ax.plot(x, ya, color="tab:blue", linestyle=ls,
                    label=rf"$\alpha_A$ {state_id}")
            ax.plot(x, yc, color="tab:red", linestyle=ls,
                    label=rf"$\alpha_C$ {state_id}")
        ax.set_xlabel("t")
        ax.set_ylabel(r"$\alpha$")
        ax.set_title(rf"$T_B$ = {t_b:g}")
        ax.legend(fontsize=7)
    return fig


def _render_gap_scatter(spec: FigureSpec, table: SweepTable):
    """F7: alpha_gap scatter, clipped to the configured range.

    The x axis is T_B when the table sweeps temperature, otherwise t."""
    x_attr = "t_b" if len(table.temperatures) > 1 else "t"
    xs, ys = [], []
    for r in table.rows:
        if r.diverged or not np.isfinite(r.alpha_gap):
            continue
        xv = r.t_b if x_attr == "t_b" else r.t
        if xv is None:
            continue
        xs.append(xv)
        ys.append(r.alpha_gap)
    fig, (ax,) = _panel_grid(1)
    ax.scatter(xs, ys, s=6, alpha=0.5, color="tab:purple")
    ax.set_ylim(*spec.gap_range)
    ax.set_xlabel(r"$T_B$" if x_attr == "t_b" else "t")
    ax.set_ylabel(r"$||\alpha_A| - |\alpha_C||$")
    _mark_sign_changes(ax, table)
    return fig
