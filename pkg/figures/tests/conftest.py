"""Canned CSV fixtures for the figure tests.

Small real sweeps are generated once per session with the simulator package
(a test-only dependency; the figures package itself never imports it).  The
two long time-scan scenarios are replaced by schema-identical synthetic
tables so the test session stays fast; they also inject diverged rows to
exercise the line-break handling.
"""

import numpy as np
import pytest

from qtt.sweep import SweepConfig, run_scenario

from figtest_utils import synthetic_row, write_rows

TB_GRID = (0.05, 0.08, 0.13, 0.3, 0.5, 0.7)


def _write_time_scan(out_dir):
    rows = []
    tgrid = np.linspace(0.1, 8.0, 12)
    for state_id in ("GHZ'", "W'"):
        for t_b in (0.05, 0.13):
            for k, t in enumerate(tgrid):
                rows.append(synthetic_row("time-scan", state_id, "paper",
                                          t_b, float(t), diverged=(k == 5)))
    write_rows(out_dir / "time-scan.csv", rows)


def _write_random_time_scan(out_dir):
    rows = []
    tgrid = np.linspace(0.1, 8.0, 15)
    for s in range(5):
        for t in tgrid:
            rows.append(synthetic_row("random-time-scan", f"ghz-{s:04d}", "ghz",
                                      0.08, float(t), gap=5.0 + 30 * s))
    write_rows(out_dir / "random-time-scan.csv", rows)


@pytest.fixture(scope="session")
def canned(tmp_path_factory):
    """Directory holding one CSV per figure family's source scenario."""
    out = tmp_path_factory.mktemp("canned")
    run_scenario(SweepConfig(scenario="steady-sweep", tb_grid=TB_GRID, out_dir=out))
    for scenario in ("transient-ghz", "transient-001", "transient-011"):
        run_scenario(SweepConfig(scenario=scenario, tb_grid=TB_GRID,
                                 times=(0.1, 0.3), out_dir=out))
    run_scenario(SweepConfig(scenario="necessarily-transient", tb_grid=TB_GRID,
                             out_dir=out))
    run_scenario(SweepConfig(scenario="random-scan", tb_grid=TB_GRID,
                             count_per_class=1, out_dir=out))
    _write_time_scan(out)
    _write_random_time_scan(out)
    return out
