"""Tests for the figure regeneration package, including the acceptance check
that all seven families render from canned scenario CSVs."""

import numpy as np
import pytest

from qtt_figures.cli import main
from qtt_figures.data import (
    EmptyDataError,
    SchemaMismatchError,
    SweepRow,
    broken_series,
    load_sweep,
)
from qtt_figures.render import (
    FigureSpec,
    UnknownFamilyError,
    _render_alpha_vs_tb,
    _render_with_insets,
    render,
)

from figtest_utils import SCHEMA_LINE, write_rows

FAMILY_SOURCES = {
    "F1": "transient-ghz.csv",
    "F2": "transient-001.csv",
    "F3": "transient-011.csv",
    "F4": "random-scan.csv",
    "F5": "necessarily-transient.csv",
    "F6": "time-scan.csv",
    "F7": "random-scan.csv",
}


class TestLoading:
    def test_load_real_sweep(self, canned):
        table = load_sweep(canned / "transient-ghz.csv")
        assert table.state_ids == ["GHZ"]
        assert table.times == [0.1, 0.3]
        assert table.temperatures == list(pytest.approx(t) for t in (
            0.05, 0.08, 0.13, 0.3, 0.5, 0.7))

    def test_steady_rows_and_manifest(self, canned):
        table = load_sweep(canned / "steady-sweep.csv")
        assert all(r.t is None for r in table.rows)
        # the manifest records the dJ_B/dT_B sign change inside the grid
        assert len(table.sign_changes) == 1
        assert 0.08 < table.sign_changes[0] < 0.3

    def test_missing_schema_line(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("a,b\n1,2\n")
        with pytest.raises(SchemaMismatchError):
            load_sweep(bad)

    def test_wrong_columns(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text(SCHEMA_LINE + "\nfoo,bar\n1,2\n")
        with pytest.raises(SchemaMismatchError):
            load_sweep(bad)

    def test_empty_table(self, tmp_path):
        empty = tmp_path / "empty.csv"
        write_rows(empty, [])
        with pytest.raises(EmptyDataError):
            load_sweep(empty)

    def test_select_filters(self, canned):
        table = load_sweep(canned / "random-scan.csv")
        assert len(table.state_ids) == 7
        rows = table.select(state_id=table.state_ids[0], t_b=0.08)
        assert len(rows) == 1


class TestBrokenSeries:
    def _row(self, t_b, alpha_a, diverged):
        return SweepRow("s", "x", "c", t_b, 0.1, alpha_a, -alpha_a, 1e-4,
                        diverged, 0.0)

    def test_diverged_rows_become_nan(self):
        rows = [self._row(0.1, 1.0, False),
                self._row(0.2, float("inf"), True),
                self._row(0.3, 3.0, False)]
        x, y = broken_series(rows, "t_b", "alpha_a")
        assert x.tolist() == [0.1, 0.2, 0.3]
        assert y[0] == 1.0 and np.isnan(y[1]) and y[2] == 3.0

    def test_sorts_by_x(self):
        rows = [self._row(0.3, 3.0, False), self._row(0.1, 1.0, False)]
        x, y = broken_series(rows, "t_b", "alpha_a")
        assert x.tolist() == [0.1, 0.3] and y.tolist() == [1.0, 3.0]


class TestFigureSpec:
    def test_unknown_family(self, tmp_path):
        with pytest.raises(UnknownFamilyError):
            FigureSpec("F9", tmp_path / "a.csv", tmp_path / "a.png")

    def test_bad_output_format(self, tmp_path):
        with pytest.raises(ValueError):
            FigureSpec("F1", tmp_path / "a.csv", tmp_path / "a.pdf")

    def test_nonfinite_range(self, tmp_path):
        with pytest.raises(ValueError):
            FigureSpec("F7", tmp_path / "a.csv", tmp_path / "a.png",
                       gap_range=(0.0, float("inf")))


class TestRendering:
    def test_acceptance_all_families_render(self, canned, tmp_path):
        """[SECONDARY] all seven figure families render from canned CSVs."""
        for family, source in FAMILY_SOURCES.items():
            out = render(FigureSpec(family, canned / source,
                                    tmp_path / f"{family}.png"))
            ok = out.exists() and out.stat().st_size > 0
            print(f"\n[{'PASS' if ok else 'FAIL'}] {family} renders from {source}")
            assert ok

    def test_svg_output(self, canned, tmp_path):
        out = render(FigureSpec("F1", canned / "transient-ghz.csv",
                                tmp_path / "f1.svg"))
        assert out.read_text().lstrip().startswith("<?xml")

    def test_f5_insets_present(self, canned):
        table = load_sweep(canned / "necessarily-transient.csv")
        spec = FigureSpec("F5", table.path, table.path.with_suffix(".png"))
        fig = _render_with_insets(spec, table)
        # four state panels, each with one magnified inset axes
        visible = [ax for ax in fig.axes if ax.get_visible()]
        assert len(visible) == len(table.state_ids)
        assert all(len(ax.child_axes) == 1 for ax in visible)

    def test_steady_sweep_asymptote_marker(self, canned):
        table = load_sweep(canned / "steady-sweep.csv")
        spec = FigureSpec("F1", table.path, table.path.with_suffix(".png"))
        fig = _render_alpha_vs_tb(spec, table)
        (ax,) = [a for a in fig.axes if a.get_visible()]
        # two alpha curves plus the dashed vertical sign-change marker
        assert len(ax.lines) == 3

    def test_f6_breaks_on_diverged_rows(self, canned):
        table = load_sweep(canned / "time-scan.csv")
        ghz_rows = table.select(state_id="GHZ'", t_b=0.05)
        _, y = broken_series(ghz_rows, "t", "alpha_a")
        assert np.isnan(y).sum() == 1  # the injected diverged sample

    def test_f7_time_axis_fallback(self, canned, tmp_path):
        out = render(FigureSpec("F7", canned / "random-time-scan.csv",
                                tmp_path / "f7b.png"))
        assert out.exists() and out.stat().st_size > 0


class TestCli:
    def test_render_via_cli(self, canned, tmp_path, capsys):
        out = tmp_path / "fig.png"
        rc = main(["F1", "--csv", str(canned / "transient-ghz.csv"),
                   "--out", str(out)])
        assert rc == 0
        assert out.exists()
        assert str(out) in capsys.readouterr().out

    def test_empty_csv_no_image(self, tmp_path, capsys):
        empty = tmp_path / "empty.csv"
        write_rows(empty, [])
        out = tmp_path / "fig.png"
        rc = main(["F1", "--csv", str(empty), "--out", str(out)])
        assert rc == 2
        assert not out.exists()
        assert "error" in capsys.readouterr().err

    def test_missing_csv(self, tmp_path, capsys):
        rc = main(["F2", "--csv", str(tmp_path / "nope.csv"),
                   "--out", str(tmp_path / "f.png")])
        assert rc == 2

    def test_custom_ranges(self, canned, tmp_path):
        out = tmp_path / "f7.svg"
        rc = main(["F7", "--csv", str(canned / "random-scan.csv"),
                   "--out", str(out), "--gap-range", "0", "50",
                   "--dpi", "80"])
        assert rc == 0 and out.exists()
