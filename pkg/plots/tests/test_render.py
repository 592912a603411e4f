import csv

import pytest

from sectorsnake_plots.cli import main
from sectorsnake_plots.figures import FIGURES, render, render_all
from sectorsnake_plots.schemas import SchemaError, load_table


def test_eight_figures_registered():
    assert len(FIGURES) == 8


@pytest.mark.parametrize("figure_id", sorted(FIGURES))
def test_render_each_figure(figure_id, csv_dir, tmp_path):
    paths = render(figure_id, csv_dir, tmp_path / "figs")
    assert {p.suffix for p in paths} == {".svg", ".png"}
    for path in paths:
        assert path.exists()
        assert path.stat().st_size > 1000


def test_render_all(csv_dir, tmp_path):
    out = render_all(csv_dir, tmp_path / "figs")
    assert len(out) == 8
    files = list((tmp_path / "figs").iterdir())
    assert len(files) == 16


def test_render_deterministic(csv_dir, tmp_path):
    a = render("sensor_bars", csv_dir, tmp_path / "a")
    b = render("sensor_bars", csv_dir, tmp_path / "b")
    for pa, pb in zip(a, b):
        assert pa.read_bytes() == pb.read_bytes()


def test_unknown_figure(csv_dir, tmp_path):
    with pytest.raises(SchemaError, match="unknown figure"):
        render("pie_chart", csv_dir, tmp_path)


def test_missing_csv_named(tmp_path):
    with pytest.raises(SchemaError, match="missing CSV"):
        render("sensor_bars", tmp_path, tmp_path / "figs")


def test_empty_csv_rejected(csv_dir, tmp_path):
    (csv_dir / "sensor.csv").write_text(
        "driver,alpha,epsilon,w,fidelity,energy_residual\n"
    )
    with pytest.raises(SchemaError, match="no data rows"):
        render("sensor_bars", csv_dir, tmp_path / "figs")


def test_missing_column_named(csv_dir, tmp_path):
    rows = list(csv.reader((csv_dir / "sensor.csv").open()))
    header = rows[0][:-1]
    body = [r[:-1] for r in rows[1:]]
    with (csv_dir / "sensor.csv").open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(body)
    with pytest.raises(SchemaError, match="energy_residual"):
        render("sensor_bars", csv_dir, tmp_path / "figs")


def test_load_table_unknown_name(csv_dir):
    with pytest.raises(SchemaError, match="unknown table"):
        load_table(csv_dir, "surprise.csv")


class TestCli:
    def test_render_all_command(self, csv_dir, tmp_path, capsys):
        code = main(["render-all", "--csv", str(csv_dir), "--out", str(tmp_path / "f")])
        assert code == 0
        out = capsys.readouterr().out
        assert out.count("wrote") == 16

    def test_render_single(self, csv_dir, tmp_path, capsys):
        code = main(["render", "scan_heatmap", "--csv", str(csv_dir),
                     "--out", str(tmp_path / "f")])
        assert code == 0
        assert (tmp_path / "f" / "scan_heatmap.svg").exists()

    def test_schema_error_exit_code(self, tmp_path, capsys):
        code = main(["render", "sensor_bars", "--csv", str(tmp_path),
                     "--out", str(tmp_path / "f")])
        assert code == 1
        assert "schema error" in capsys.readouterr().err

    def test_list(self, capsys):
        assert main(["list"]) == 0
        assert "scan_heatmap" in capsys.readouterr().out
