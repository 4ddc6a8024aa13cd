"""CSV round-trips, CLI subcommands, exit codes and figure emission."""

import subprocess
import sys

import numpy as np
import pytest

from lsplines import NATURAL, fit
from lsplines import csvio
from lsplines.cli import DEMO_KNOTS, DEMO_XI, main
from lsplines.errors import ParseError


def _write(path, text):
    path.write_text(text, encoding="utf-8")
    return str(path)


POINTS = "0,0\n0.25,0.9\n0.5,0.1\n0.75,-0.8\n1,0\n"


class TestCsvIo:
    def test_reads_with_and_without_header(self, tmp_path):
        bare = _write(tmp_path / "bare.csv", POINTS)
        headed = _write(tmp_path / "headed.csv", "t,z\n" + POINTS)
        t1, z1 = csvio.read_points(bare)
        t2, z2 = csvio.read_points(headed)
        assert np.array_equal(t1, t2) and np.array_equal(z1, z2)
        assert t1.tolist() == [0.0, 0.25, 0.5, 0.75, 1.0]

    def test_comments_and_blank_lines_ignored(self, tmp_path):
        path = _write(tmp_path / "c.csv", "# comment\n\nt,z\n0,1\n# more\n1,2\n\n")
        t, z = csvio.read_points(path)
        assert t.tolist() == [0.0, 1.0] and z.tolist() == [1.0, 2.0]

    def test_bad_number_reports_line_and_column(self, tmp_path):
        path = _write(tmp_path / "bad.csv", "0,1\n0.5,oops\n1,2\n")
        with pytest.raises(ParseError) as err:
            csvio.read_points(path)
        assert err.value.line == 2 and err.value.column == 2

    def test_non_increasing_t_reports_line(self, tmp_path):
        path = _write(tmp_path / "mono.csv", "0,0\n0.5,1\n0.4,2\n")
        with pytest.raises(ParseError) as err:
            csvio.read_points(path)
        assert err.value.line == 3

    def test_wrong_column_count(self, tmp_path):
        path = _write(tmp_path / "cols.csv", "0,1\n1,2,3\n")
        with pytest.raises(ParseError) as err:
            csvio.read_points(path)
        assert err.value.line == 2

    def test_non_finite_rejected(self, tmp_path):
        path = _write(tmp_path / "inf.csv", "0,1\n1,inf\n")
        with pytest.raises(ParseError) as err:
            csvio.read_points(path)
        assert err.value.line == 2

    def test_too_few_rows(self, tmp_path):
        with pytest.raises(ParseError):
            csvio.read_points(_write(tmp_path / "one.csv", "0,1\n"))

    def test_sample_round_trip_is_bit_exact(self, tmp_path):
        model = fit([0.0, 0.3, 1.0], [0.0, -1.7, 2.2], 3.0, NATURAL)
        table = model.sample(count=57)
        path = tmp_path / "samples.csv"
        csvio.write_samples(table, path)
        back = csvio.read_samples(path)
        assert np.array_equal(back.t, table.t)
        assert np.array_equal(back.value, table.value)
        assert np.array_equal(back.deriv1, table.deriv1)
        assert np.array_equal(back.deriv2, table.deriv2)


class TestInterpCommand:
    def test_clamped_run_writes_samples_and_figures(self, tmp_path):
        inp = _write(tmp_path / "pts.csv", "t,z\n" + POINTS)
        out = tmp_path / "out.csv"
        svg = tmp_path / "out.svg"
        png = tmp_path / "out.png"
        code = main(
            [
                "interp",
                "--input", inp,
                "--output", str(out),
                "--svg", str(svg),
                "--plot", str(png),
                "--xi", "5",
                "--boundary", "clamped",
                "--left-deriv", "2",
                "--right-deriv", "-2",
                "--samples", "40",
            ]
        )
        assert code == 0
        table = csvio.read_samples(out)
        assert len(table) == 40
        text = svg.read_text()
        assert text.startswith("<svg") and "<polyline" in text
        assert text.count("<circle") == 5  # one marker per input point
        assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

    def test_natural_run(self, tmp_path):
        inp = _write(tmp_path / "pts.csv", POINTS)
        out = tmp_path / "out.csv"
        code = main(["interp", "--input", inp, "--output", str(out), "--xi", "0", "--boundary", "natural"])
        assert code == 0
        assert len(csvio.read_samples(out)) == 500  # default sample count

    def test_natural_with_derivative_flag_is_config_error(self, tmp_path, capsys):
        inp = _write(tmp_path / "pts.csv", POINTS)
        code = main(
            ["interp", "--input", inp, "--output", str(tmp_path / "o.csv"),
             "--xi", "1", "--boundary", "natural", "--left-deriv", "2"]
        )
        assert code == 1
        assert "--left-deriv" in capsys.readouterr().err

    def test_clamped_missing_derivative_is_config_error(self, tmp_path):
        inp = _write(tmp_path / "pts.csv", POINTS)
        code = main(
            ["interp", "--input", inp, "--output", str(tmp_path / "o.csv"),
             "--xi", "1", "--boundary", "clamped", "--left-deriv", "2"]
        )
        assert code == 1

    def test_negative_tension_is_config_error(self, tmp_path):
        inp = _write(tmp_path / "pts.csv", POINTS)
        code = main(["interp", "--input", inp, "--output", str(tmp_path / "o.csv"),
                     "--xi", "-1", "--boundary", "natural"])
        assert code == 1

    def test_non_increasing_input_is_parse_error(self, tmp_path, capsys):
        inp = _write(tmp_path / "bad.csv", "0,0\n0.5,1\n0.4,2\n")
        code = main(["interp", "--input", inp, "--output", str(tmp_path / "o.csv"),
                     "--xi", "1", "--boundary", "natural"])
        assert code == 2
        assert "line 3" in capsys.readouterr().err

    def test_missing_input_is_io_error(self, tmp_path):
        code = main(["interp", "--input", str(tmp_path / "nope.csv"),
                     "--output", str(tmp_path / "o.csv"), "--xi", "1", "--boundary", "natural"])
        assert code == 3

    def test_overflowing_fit_is_numeric_error(self, tmp_path):
        inp = _write(tmp_path / "pts.csv", POINTS)
        code = main(["interp", "--input", inp, "--output", str(tmp_path / "o.csv"),
                     "--xi", "1e200", "--boundary", "natural"])
        assert code == 4


class TestDemoCommand:
    def test_demo_outputs_and_determinism(self, tmp_path):
        out1 = tmp_path / "a"
        out2 = tmp_path / "b"
        assert main(["demo", "--out", str(out1)]) == 0
        assert main(["demo", "--out", str(out2)]) == 0
        names = ["lspline.csv", "linear.csv", "demo.svg", "demo.png"]
        for name in names:
            b1 = (out1 / name).read_bytes()
            b2 = (out2 / name).read_bytes()
            assert b1 == b2, f"{name} differs between runs"
        table = csvio.read_samples(out1 / "lspline.csv")
        assert len(table) == 500
        # curve passes through the built-in knots
        knots = np.array(DEMO_KNOTS)
        data = np.sin(25.0 * knots)
        from lsplines import Clamped

        model = fit(knots, data, DEMO_XI, Clamped(25.0, 25.0))
        assert np.abs(model(knots) - data).max() <= 1e-11
        # linear comparison is the polyline through the same points
        linear = np.loadtxt(out1 / "linear.csv", delimiter=",", skiprows=1)
        assert np.abs(linear[:, 1] - np.interp(linear[:, 0], knots, data)).max() == 0.0
        svg_text = (out1 / "demo.svg").read_text()
        assert svg_text.count("<polyline") == 2
        assert svg_text.count("<circle") == 7

    def test_demo_boundary_slope(self):
        knots = np.array(DEMO_KNOTS)
        from lsplines import Clamped

        model = fit(knots, np.sin(25.0 * knots), DEMO_XI, Clamped(25.0, 25.0))
        assert model.eval_deriv(0.0, 1) == pytest.approx(25.0, abs=1e-9)
        assert model.eval_deriv(1.0, 1) == pytest.approx(25.0, abs=1e-9)


def test_module_entrypoint_subprocess(tmp_path):
    result = subprocess.run(
        [sys.executable, "-m", "lsplines", "demo", "--out", str(tmp_path / "demo")],
        capture_output=True,
        text=True,
        timeout=300,
    )
    assert result.returncode == 0
    assert (tmp_path / "demo" / "lspline.csv").exists()
