import json
import math

import pytest

from modewake.cli import (
    EXIT_IO,
    EXIT_OK,
    EXIT_USAGE,
    UsageError,
    main,
    parse_config,
    run_sweep,
)


def small_args(extra=()):
    return ["--mach", "1.5:2.5:3", "--y-over-h", "1", "--methods", "exact"] + list(extra)


class TestParseConfig:
    def test_defaults(self):
        spec = parse_config([])
        assert spec.N == 1.0
        assert spec.H == pytest.approx(math.pi)
        assert spec.n == 1
        assert spec.z == pytest.approx(-math.pi / 4)
        assert spec.z0 == pytest.approx(-math.pi / 4)
        assert spec.y_over_h == (1.0, 2.0, 3.0)
        assert (spec.m_min, spec.m_max, spec.points) == (0.5, 3.0, 126)
        assert spec.methods == ("exact", "macdonald", "airy")
        assert spec.fmt == "csv"

    def test_offsets_list(self):
        spec = parse_config(["--y-over-h", "1,2,3"])
        assert spec.y_over_h == (1.0, 2.0, 3.0)

    def test_mach_grid_inclusive(self):
        spec = parse_config(["--mach", "0.5:3.0:126"])
        assert spec.points == 126

    def test_mach_order_rejected(self):
        with pytest.raises(UsageError):
            parse_config(["--mach", "3.0:0.5:10"])

    def test_depth_changes_default_depths(self):
        spec = parse_config(["--depth", "8.0"])
        assert spec.z == pytest.approx(-2.0)

    def test_unknown_method_rejected(self):
        with pytest.raises(UsageError):
            parse_config(["--methods", "exact,magic"])

    def test_bad_values_rejected(self):
        for args in (
            ["--n-freq", "-1"],
            ["--depth", "0"],
            ["--mode", "0"],
            ["--z", "1.0"],
            ["--y-over-h", "0"],
            ["--mach", "0.5:3.0:1"],
            ["--mach=-1:2:10"],
            ["--rel-tol", "0"],
        ):
            with pytest.raises(UsageError):
                parse_config(args)

    def test_config_file_with_cli_override(self, tmp_path):
        cfg = tmp_path / "sweep.cfg"
        cfg.write_text("mach=1.5:2.5:5\nmethods=macdonald\n# comment\n")
        spec = parse_config(["--config", str(cfg)])
        assert spec.points == 5
        assert spec.methods == ("macdonald",)
        spec = parse_config(["--config", str(cfg), "--mach", "1.5:2.5:7"])
        assert spec.points == 7  # command line wins

    def test_unknown_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            parse_config(["--frobnicate"])
        assert exc.value.code == 2


class TestRunSweep:
    def test_grid_complete_and_ordered(self):
        rows = run_sweep(parse_config(["--mach", "1.2:2.0:5", "--y-over-h", "2,1"]))
        assert len(rows) == 10
        # offsets keep their input order; M increases within each block
        assert [r.y_over_h for r in rows] == [2.0] * 5 + [1.0] * 5
        for block in (rows[:5], rows[5:]):
            machs = [r.M for r in block]
            assert machs == sorted(machs)

    def test_all_exact_cells_converge_off_critical(self):
        rows = run_sweep(parse_config(small_args()))
        assert all(r.values["exact"] is not None for r in rows)
        assert all(not r.failed for r in rows)

    def test_gap_marker_at_critical(self):
        rows = run_sweep(parse_config(["--mach", "0.5:1.5:3", "--y-over-h", "1"]))
        middle = rows[1]
        assert middle.M == pytest.approx(1.0)
        assert middle.values["exact"] is None
        assert middle.values["macdonald"] is None
        assert not middle.failed  # physical gap, not a failure

    def test_airy_empty_subcritical(self):
        rows = run_sweep(parse_config(["--mach", "0.6:2.6:3", "--y-over-h", "3"]))
        assert rows[0].values["airy"] is None  # M = 0.6
        assert rows[2].values["airy"] is not None  # M = 2.6

    def test_near_critical_macdonald_close_to_exact(self):
        rows = run_sweep(
            parse_config(["--mach", "1.05:1.05001:2", "--y-over-h", "3"])
        )
        r = rows[0]
        assert abs(r.values["macdonald"] - r.values["exact"]) <= 0.10 * abs(
            r.values["exact"]
        )


class TestOutput:
    def test_csv_shape(self, tmp_path, capsys):
        out = tmp_path / "sweep.csv"
        code = main(small_args(["--out", str(out)]))
        assert code == EXIT_OK
        text = out.read_text()
        lines = text.splitlines()
        assert lines[0] == "y_over_H,M,eta_exact,exact_err"
        assert len(lines) == 4
        assert text.endswith("\n")
        assert "\r" not in text

    def test_determinism(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(small_args(["--out", str(a)])) == EXIT_OK
        assert main(small_args(["--out", str(b)])) == EXIT_OK
        assert a.read_bytes() == b.read_bytes()

    def test_stdout_default(self, capsys):
        assert main(small_args()) == EXIT_OK
        captured = capsys.readouterr()
        assert captured.out.startswith("y_over_H,M,")

    def test_json_round_trip(self, tmp_path):
        out = tmp_path / "sweep.json"
        assert main(small_args(["--format", "json", "--out", str(out)])) == EXIT_OK
        rows = json.loads(out.read_text())
        assert len(rows) == 3
        assert set(rows[0]) == {"y_over_H", "M", "eta_exact", "exact_err"}
        # values survive a serialize/parse cycle at 12 significant digits
        text2 = json.dumps(rows)
        assert json.loads(text2) == rows

    def test_empty_cells_are_empty_strings(self, tmp_path):
        out = tmp_path / "gap.csv"
        main(["--mach", "0.5:1.5:3", "--y-over-h", "1", "--out", str(out)])
        gap_row = out.read_text().splitlines()[2]
        assert ",,," in gap_row or gap_row.endswith(",")

    def test_compat_flag_changes_macdonald(self, tmp_path):
        base = ["--mach", "1.2:1.3:2", "--y-over-h", "3", "--methods", "macdonald"]
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        main(base + ["--out", str(a)])
        main(base + ["--compat-paper-k0-arg", "--out", str(b)])
        assert a.read_text() != b.read_text()

    def test_io_error_exit_3(self, tmp_path):
        missing = tmp_path / "no" / "such" / "dir" / "x.csv"
        assert main(small_args(["--out", str(missing)])) == EXIT_IO

    def test_usage_error_exit_2(self):
        assert main(["--mach", "3.0:0.5:10"]) == EXIT_USAGE
