"""CLI surface: flags, schemas, formats, exit codes, determinism."""

import csv
import io
import json
import math
import subprocess
import sys

import pytest

from stokes_isolas.cli import SCHEMA_PATH, main


def run_cli(*argv):
    """Invoke main() in-process, capturing stdout/stderr and the exit code."""
    out, err = io.StringIO(), io.StringIO()
    old_out, old_err = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = out, err
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    finally:
        sys.stdout, sys.stderr = old_out, old_err
    return code, out.getvalue(), err.getvalue()


def parse_csv(text):
    rows = [r for r in text.splitlines() if not r.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(rows))))


class TestResonanceCommand:
    def test_single_depth_row(self):
        code, out, _ = run_cli("resonance", "--p", "2", "--h", "10")
        assert code == 0
        (row,) = parse_csv(out)
        assert float(row["phi"]) == pytest.approx(0.2524159483781384, abs=1e-12)
        assert abs(float(row["residual"])) <= 1e-12
        assert float(row["phi_asymptote"]) == pytest.approx(0.25 + 0.375 * math.exp(-5), rel=1e-15)

    def test_grid_monotone_toward_deep_limit(self):
        code, out, _ = run_cli("resonance", "--p", "4", "--h-min", "2", "--h-max", "8", "--n", "7")
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 7
        phis = [float(r["phi"]) for r in rows]
        assert all(a < b for a, b in zip(phis, phis[1:]))
        assert phis[-1] == pytest.approx(2.25, abs=1e-5)

    def test_p_below_two_is_usage_error(self):
        code, _, err = run_cli("resonance", "--p", "1", "--h", "2")
        assert code == 2

    def test_grid_flag_conflicts(self):
        code, _, _ = run_cli("resonance", "--p", "2", "--h", "1", "--h-min", "1", "--h-max", "2")
        assert code == 2
        code, _, _ = run_cli("resonance", "--p", "2")
        assert code == 2


class TestBetaCommand:
    def test_near_zero_depth(self):
        code, out, _ = run_cli("beta", "--p", "3", "--h", "0.82064")
        assert code == 0
        (row,) = parse_csv(out)
        assert abs(float(row["beta1"])) <= 1e-4

    def test_p5_usage_error(self):
        code, _, _ = run_cli("beta", "--p", "5", "--h", "1")
        assert code == 2

    def test_breakdown_term_rows(self):
        code, out, _ = run_cli("beta", "--p", "4", "--h", "3", "--breakdown")
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 27
        total = sum(int(r["sign"]) * float(r["value"]) for r in rows)
        largest = max(abs(float(r["value"])) for r in rows)
        code2, out2, _ = run_cli("beta", "--p", "4", "--h", "3")
        beta_val = float(parse_csv(out2)[0]["beta1"])
        assert abs(total - beta_val) <= 64 * math.ulp(largest)

    def test_groups_match_deep_water_coefficients(self):
        code, out, _ = run_cli("beta", "--p", "4", "--h", "6", "--groups")
        assert code == 0
        rows = {r["group"]: float(r["value"]) for r in parse_csv(out)}
        assert len(rows) == 8
        from stokes_isolas import DEEP_WATER_GROUPS

        scale = math.exp(-12.0)
        for name, coeff in DEEP_WATER_GROUPS[4].items():
            if coeff != 0.0:
                assert rows[name] / scale == pytest.approx(coeff, rel=0.10), name


class TestZerosCommand:
    def test_p4_two_rows(self):
        code, out, _ = run_cli("zeros", "--p", "4", "--h-min", "0.3", "--h-max", "3")
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 2
        assert float(rows[0]["h_star"]) == pytest.approx(0.566633, abs=5e-4)
        assert float(rows[1]["h_star"]) == pytest.approx(1.255969, abs=5e-4)
        for r in rows:
            assert abs(float(r["residual"])) < 1e-6

    def test_p2_empty_range_keeps_header(self):
        code, out, _ = run_cli("zeros", "--p", "2", "--h-min", "3", "--h-max", "10", "--n", "500")
        assert code == 0
        assert out.splitlines()[0] == "p,h_star,residual"
        assert parse_csv(out) == []

    def test_p3_one_row(self):
        code, out, _ = run_cli("zeros", "--p", "3", "--h-min", "0.5", "--h-max", "2", "--n", "500")
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 1
        assert float(rows[0]["h_star"]) == pytest.approx(0.82064, abs=5e-4)


class TestIsolaCommand:
    def test_missing_T1_names_parameter(self):
        code, _, err = run_cli("isola", "--p", "2", "--h", "3", "--eps", "0.05", "--E", "0.5")
        assert code == 2
        assert "--T1" in err

    def test_missing_E_names_parameter(self):
        code, _, err = run_cli("isola", "--p", "2", "--h", "3", "--eps", "0.05", "--T1", "1")
        assert code == 2
        assert "--E" in err

    def test_ellipse_samples_on_curve(self):
        code, out, _ = run_cli(
            "isola", "--p", "2", "--h", "3", "--eps", "0.05", "--T1", "1", "--E", "0.5", "--n", "64"
        )
        assert code == 0
        meta = dict(
            line[2:].split(" = ", 1) for line in out.splitlines() if line.startswith("# ")
        )
        rows = parse_csv(out)
        assert len(rows) == 64
        g = float(meta["max_growth"])
        y0 = float(meta["y0"])
        E = float(meta["E"])
        tol = 8 * math.ulp(g * g) + 4 * E * g * math.ulp(abs(y0) + g / E)
        for r in rows:
            lhs = float(r["x"]) ** 2 + E**2 * (float(r["y"]) - y0) ** 2
            assert abs(lhs - g * g) <= tol

    def test_band_width_scales_with_eps_power(self):
        def width(eps):
            code, out, _ = run_cli(
                "isola", "--p", "2", "--h", "3", "--eps", str(eps),
                "--T1", "1", "--E", "0.5", "--format", "json",
            )
            assert code == 0
            band = json.loads(out)[0]
            return band["mu_high"] - band["mu_low"]

        assert width(0.1) / width(0.05) == pytest.approx(4.0, rel=1e-12)


class TestFormats:
    def test_csv_json_same_data(self):
        _, csv_out, _ = run_cli("resonance", "--p", "3", "--h-min", "1", "--h-max", "2", "--n", "3")
        _, json_out, _ = run_cli(
            "resonance", "--p", "3", "--h-min", "1", "--h-max", "2", "--n", "3", "--format", "json"
        )
        csv_rows = parse_csv(csv_out)
        json_rows = json.loads(json_out)
        assert len(csv_rows) == len(json_rows) == 3
        for c, j in zip(csv_rows, json_rows):
            for key in ("p", "h", "phi", "omega_star", "residual", "phi_asymptote"):
                assert float(c[key]) == pytest.approx(float(j[key]), rel=1e-15), key

    def test_round_trip_precision(self):
        _, out, _ = run_cli("beta", "--p", "2", "--h", "1.371")
        row = parse_csv(out)[0]
        from stokes_isolas import beta1

        assert float(row["beta1"]) == beta1(2, 1.371)

    def test_json_validates_against_shipped_schema(self):
        jsonschema = pytest.importorskip("jsonschema")
        schema = json.loads(SCHEMA_PATH.read_text())
        for argv in (
            ["resonance", "--p", "2", "--h", "4"],
            ["beta", "--p", "3", "--h", "2"],
            ["beta", "--p", "4", "--h", "2", "--breakdown"],
            ["beta", "--p", "4", "--h", "2", "--groups"],
            ["zeros", "--p", "3", "--h-min", "0.5", "--h-max", "2", "--n", "500"],
            ["isola", "--p", "2", "--h", "3", "--eps", "0.05", "--T1", "1", "--E", "0.5", "--n", "8"],
            ["selftest"],
        ):
            code, out, _ = run_cli(*argv, "--format", "json")
            assert code == 0, argv
            jsonschema.validate(json.loads(out), schema)

    def test_byte_stable(self):
        a = run_cli("beta", "--p", "4", "--h-min", "1", "--h-max", "4", "--n", "5")
        b = run_cli("beta", "--p", "4", "--h-min", "1", "--h-max", "4", "--n", "5")
        assert a == b


class TestSelftest:
    def test_passes_on_shipped_fixtures(self):
        code, out, err = run_cli("selftest")
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) >= 20
        assert all(r["ok"] == "true" for r in rows)
        assert "within the cancellation floor" in err

    def test_numerical_failure_exit_code(self, tmp_path):
        bad = tmp_path / "bad.tsv"
        bad.write_text("# corrupted record\n2\t1.0\t-0.25\t50\n")
        code, out, err = run_cli("selftest", "--fixtures", str(bad))
        assert code == 3
        assert "beyond the cancellation floor" in err
        (row,) = parse_csv(out)
        assert row["ok"] == "false"


class TestEnvironment:
    def test_thread_cap_keeps_order(self, monkeypatch):
        monkeypatch.setenv("STOKES_ISOLA_THREADS", "4")
        _, parallel, _ = run_cli("resonance", "--p", "2", "--h-min", "1", "--h-max", "3", "--n", "9")
        monkeypatch.setenv("STOKES_ISOLA_THREADS", "1")
        _, serial, _ = run_cli("resonance", "--p", "2", "--h-min", "1", "--h-max", "3", "--n", "9")
        assert parallel == serial

    def test_console_script_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "stokes_isolas.cli", "resonance", "--p", "2", "--h", "2"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.startswith("p,h,phi")
