"""Command-line behaviour: envelopes, goldens, exit codes, the SVG figure."""

import json
import subprocess
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from polytangent import cli
from polytangent.tangency import CertificateError

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


GOLDEN_CASES = [
    ("tangent.json", ("--json", "tangent", "x^2", "3")),
    ("derive.json", ("--json", "derive", "x^3")),
    ("check.json", ("--json", "check", "x^2", "5", "-6", "3")),
    ("decompose.json", ("--json", "decompose", "x^2", "3")),
    ("table.json", ("--json", "table", "x^2", "3", "--steps", "3")),
]


class TestGoldens:
    @pytest.mark.parametrize("name,argv", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
    def test_byte_identical(self, capsys, name, argv):
        code, out = run_cli(capsys, *argv)
        assert code == 0
        assert out == (GOLDEN / name).read_text(encoding="utf-8")

    @pytest.mark.parametrize("name,argv", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
    def test_deterministic(self, capsys, name, argv):
        _, first = run_cli(capsys, *argv)
        _, second = run_cli(capsys, *argv)
        assert first == second


class TestEnvelope:
    def test_shape(self, capsys):
        _, out = run_cli(capsys, "--json", "derive", "x^2")
        env = json.loads(out)
        assert list(env) == ["command", "inputs", "result", "status", "error"]
        assert env["status"] == "ok"
        assert env["error"] is None

    def test_inputs_echoed_canonically(self, capsys):
        _, out = run_cli(capsys, "--json", "tangent", "x*x", "0.5")
        env = json.loads(out)
        assert env["inputs"] == {"expr": "x^2", "p": "1/2"}

    def test_error_envelope(self, capsys):
        code, out = run_cli(capsys, "--json", "derive", "x^(-1)")
        env = json.loads(out)
        assert code == 2
        assert env["status"] == "error"
        assert env["result"] is None
        assert "offset 2" in env["error"]


class TestCommands:
    def test_tangent_constant(self, capsys):
        _, out = run_cli(capsys, "--json", "tangent", "7", "0")
        r = json.loads(out)["result"]
        assert (r["slope"], r["intercept"], r["cofactor"]) == ("0", "7", "0")

    def test_tangent_cube(self, capsys):
        _, out = run_cli(capsys, "--json", "tangent", "x^3", "2")
        r = json.loads(out)["result"]
        assert (r["slope"], r["intercept"], r["cofactor"]) == ("12", "-16", "x + 4")

    def test_derive_constant(self, capsys):
        _, out = run_cli(capsys, "--json", "derive", "5")
        assert json.loads(out)["result"]["derivative"] == "0"

    def test_derive_rational_function(self, capsys):
        _, out = run_cli(capsys, "--json", "derive", "1/x")
        r = json.loads(out)["result"]
        assert r == {"kind": "rational_function", "derivative": "-1/x^2"}

    def test_check_tangent_line(self, capsys):
        _, out = run_cli(capsys, "--json", "check", "x^2", "6", "-9", "3")
        r = json.loads(out)["result"]
        assert r["multiplicity"] == 2
        assert r["tangent"] is True

    def test_check_coincident_line(self, capsys):
        _, out = run_cli(capsys, "--json", "check", "x+1", "1", "1", "5")
        r = json.loads(out)["result"]
        assert r["multiplicity"] == "INFINITE"
        assert r["tangent"] is True

    def test_mult(self, capsys):
        _, out = run_cli(capsys, "--json", "mult", "x^2", "6", "-9", "3")
        assert json.loads(out)["result"]["multiplicity"] == 2

    def test_decompose_linear(self, capsys):
        _, out = run_cli(capsys, "--json", "decompose", "2*x+1", "10")
        r = json.loads(out)["result"]
        assert (r["value"], r["slope"], r["remainder"]) == ("21", "2", "0")
        assert r["valuation"] == "INFINITE"

    def test_decompose_quartic(self, capsys):
        _, out = run_cli(capsys, "--json", "decompose", "x^4", "0")
        r = json.loads(out)["result"]
        assert r["remainder"] == "t^4"
        assert r["valuation"] == 4

    def test_expand(self, capsys):
        _, out = run_cli(capsys, "--json", "expand", "x^2", "3")
        r = json.loads(out)["result"]
        assert r["coefficients"] == ["9", "6", "1"]
        assert r["polynomial"] == "t^2 + 6*t + 9"

    def test_table_of_line(self, capsys):
        _, out = run_cli(capsys, "--json", "table", "x+1", "0", "--steps", "2")
        rows = json.loads(out)["result"]["rows"]
        assert [r["gap"] for r in rows] == ["0", "0"]

    def test_table_of_cube(self, capsys):
        _, out = run_cli(capsys, "--json", "table", "x^3", "1", "--steps", "1")
        row = json.loads(out)["result"]["rows"][0]
        assert (row["quotient"], row["gap"]) == ("331/100", "31/100")

    def test_rules_all_hold(self, capsys):
        _, out = run_cli(capsys, "--json", "rules", "x^2", "x^3")
        reports = json.loads(out)["result"]["reports"]
        assert [r["rule"] for r in reports] == ["sum", "product", "quotient", "chain"]
        assert all(r["holds"] for r in reports)

    def test_rules_zero_denominator(self, capsys):
        code, out = run_cli(capsys, "--json", "rules", "x", "0")
        assert code == 0
        reports = {r["rule"]: r for r in json.loads(out)["result"]["reports"]}
        assert reports["quotient"]["holds"] is None
        assert "error" in reports["quotient"]
        for rule in ("sum", "product", "chain"):
            assert reports[rule]["holds"] is True

    def test_rules_trivial(self, capsys):
        _, out = run_cli(capsys, "--json", "rules", "1", "1")
        assert all(r["holds"] for r in json.loads(out)["result"]["reports"])

    def test_dual_elementary(self, capsys):
        _, out = run_cli(capsys, "--json", "dual", "sin", "0", "1")
        r = json.loads(out)["result"]
        assert (r["real"], r["eps"]) == (0.0, 1.0)

    def test_dual_polynomial(self, capsys):
        _, out = run_cli(capsys, "--json", "dual", "x^3", "2", "1")
        r = json.loads(out)["result"]
        assert (r["real"], r["eps"]) == ("8", "12")

    def test_dual_domain_error(self, capsys):
        code, out = run_cli(capsys, "--json", "dual", "log", "-1", "1")
        assert code == 2
        assert json.loads(out)["status"] == "error"


class TestTextMode:
    def test_tangent_text(self, capsys):
        code, out = run_cli(capsys, "tangent", "x^2", "3")
        assert code == 0
        assert "y = 6*x - 9" in out
        assert "x^2 - 6*x + 9 = (x - 3)^2 * (1)" in out

    def test_error_text(self, capsys):
        code, out = run_cli(capsys, "derive", "1/")
        assert code == 2
        assert out.startswith("error:")


class TestOutputFile:
    def test_output_flag_writes_file(self, capsys, tmp_path):
        target = tmp_path / "out.json"
        code = cli.main(["--json", "--output", str(target), "derive", "x^3"])
        assert code == 0
        assert capsys.readouterr().out == ""
        assert json.loads(target.read_text())["result"]["derivative"] == "3*x^2"


class TestExitCodes:
    def test_input_error(self, capsys):
        assert run_cli(capsys, "tangent", "x^", "3")[0] == 2

    def test_lowering_error(self, capsys):
        assert run_cli(capsys, "tangent", "1/x", "3")[0] == 2

    def test_bad_rational(self, capsys):
        assert run_cli(capsys, "tangent", "x^2", "3//4")[0] == 2

    def test_certificate_failure_is_exit_3(self, capsys, monkeypatch):
        def explode(*_args, **_kwargs):
            raise CertificateError("forced for the test")

        monkeypatch.setattr(cli, "tangent_at", explode)
        code, out = run_cli(capsys, "--json", "tangent", "x^2", "3")
        assert code == 3
        assert json.loads(out)["status"] == "error"


def data_elements(svg_path: Path) -> dict:
    root = ET.parse(svg_path).getroot()
    return {el.get("id"): el for el in root.iter() if el.get("id")}


class TestPlot:
    def test_figure_geometry(self, capsys, tmp_path):
        out_svg = tmp_path / "fig.svg"
        code, out = run_cli(
            capsys,
            "--json",
            "plot",
            "x^2",
            "3",
            "--range",
            "0,6",
            "--dx",
            "2",
            "--out",
            str(out_svg),
        )
        assert code == 0
        env = json.loads(out)
        assert env["result"]["delta_y"] == "16"
        assert env["result"]["differential"] == "12"

        els = data_elements(out_svg)
        tangent = els["tangent"]
        assert float(tangent.get("x1")) == 0.0
        assert float(tangent.get("y1")) == -9.0
        assert float(tangent.get("x2")) == 6.0
        assert float(tangent.get("y2")) == 27.0
        curve = els["curve"]
        assert curve.get("d").count("L") + 1 >= 256

    def test_plot_without_dx_has_no_secant(self, capsys, tmp_path):
        out_svg = tmp_path / "plain.svg"
        code, _ = run_cli(
            capsys, "plot", "x^2", "3", "--range", "0,6", "--out", str(out_svg)
        )
        assert code == 0
        els = data_elements(out_svg)
        assert "secant" not in els
        assert "tangent" in els

    def test_plot_is_deterministic(self, capsys, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        run_cli(capsys, "plot", "x^2", "3", "--range", "0,6", "--dx", "2", "--out", str(a))
        run_cli(capsys, "plot", "x^2", "3", "--range", "0,6", "--dx", "2", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_empty_range_is_an_input_error(self, capsys, tmp_path):
        code, _ = run_cli(
            capsys, "plot", "x^2", "3", "--range", "1,1", "--out", str(tmp_path / "x.svg")
        )
        assert code == 2

    def test_zero_dx_is_an_input_error(self, capsys, tmp_path):
        code, _ = run_cli(
            capsys,
            "plot", "x^2", "3", "--range", "0,6", "--dx", "0",
            "--out", str(tmp_path / "x.svg"),
        )
        assert code == 2

    def test_custom_size(self, capsys, tmp_path):
        out_svg = tmp_path / "small.svg"
        code, _ = run_cli(
            capsys,
            "plot", "x^2", "3", "--range", "0,6", "--size", "400x300",
            "--out", str(out_svg),
        )
        assert code == 0
        root = ET.parse(out_svg).getroot()
        assert root.get("width") == "400"
        assert root.get("height") == "300"


class TestSubprocess:
    def test_module_entry_point(self, tmp_path):
        proc = subprocess.run(
            [sys.executable, "-m", "polytangent", "--json", "derive", "x^3"],
            capture_output=True,
            text=True,
            cwd=tmp_path,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["result"]["derivative"] == "3*x^2"
