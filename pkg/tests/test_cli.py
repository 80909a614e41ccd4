import json
from pathlib import Path
import subprocess
import sys

import pytest

from gpdmf.cli import main

SYSTEMS = Path(__file__).resolve().parent.parent / "systems"
DUAL = str(SYSTEMS / "dual_3x3.json")
FFLS = str(SYSTEMS / "ffls_3x3.json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, obj, name="sys.json"):
    p = tmp_path / name
    p.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
    return str(p)


class TestSolve:
    def test_dual(self, capsys):
        code, out, _ = run(capsys, "solve", DUAL)
        res = json.loads(out)
        assert code == 0 and res["solution"]["status"] == "unique"
        cores = [v[0] for v in res["solution"]["particular"]]
        assert cores == pytest.approx([0, 5 / 3, 3], abs=1e-9)
        assert res["diagnostics"]["residual"]["particular_max_abs"] <= 1e-9
        assert "seconds" in res["timing"]

    def test_dual_cramer(self, capsys):
        code, out, _ = run(capsys, "solve", "-i", DUAL, "--method", "cramer")
        assert code == 0 and json.loads(out)["diagnostics"]["method"] == "cramer"

    def test_ffls(self, capsys, tmp_path):
        dest = tmp_path / "r.json"
        code, out, _ = run(capsys, "solve", FFLS, "--method", "coordinate", "-o", str(dest))
        res = json.loads(dest.read_text())
        assert code == 0 and out == ""
        assert res["solution"]["dimension"] == 4 and res["solution"]["rank"] == [1, 3, 3, 2, 2]

    def test_ffls_fuzzy_gauss_reports_fallback(self, capsys):
        code, out, _ = run(capsys, "solve", FFLS, "--method", "fuzzy-gauss")
        diag = json.loads(out)["diagnostics"]
        assert code == 0 and diag["achieved_rref"] is False and "fallback" in diag

    def test_inconsistent_exit_2(self, capsys, tmp_path):
        p = write(tmp_path, {"type": "sfls", "A": [[1], [1]], "b": [[1, 2.718281828459045, 2.718281828459045, 1, 1], [0, 1, 1, 0, 0]]})
        code, out, _ = run(capsys, "solve", p)
        assert code == 2 and json.loads(out)["solution"]["status"] == "inconsistent"

    def test_wrong_length_exit_1(self, capsys, tmp_path):
        p = write(tmp_path, {"type": "sfls", "A": [[1, 0], [0, 1]], "b": [[1, 1, 1, 0, 0]]})
        code, _, err = run(capsys, "solve", p)
        assert code == 1 and "DimensionMismatch" in err

    @pytest.mark.parametrize("text", ["{", '{"type": "sfls", "A": [[1]], "b": [[0, 0, 1, 0, 0]]}', "[]"])
    def test_bad_input_exit_1(self, capsys, tmp_path, text):
        code, _, err = run(capsys, "solve", write(tmp_path, text))
        assert code == 1 and err.startswith("error:")

    def test_method_mismatch(self, capsys):
        code, _, err = run(capsys, "solve", DUAL, "--method", "coordinate")
        assert code == 1 and "does not apply" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "solve", "nope.json")
        assert code == 1 and "cannot read" in err

    def test_tolerance_flag(self, capsys):
        code, out, _ = run(capsys, "solve", DUAL, "--tolerance", "1e-6")
        assert code == 0 and json.loads(out)["diagnostics"]["tolerance"] == 1e-6


class TestSample:
    def test_zero(self, capsys):
        code, out, _ = run(capsys, "sample", "<0;1,1,0,0>", "--samples", "3")
        assert code == 0
        assert out == "t,membership\n-1.200000,0.000000\n0.000000,1.000000\n1.200000,0.000000\n"

    def test_approximately_two(self, capsys, tmp_path):
        dest = tmp_path / "c.csv"
        code, _, _ = run(capsys, "sample", "2;2,3,0.5,0.5", "--samples", "101", "-o", str(dest))
        raw = dest.read_bytes()
        assert code == 0 and b"\r" not in raw
        rows = [tuple(map(float, r.split(","))) for r in raw.decode().splitlines()[1:]]
        assert len(rows) == 101
        ts = [t for t, _ in rows]
        assert all(b > a for a, b in zip(ts, ts[1:]))
        assert all(0 <= f <= 1 for _, f in rows)
        t, f = min(rows, key=lambda r: abs(r[0] - 1))
        assert f == pytest.approx(0.3085, abs=0.002)

    def test_e2_right_branch(self, capsys):
        code, out, _ = run(capsys, "sample", "<0; e, 1, 0, 0>", "--samples", "5")
        rows = [tuple(map(float, r.split(","))) for r in out.splitlines()[1:]]
        assert code == 0 and all(f == 0 for t, f in rows if t >= 1)

    def test_from_file(self, capsys, tmp_path):
        code, out, _ = run(capsys, "sample", "-i", write(tmp_path, [0, 1, 1, 0, 0]), "--samples", "3")
        assert code == 0 and out.splitlines()[2] == "0.000000,1.000000"

    @pytest.mark.parametrize("argv", [["<0;1,1>"], ["<0;0,1,0,0>"], ["<0;1,1,0,0>", "--samples", "1"], []])
    def test_errors(self, capsys, argv):
        assert run(capsys, "sample", *argv)[0] == 1


class TestConvert:
    def test_default(self, capsys):
        code, out, _ = run(capsys, "convert", "--trapezoid=-3,1,3,6")
        assert code == 0 and json.loads(out) == pytest.approx([2, 5, 4, 0.75, 0.09], abs=0.01)

    def test_control_points(self, capsys):
        code, out, _ = run(capsys, "convert", "--trapezoid=-15,-14,-14,-8",
                           "--left-cp=-14.5,0.5", "--right-cp=-11,0.5")
        assert code == 0 and json.loads(out) == pytest.approx([-14, 1, 6, 0, 0], abs=1e-9)

    def test_collapsed(self, capsys):
        code, out, _ = run(capsys, "convert", "--trapezoid", "0,1,1,2")
        assert code == 0 and json.loads(out)[0] == 1

    @pytest.mark.parametrize("argv,err", [
        (["--trapezoid=3,2,1,0"], "BadShape"), (["--trapezoid=0,1,2,3", "--left-cp=5,0.5"], "OutOfBranch"),
        (["--trapezoid=0,1,2"], "4 numbers"), (["--trapezoid=a,b,c,d"], "comma"), ([], "required"),
    ])
    def test_errors(self, capsys, argv, err):
        code, _, msg = run(capsys, "convert", *argv)
        assert code == 1 and err in msg


class TestRref:
    def test_real(self, capsys, tmp_path):
        code, out, _ = run(capsys, "rref", write(tmp_path, {"type": "sfls", "A": [[2, 4], [1, 2]]}))
        assert code == 0 and json.loads(out)["rank"] == 1

    def test_fuzzy_identity(self, capsys, tmp_path):
        e = 2.718281828459045
        one, zero = [1, e, e, 1, 1], [0, 1, 1, 0, 0]
        code, out, _ = run(capsys, "rref", write(tmp_path, {"type": "ffls", "A": [[one, zero], [zero, one]]}))
        res = json.loads(out)
        assert code == 0 and res["ops"] == [] and res["achieved_rref"] is True

    def test_worked_matrix(self, capsys):
        code, out, _ = run(capsys, "rref", FFLS)
        res = json.loads(out)
        assert code == 0 and res["achieved_rref"] is False
        first = res["ops"][0]
        assert first["kind"] == "scale" and first["factor"][1] == pytest.approx(4.2321, abs=1e-4)


def test_help_exit_0(capsys):
    assert main(["--help"]) == 0


def test_unknown_command_exit_1(capsys):
    assert main(["frobnicate"]) == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gpdmf", "convert", "--trapezoid=-3,1,3,6"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("[2.0")


@pytest.mark.parametrize("path", [DUAL, FFLS])
def test_solution_json_revalidates(capsys, path):
    from gpdmf import fuzzy_residual, residual
    from gpdmf import serialize as ser

    code, out, _ = run(capsys, "solve", path)
    sol = ser.solution_from_json(json.loads(out)["solution"])
    spec = ser.system_from_json(json.loads(Path(path).read_text()))
    if spec.type == "ffls":
        err = fuzzy_residual(spec.A, sol.particular, spec.b)
    else:
        err = residual(spec.A - spec.B, sol.particular, spec.Z - spec.Y)
    assert code == 0 and abs(err).max() <= 1e-8
