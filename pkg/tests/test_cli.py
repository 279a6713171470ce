import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest

from stratnet.cli import main

MIRROR = {"omega": [4, 2, 2, 4], "alpha": [0, 0, 0, 0, 0]}
TCHEB = {"omega": [4, 2, 2, 2, 2], "alpha": [0] * 6}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


@pytest.fixture
def coeff_file(tmp_path):
    def make(data, name="c.json"):
        p = tmp_path / name
        p.write_text(json.dumps(data))
        return str(p)
    return make


class TestAnalyze:
    def test_cycle6(self, capsys):
        rep = run_json(capsys, "analyze", "--catalog", "cycle:6")
        assert 3 in rep["feasible_strata"]
        assert rep["bounds"][3] == 1.0
        assert rep["isg"]["is_isg"] and rep["antipodal"] and rep["reflective"]
        assert rep["coefficients"]["omega"] == [2, 1, 2]
        for key in ("eigenvalues", "weights", "pmat"):
            assert key in rep

    def test_mirror_sequence(self, capsys, coeff_file):
        rep = run_json(capsys, "analyze", "--coeffs", coeff_file(MIRROR))
        assert rep["feasible_strata"] == [4]
        assert rep["bounds"] is None

    def test_tcheb_sequence(self, capsys, coeff_file):
        rep = run_json(capsys, "analyze", "--coeffs", coeff_file(TCHEB))
        assert rep["feasible_strata"] == [3, 4]

    def test_coefficients_with_sizes(self, capsys, coeff_file):
        data = dict(MIRROR, sizes=[1, 4, 2, 4, 1])
        rep = run_json(capsys, "analyze", "--coeffs", coeff_file(data))
        assert rep["bounds"] == [1.0, 0.5, 0.707106781187, 0.5, 1.0]

    def test_not_isg(self, capsys, tmp_path):
        p = tmp_path / "p.txt"
        p.write_text("4 3\n0 1\n1 2\n2 3\n")
        code, out, err = run(capsys, "analyze", "--edges", str(p), "--origin", "1")
        assert code == 3
        assert json.loads(out)["isg"]["is_isg"] is False
        assert "NotIsg" in err

    def test_edges_input(self, capsys, tmp_path):
        p = tmp_path / "c4.txt"
        p.write_text("4 4\n0 1\n1 2\n2 3\n3 0\n")
        rep = run_json(capsys, "analyze", "--edges", str(p), "--origin", "2")
        assert rep["origin"] == 2 and rep["feasible_strata"] == [2]


class TestDesign:
    def test_hypercube2(self, capsys):
        rep = run_json(capsys, "design", "--catalog", "hypercube:2", "--stratum", "2")
        np.testing.assert_allclose(rep["couplings"], [0, 0, np.pi / 4], atol=1e-11)
        assert rep["tstar"] == 1
        assert rep["verify"]["passed"]

    def test_cycle6_default_stratum(self, capsys):
        rep = run_json(capsys, "design", "--catalog", "cycle:6")
        assert rep["stratum"] == 3 and rep["verify"]["passed"]

    def test_infeasible_antipode(self, capsys):
        code, out, err = run(capsys, "design", "--catalog", "tchebichef:5", "--stratum", "5")
        assert code == 3 and out == ""
        assert "InfeasibleStratum" in err

    def test_windings_and_xi0(self, capsys):
        rep = run_json(capsys, "design", "--catalog", "cycle:4", "--windings", "1,0,0",
                       "--xi0", "0.5", "--tstar", "2")
        assert rep["windings"] == [1, 0, 0] and rep["tstar"] == 2
        assert rep["verify"]["passed"]

    def test_out_file(self, capsys, tmp_path):
        p = tmp_path / "d.json"
        code, out, _ = run(capsys, "design", "--catalog", "hypercube:1", "--out", str(p))
        assert code == 0 and out == ""
        assert json.loads(p.read_text())["stratum"] == 1


class TestEvolve:
    def _rows(self, text):
        return list(csv.DictReader(io.StringIO(text)))

    def test_k2(self, capsys):
        code, out, _ = run(capsys, "evolve", "--catalog", "hypercube:1", "--samples", "101")
        assert code == 0
        rows = self._rows(out)
        assert len(rows) == 101
        assert float(rows[-1]["t"]) == 1.0
        assert abs(float(rows[-1]["concurrence_0i"]) - 1.0) <= 1e-9

    def test_c6_peak_at_tstar(self, capsys):
        _, out, _ = run(capsys, "evolve", "--catalog", "cycle:6", "--tstar", "3")
        rows = self._rows(out)
        conc = [float(r["concurrence_0i"]) for r in rows]
        assert float(rows[-1]["t"]) == 3.0
        assert max(conc) == pytest.approx(1.0, abs=1e-9)
        assert conc[-1] == pytest.approx(1.0, abs=1e-9)

    def test_header(self, capsys):
        _, out, _ = run(capsys, "evolve", "--catalog", "hypercube:1", "--samples", "2")
        assert out.splitlines()[0] == "t,re_gamma_0,im_gamma_0,re_gamma_1,im_gamma_1,concurrence_0i"

    @pytest.mark.parametrize("extra", [["--tmax", "0"], ["--samples", "1"], ["--tstar", "0"]])
    def test_rejected(self, capsys, extra):
        code, out, err = run(capsys, "evolve", "--catalog", "hypercube:1", *extra)
        assert code == 2 and out == "" and err.startswith("error:")

    def test_coefficients_without_sizes(self, capsys, coeff_file):
        _, out, _ = run(capsys, "evolve", "--coeffs", coeff_file(MIRROR), "--samples", "3")
        assert self._rows(out)[-1]["concurrence_0i"] == "nan"


class TestSchemeAndHeisenberg:
    def test_verify_scheme_c6(self, capsys):
        rep = run_json(capsys, "verify-scheme", "--catalog", "cycle:6")
        assert rep["is_scheme"] and rep["bose_mesner_residual"] == 0
        assert rep["distance_polynomial_residual"] <= 1e-9
        assert rep["szego_jacobi"]["omega"] == [2, 1, 2]

    def test_verify_scheme_witness(self, capsys):
        rep = run_json(capsys, "verify-scheme", "--catalog", "mirror")
        assert rep["is_scheme"] is False and len(rep["witness"]) == 4

    def test_verify_scheme_needs_graph(self, capsys):
        code, _, err = run(capsys, "verify-scheme", "--catalog", "wells")
        assert code == 2 and "needs a graph" in err

    def test_heisenberg_c4(self, capsys):
        rep = run_json(capsys, "heisenberg-check", "--catalog", "cycle:4")
        assert rep["n"] == 4
        assert [c["i"] for c in rep["per_class"]] == [0, 1, 2]
        assert all(c["residual"] <= 1e-10 for c in rep["per_class"])
        assert rep["magnetization_residual"] == 0
        assert rep["evolution_deviation"] <= 1e-10
        assert rep["concurrence"] >= 1 - 1e-8


class TestCatalogAndErrors:
    def test_list(self, capsys):
        code, out, _ = run(capsys, "catalog", "list", "--jobs", "4")
        assert code == 0
        names = [line.split("\t")[0] for line in out.splitlines()]
        assert {"cycle:6", "wells", "do4", "j84", "tchebichef:5"} <= set(names)
        assert "warning" in [l for l in out.splitlines() if l.startswith("do4")][0]

    def test_list_jobs_independent(self, capsys):
        _, a, _ = run(capsys, "catalog", "list", "--jobs", "1")
        _, b, _ = run(capsys, "catalog", "list", "--jobs", "3")
        assert a == b

    def test_emit(self, capsys):
        _, out, _ = run(capsys, "catalog", "emit", "cycle:4")
        assert out.splitlines()[0] == "4 4"
        rep = run_json(capsys, "catalog", "emit", "wells")
        assert rep["omega"] == [5, 4, 4, 5]

    @pytest.mark.parametrize("argv,code", [
        (["analyze"], 2),
        (["analyze", "--catalog", "cycle:6", "--coeffs", "x.json"], 2),
        (["analyze", "--catalog", "petersen"], 3),
        (["analyze", "--catalog", "cycle:2"], 3),
        (["analyze", "--edges", "/nonexistent/file"], 2),
        (["analyze", "--catalog", "cycle:6", "--origin", "9"], 2),
        (["design", "--catalog", "cycle:6", "--stratum", "7"], 2),
        (["design", "--catalog", "cycle:6", "--windings", "1,x"], 2),
        (["catalog", "emit"], 2),
    ])
    def test_exit_codes(self, capsys, argv, code):
        got, out, err = run(capsys, *argv)
        assert got == code and err

    def test_deterministic_output(self, capsys):
        a = run(capsys, "analyze", "--catalog", "johnson:6,3")[1]
        b = run(capsys, "analyze", "--catalog", "johnson:6,3")[1]
        assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "stratnet", "design", "--catalog", "hypercube:1"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["verify"]["passed"]
