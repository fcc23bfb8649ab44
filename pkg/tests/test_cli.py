import csv
import json
import os

import pytest

from qwalk_bolts.cli import EXIT_CODES, Status, cli_main
from qwalk_bolts.utils.exceptions import FactorizationLimitError, NumericError


def _run(capsys, *argv):
    code = cli_main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_build(capsys):
    code, out = _run(capsys, "build", "complete:2", "--satellites", "complete:1")
    assert code == 0
    assert out["status"] == "ok"
    assert (out["vertices"], out["edges"]) == (4, 3)
    assert out["edge_list"] == [[0, 1], [0, 3], [1, 2]]
    assert out["labels"] == {"0": "v:0", "1": "v:1", "2": "v:0/w:0", "3": "v:1/w:0"}


def test_build_files(capsys, tmp_path):
    prefix = str(tmp_path / "corona")
    code, out = _run(capsys, "build", "cycle:4", "--satellites", "complete:2", "--out", prefix)
    assert code == 0
    assert out["files"] == [f"{prefix}.edges", f"{prefix}.labels.json"]
    assert all(os.path.isfile(path) for path in out["files"])
    with open(f"{prefix}.labels.json") as fp:
        assert len(json.load(fp)["labels"]) == 12


@pytest.mark.parametrize("extra,mode", [([], "numeric"), (["--closed-form"], "closed-form")])
def test_spectrum(capsys, extra, mode):
    code, out = _run(capsys, "spectrum", "cycle:4", "--satellites", "complete:1", *extra)
    assert code == 0
    assert out["mode"] == mode
    assert sum(out["multiplicities"]) == 8
    assert all(value < 1e-8 for value in out["invariant_deviation"].values())


def test_spectrum_closed_form_preconditions(capsys):
    code, out = _run(capsys, "spectrum", "cycle:4", "--satellites", "complete:1", "--closed-form", "--k", "1")
    assert code == EXIT_CODES[Status.PRECONDITION_FAILED]
    code, out = _run(capsys, "spectrum", "cycle:4", "--closed-form")
    assert code == EXIT_CODES[Status.USAGE]


def test_fidelity_at_zero(capsys):
    code, out = _run(capsys, "fidelity", "path:4", "1", "2", "--t", "0")
    assert code == 0
    assert out["fidelity"] == pytest.approx(0.0, abs=1e-12)
    assert (out["u"], out["v"]) == ("v:1", "v:2")


def test_fidelity_scan(capsys, tmp_path):
    path = str(tmp_path / "curve.csv")
    code, out = _run(
        capsys, "fidelity", "complete:2", "v:0", "v:1/w:0", "--satellites", "complete:1",
        "--scan", "0", "10", "101", "--out", path,
    )
    assert code == 0
    assert out["csv"] == path
    assert out["steps"] == 101
    with open(path) as fp:
        rows = list(csv.reader(fp))
    assert rows[0] == ["t", "re", "im", "fidelity"]
    assert len(rows) == 102
    assert max(float(row[3]) for row in rows[1:]) == pytest.approx(out["max_fidelity"])


def test_fidelity_from_data(capsys, datadir):
    code, out = _run(capsys, "fidelity", "0", "1", "--data", str(datadir / "golay_double_coset.json"), "--t", "1.0")
    assert code == 0
    assert 0.0 <= out["fidelity"] <= 1.0


@pytest.mark.parametrize(
    "argv",
    [
        ["fidelity", "path:4", "1", "2"],
        ["fidelity", "path:4", "1", "2", "--t", "1", "--scan", "0", "1", "10"],
        ["build", "blob:3"],
        ["build", "path:0"],
        ["build", "@missing-graph.json"],
        ["certify", "pst", "cycle:4", "0"],
        ["certify", "periodic", "cycle:4", "9"],
        ["spectrum", "cycle:4", "--support_tol", "-1"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out = _run(capsys, *argv)
    assert code == EXIT_CODES[Status.USAGE] == 64
    assert out["status"] == "usage"
    assert out["error"]


def test_pst_with_data_is_usage_error(capsys, datadir):
    code, out = _run(capsys, "certify", "pst", "0", "1", "--data", str(datadir / "golay_double_coset.json"))
    assert code == 64


def test_certify_periodic(capsys):
    code, out = _run(capsys, "certify", "periodic", "cycle:4", "0")
    assert code == 0
    assert out["verdict"] == "periodic"
    assert out["vertex"] == "v:0"
    assert "return_probe" not in out


def test_certify_not_periodic_without_near_return(capsys):
    code, out = _run(capsys, "certify", "periodic", "path:4", "1", "--probe_horizon", "20")
    assert code == 0
    assert out["verdict"] == "not_periodic"
    assert out["return_probe"]["horizon"] == 20.0
    assert out["return_probe"]["near_returns"] == 0
    assert out["return_probe"]["first_return"] is None


def test_certify_not_periodic_with_near_return(capsys):
    with pytest.warns(UserWarning, match="not periodic"):
        code, out = _run(
            capsys, "certify", "periodic", "complete:2", "v:0", "--satellites", "complete:1", "--probe_horizon", "110"
        )
    assert code == 0
    assert out["verdict"] == "not_periodic"
    assert out["return_probe"]["near_returns"] > 0
    assert 105.0 < out["return_probe"]["first_return"] < 108.5


def test_certify_periodic_inconclusive(capsys):
    code, out = _run(capsys, "certify", "periodic", "path:7", "0")
    assert code == EXIT_CODES[Status.INCONCLUSIVE] == 3
    assert out["verdict"] == "inconclusive"
    assert "return_probe" not in out


def test_certify_periodic_from_data(capsys, datadir):
    data = str(datadir / "golay_double_coset.json")
    code, out = _run(capsys, "certify", "periodic", "0", "--data", data, "--probe_horizon", "50")
    assert code == 0
    assert out["verdict"] == "not_periodic"
    assert {"gap", "bound", "return_probe"} <= set(out)


def test_certify_pst(capsys):
    code, out = _run(capsys, "certify", "pst", "cycle:4", "0", "2")
    assert code == 0
    assert out["holds"] is True
    assert out["t0"] == pytest.approx(1.5707963267948966)


def test_certify_pgst(capsys):
    code, out = _run(capsys, "certify", "pgst", "complete:2", "0", "1", "--eps", "0.01")
    assert code == 0
    assert out["found"] is True
    assert out["achieved_fidelity"] >= 0.99


def test_certify_pgst_without_base_pst(capsys):
    code, out = _run(capsys, "certify", "pgst", "cycle:4", "0", "1")
    assert code == EXIT_CODES[Status.PRECONDITION_FAILED] == 2
    assert out["status"] == "precondition_failed"


def test_certify_pgst_data_needs_g(capsys, datadir):
    code, _ = _run(capsys, "certify", "pgst", "0", "1", "--data", str(datadir / "golay_double_coset.json"))
    assert code == 64


def test_certify_pgst_exhausted(capsys):
    with pytest.warns(UserWarning):
        code, out = _run(
            capsys, "certify", "pgst", "complete:2", "0", "1", "--eps", "0.01", "--lmax", "5", "--l_cap", "10"
        )
    assert code == EXIT_CODES[Status.NOT_FOUND] == 4
    assert out["found"] is False
    assert out["l_max_used"] == 10


def test_build_mixed_satellites(capsys):
    code, out = _run(capsys, "build", "path:3", "--satellites", "path:2,path:1,path:2")
    assert code == 0
    assert (out["vertices"], out["edges"]) == (8, 14)


def test_closed_form_branches(capsys):
    code, out = _run(capsys, "spectrum", "complete:2", "--satellites", "complete:1", "--closed-form")
    assert code == 0
    assert {e["branch"] for e in out["branches"]["branches"]} == {"c", "d"}
    assert len(out["eigenvalues"]) == 4


def test_closed_form_irregular_base(capsys):
    code, out = _run(capsys, "spectrum", "path:3", "--satellites", "complete:1", "--closed-form")
    assert code == 2
    assert out["offending"] == ["G"]


def test_fidelity_pair_at_half_pi(capsys):
    code, out = _run(capsys, "fidelity", "complete:2", "0", "1", "--t", "1.5707963")
    assert code == 0
    assert out["fidelity"] == pytest.approx(1.0, abs=1e-12)


def test_numeric_failures_are_inconclusive(capsys, monkeypatch):
    def failing(*args, **kwargs):
        raise NumericError("symmetric eigendecomposition failed: did not converge")

    monkeypatch.setattr("qwalk_bolts.cli.eigendecompose", failing)
    code, out = _run(capsys, "certify", "periodic", "cycle:4", "0")
    assert code == EXIT_CODES[Status.INCONCLUSIVE] == 3
    assert out["status"] == "inconclusive"
    assert out["kind"] == "NumericError"
    assert "did not converge" in out["error"]


def test_factorization_limit_is_inconclusive(capsys, monkeypatch):
    def failing(*args, **kwargs):
        raise FactorizationLimitError("cofactor 1000000000039 has three prime factors above the bound")

    monkeypatch.setattr("qwalk_bolts.cli.is_periodic_vertex", failing)
    code, out = _run(capsys, "certify", "periodic", "cycle:4", "0")
    assert code == 3
    assert out["kind"] == "FactorizationLimitError"
