import json
import subprocess
import sys

import pytest

from cauchy_vertex.cli import dispatch
from cauchy_vertex.hpp import HalfPlanePartition
from cauchy_vertex.poly import MultiPoly, QSeries


def run(capsys, *argv):
    code = dispatch(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_dual_cauchy_text(capsys):
    code, out, _ = run(capsys, "verify", "dual-cauchy", "--rows", "2", "--cols", "2")
    assert code == 0
    assert out.splitlines()[0].startswith("dual-cauchy [K=2 N=2")
    assert "HOLDS" in out


def test_expand_limit_series_json(capsys):
    code, out, _ = run(capsys, "expand", "series", "limit", "--degree", "5", "--json")
    assert code == 0
    data = json.loads(out)
    assert data == {"order": 5, "coeffs": ["1", "0", "-1", "-2", "-3", "-2"]}
    assert QSeries.from_json(data).coeffs == (1, 0, -1, -2, -3, -2)


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "dual-cauchy", "--rows", "2"],
        ["verify", "nonsense"],
        [],
        ["verify", "q-box", "--rows", "-1", "--cols", "2"],
        ["expand", "schur", "--partition", "1,2", "--vars", "2"],
        ["enumerate", "chains", "--from", "x", "--steps", "2"],
        ["expand", "series", "q-box", "--degree", "4"],
        ["expand", "series", "macmahon"],
        ["verify", "macmahon", "--degree", "100"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "cauchy", "--rows", "2", "--cols", "2", "--degree", "3"],
        ["verify", "cauchy", "--rows", "2", "--cols", "2", "--degree", "4", "--signed"],
        ["verify", "correlation", "--rows", "2", "--cols", "2"],
        ["verify", "q-box", "--rows", "2", "--cols", "3"],
        ["verify", "limit", "--degree", "6"],
        ["verify", "macmahon", "--degree", "5"],
        ["verify", "fock", "--max-weight", "3"],
    ],
)
def test_verify_text_and_json_agree(capsys, argv):
    code_text, out_text, _ = run(capsys, *argv)
    code_json, out_json, _ = run(capsys, *argv, "--json")
    assert code_text == code_json == 0
    payload = json.loads(out_json)
    reports = payload if isinstance(payload, list) else [payload]
    assert all(r["holds"] for r in reports)
    assert out_text.count("HOLDS") == len(reports)
    for r in reports:
        assert set(r) == {"identity_name", "parameters", "holds", "lhs", "rhs", "first_mismatch", "elapsed_ms"}


def test_json_is_deterministic_modulo_elapsed(capsys):
    argv = ["verify", "q-box", "--rows", "2", "--cols", "2", "--json"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    da, db = json.loads(a), json.loads(b)
    da.pop("elapsed_ms"), db.pop("elapsed_ms")
    assert json.dumps(da, sort_keys=True) == json.dumps(db, sort_keys=True)


def test_report_json_roundtrips_series(capsys):
    _, out, _ = run(capsys, "verify", "macmahon", "--degree", "4", "--json")
    data = json.loads(out)
    assert QSeries.from_json(data["lhs"]) == QSeries.from_json(data["rhs"])


def test_expand_schur(capsys):
    code, out, _ = run(capsys, "expand", "schur", "--partition", "2,1", "--vars", "2")
    assert code == 0
    assert out.strip() == "x1*x2^2 + x1^2*x2"
    _, out, _ = run(capsys, "expand", "schur", "--partition", "2,1", "--vars", "2", "--json")
    assert MultiPoly.from_json(json.loads(out)) == MultiPoly(2, {(2, 1): 1, (1, 2): 1})


def test_expand_series_variants(capsys):
    _, out, _ = run(capsys, "expand", "series", "macmahon", "--degree", "3", "--json")
    assert json.loads(out)["coeffs"] == ["1", "1", "3", "6"]
    _, out, _ = run(capsys, "expand", "series", "q-box", "--rows", "1", "--cols", "1", "--json")
    assert json.loads(out) == {"order": 2, "coeffs": ["1", "0", "-1"]}


def test_enumerate_chains(capsys):
    code, out, _ = run(capsys, "enumerate", "chains", "--from", "1", "--steps", "2", "--json")
    assert code == 0
    assert sorted(c["slices"] for c in json.loads(out)) == [["1", "-", "-"], ["1", "1", "-"]]
    _, out, _ = run(capsys, "enumerate", "chains", "--from", "2,1", "--steps", "1")
    assert "0 chain(s)" in out
    _, out, _ = run(capsys, "enumerate", "chains", "--from", "2,1", "--steps", "3", "--weight-cap", "4")
    assert "(weight 4)" in out and "(weight 5)" not in out


def test_enumerate_hpp_stats(capsys):
    code, out, _ = run(capsys, "enumerate", "hpp-stats", "--from", "5,3,1", "--steps", "4", "--json")
    assert code == 0
    rows = json.loads(out)
    figure = {"hpp": {"rows": [[5], [4, 3], [3, 2, 1], [2]]}, "weight": 20, "height": 4}
    assert figure in rows
    for r in rows:
        pi = HalfPlanePartition.from_json(r["hpp"])
        assert (pi.weight, pi.height) == (r["weight"], r["height"])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cauchy_vertex", "verify", "limit", "--degree", "4"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "HOLDS" in proc.stdout


def test_failed_identity_exits_1(capsys, monkeypatch):
    from cauchy_vertex import verify as V

    real = V.macmahon_product

    def perturbed(d):
        s = real(d)
        return QSeries(s.order, [c + (n == 2) for n, c in enumerate(s.coeffs)])

    monkeypatch.setattr(V, "macmahon_product", perturbed)
    code, out, _ = run(capsys, "verify", "macmahon", "--degree", "4")
    assert code == 1
    assert "FAILS" in out and "'degree': 2" in out
