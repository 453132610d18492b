import json

import pytest

from clusterdaha import cli, macdonald_g1
from clusterdaha.algebra import RatFunc, VTX
from clusterdaha.cluster.traces import L_B
from clusterdaha.export import poly_to_json, torus_to_json
from clusterdaha.macdonald_g2 import phi_closed


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_g1_l1(capsys):
    code, out, _ = run(capsys, "g1", "--l", "1", "--method", "pieri")
    assert code == 0
    assert json.loads(out) == {"vars": ["x"], "terms": [{"exp": [1], "coeff": "1"}, {"exp": [-1], "coeff": "1"}]}


def test_g1_l0(capsys):
    _, out, _ = run(capsys, "g1", "--l", "0")
    assert json.loads(out)["terms"] == [{"exp": [0], "coeff": "1"}]


@pytest.mark.parametrize("method", ["pieri", "explicit", "reconstruct"])
def test_g1_methods_agree_with_check(capsys, method):
    code, out, err = run(capsys, "g1", "--l", "4", "--method", method, "--check")
    assert code == 0 and err == ""


def test_g1_mismatch_exits_nonzero(capsys, monkeypatch):
    monkeypatch.setattr(macdonald_g1, "macdonald_P_explicit", lambda l: RatFunc.const(VTX, 7))
    code, _, err = run(capsys, "g1", "--l", "2", "--check")
    assert code == 1
    assert "mismatch" in err


def test_output_is_byte_stable(capsys):
    _, a, _ = run(capsys, "g2", "--l", "2,1,1")
    _, b, _ = run(capsys, "g2", "--l", "2,1,1")
    assert a == b
    assert a.endswith("\n")
    assert a.startswith('{"vars":["x12","x13","x23"],"terms":[')


def test_g2_default_is_phi(capsys):
    _, out, _ = run(capsys, "g2", "--l", "1,1,0", "--method", "polytope", "--norm", "X7")
    assert json.loads(out) == poly_to_json(phi_closed((1, 1, 0)), ["x12", "x13", "x23"])


def test_g2_methods_cross_check(capsys):
    for norm in ("X7", "AS"):
        code, _, err = run(capsys, "g2", "--l", "2,1,1", "--norm", norm, "--check")
        assert code == 0, err


def test_g2_norms_agree_across_methods(capsys):
    outs = {m: run(capsys, "g2", "--l", "2,1,1", "--method", m, "--norm", "AS")[1] for m in ("pieri", "polytope", "mutation")}
    assert len(set(outs.values())) == 1


def test_g2_non_admissible(capsys):
    code, out, err = run(capsys, "g2", "--l", "1,0,0")
    assert code == 0
    assert json.loads(out) == {"vars": ["x12", "x13", "x23"], "terms": []}
    assert "not admissible" in err


@pytest.mark.parametrize("argv", [
    ["g1", "--l", "-1"],
    ["g1", "--l", "x"],
    ["g1"],
    ["g1", "--l", "1", "--bogus"],
    ["g2", "--l", "1,2"],
    ["quiver", "--chart", "x7", "--word", "zz"],
    ["quiver", "--chart", "kronecker", "--word", "m5"],
    ["quiver", "--chart", "x7", "--trace", "nope"],
    ["quiver", "--chart", "kronecker", "--trace", "A1"],
    ["verify", "--suite", "nope"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 2


def test_quiver_dot(capsys):
    code, out, _ = run(capsys, "quiver", "--chart", "x7", "--dot")
    assert code == 0
    assert out.startswith("digraph x7 {")
    assert out.count("->") == 12


def test_quiver_markov_mutation(capsys):
    _, out, _ = run(capsys, "quiver", "--chart", "markov", "--word", "m1")
    doc = json.loads(out)
    assert doc["eps"] == [[0, 2, -2], [-2, 0, 2], [2, -2, 0]]


def test_quiver_gamma_on_A1(capsys):
    code, out, _ = run(capsys, "quiver", "--chart", "x7", "--word", "g", "--trace", "A1")
    assert code == 0
    assert json.loads(out) == torus_to_json(L_B(2, 3))


def test_quiver_inverse_word(capsys):
    _, out, _ = run(capsys, "quiver", "--chart", "x7", "--word", "g g^-1", "--trace", "B12")
    assert json.loads(out) == torus_to_json(L_B(1, 2))


def test_quiver_traces_stay_laurent(capsys):
    code, out, _ = run(capsys, "quiver", "--chart", "markov", "--word", "m1 m2 m3 m1 m2", "--trace", "10")
    assert code == 0
    assert json.loads(out)["terms"]


def test_verify_suite_summary(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "qspecial", "--bound", "5")
    lines = out.strip().splitlines()
    assert code == 0
    assert all(line.startswith("PASS") for line in lines[:-1])
    summary = json.loads(lines[-1])
    assert summary["ok"] is True and summary["suites"][0]["failed"] == 0


def test_verify_failure_exits_one(capsys, monkeypatch):
    from clusterdaha import verify
    monkeypatch.setattr(verify, "whittaker_pieri", lambda l: l < 3)
    code, out, _ = run(capsys, "verify", "--suite", "qspecial", "--bound", "5")
    assert code == 1
    assert "FAIL [qspecial]" in out
