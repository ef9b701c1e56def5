import io
import json
import subprocess
import sys

import pytest

from isomf.cli import run_command


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("argv, expected", [
    (["gfp", "--n", "3", "--symbolic"], '{"poly":"t1^3 + 2*t1*t2 + t3"}'),
    (["recover", "--values", "1,2,3,4,5"], '{"params":["2","-1","0","0"],"degree":2}'),
    (["period", "--t", "1,1", "--mod", "2"], '{"preperiod":0,"period":3}'),
    (["gfp", "--k", "2", "--n", "3", "--symbolic"], '{"poly":"t1^3 + 2*t1*t2"}'),
    (["glp", "--n", "2", "--k", "2", "--symbolic"], '{"poly":"t1^2 + 2*t2"}'),
    (["global", "--name", "tau", "--n", "36"], '{"value":"9"}'),
    (["hooks", "--t", "1,1", "--n", "2"], '{"hooks":["2","-1"]}'),
    (["schur", "--t", "3,2", "--shape", "2,2"], '{"value":"4"}'),
    (["period", "--t", "-1,-1"], '{"periodic":true,"period":3,"roots_of_unity":true}'),
])
def test_exact_outputs(argv, expected):
    code, out, _ = run(*argv)
    assert code == 0
    assert out.strip() == expected


def test_symbolic_parameters_on_command_line():
    code, out, _ = run("gfp", "--t", "p+1,-p", "--n", "2")
    assert code == 0 and json.loads(out)["values"] == ["1", "p+1", "p^2+p+1"]


def test_negative_values_need_no_equals_sign():
    code, out, _ = run("gfp", "--t", "-1,-1", "--n", "3")
    assert code == 0 and json.loads(out)["values"] == ["1", "-1", "0", "1"]


def test_csv_and_plain():
    code, out, _ = run("--format", "csv", "gfp", "--t", "1,1", "--n", "3")
    assert code == 0 and out == "n,value\n0,1\n1,1\n2,2\n3,3\n"
    code, out, _ = run("recover", "--values", "1,3,8", "--format", "plain")
    assert code == 0 and out.strip() == "3 -1"


def test_mf_operands(tmp_path):
    code, out, _ = run("convolve", "tau", "sigma_1", "--horizon", "4")
    d = json.loads(out)
    assert code == 0 and d["params"] == ["p+3", "-3*p-3", "3*p+1", "-p"] and d["valence"] == [4, 0]
    path = tmp_path / "f.json"
    path.write_text(d and json.dumps(d))
    code, out, _ = run("invert", f"@{path}")
    assert code == 0 and json.loads(out)["structure"] == "finite-values"
    code, out, _ = run("classify", "v=1,1,2,3,5")
    assert code == 0 and json.loads(out)["type"] == 2
    code, out, _ = run("catalog", "--name", "phi", "--p", "3", "--horizon", "3")
    assert json.loads(out)["values"] == ["1", "2", "6", "18"]


def test_norm_and_root_commands():
    code, out, _ = run("norm", "t=1,1", "--horizon", "8")
    assert code == 0 and json.loads(out)["values"] == ["1", "3", "8", "21", "55"]
    code, out, _ = run("root", "zeta", "--p", "2", "--horizon", "4", "--q", "1/2")
    assert json.loads(out)["values"] == ["1", "1/2", "3/8", "5/16", "35/128"]
    code, out, _ = run("root", "sigma_1", "--p", "2", "--horizon", "10", "--roundtrip", "5")
    assert code == 0 and json.loads(out)["pass"] is True


def test_identity_checks():
    code, out, _ = run("identity", "--check", "br-product", "--t", "1,1", "--r", "2", "--s", "3")
    assert code == 0 and json.loads(out)["pass"] is True
    code, out, _ = run("identity", "--check", "mccarthy", "--operand", "tau", "--p", "2")
    assert code == 0 and json.loads(out)["notes"]["u"][:2] == [1, 3]
    code, out, _ = run("identity", "--check", "mccarthy", "--t", "1,-1")
    notes = json.loads(out)["notes"]
    assert code == 0 and notes["F2_zero"] is True and notes["degree_one"] is False
    code, _, _ = run("identity", "--check", "hook-br", "--t", "1,1")
    assert code == 2


@pytest.mark.parametrize("argv", [
    ["identity", "--suite", name] for name in
    ("gfp-table", "recoveries", "core-product", "busche-ramanujan", "wip", "duality",
     "negative-hooks", "global")
] + [["norm", "--suite"], ["root", "--suite"], ["period", "--suite"]])
def test_suites_exit_zero(argv):
    code, out, _ = run(*argv)
    assert code == 0 and json.loads(out)["pass"] is True


def test_failing_check_exits_one():
    # a degree-2 core whose b-sequence is not geometric still passes; a wrong
    # shape in a binomial check is a usage error, but a failed identity is 1
    code, out, _ = run("identity", "--check", "totient", "--t", "2,3", "--n", "6")
    assert code == 0
    from isomf import cli

    original = cli._CHECKS["binomial"]
    cli._CHECKS["binomial"] = lambda a: _failing_report()
    try:
        code, out, _ = run("identity", "--check", "binomial", "--t", "1,1", "--n", "3")
    finally:
        cli._CHECKS["binomial"] = original
    assert code == 1 and json.loads(out)["witness"] == {"n": "3"}


def _failing_report():
    from isomf.report import CheckReport

    rep = CheckReport("demo", "one case")
    rep.record(False, n=3)
    return rep


def test_inconsistent_json_is_rejected(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"horizon": 3, "values": ["1", "1", "2", "3"], "params": ["1", "5", "0"],
                                "structure": "finite-params"}))
    code, _, err = run("invert", f"@{path}")
    assert code == 2 and "recursion" in err


def test_usage_errors():
    assert run("bogus")[0] == 2
    assert run("gfp")[0] == 2
    assert run("recover", "--values", "2,1")[0] == 2
    assert run("recover", "--values", "1,x")[0] == 2
    assert run("catalog", "--name", "nope")[0] == 2
    code, _, err = run("gfp", "--n", "3")
    assert code == 2 and "--t" in err


def test_output_is_deterministic():
    assert run("convolve", "tau", "phi", "--horizon", "6") == run("convolve", "tau", "phi", "--horizon", "6")


def test_environment_horizon(monkeypatch):
    monkeypatch.setenv("ISOMF_HORIZON", "3")
    code, out, _ = run("catalog", "--name", "tau")
    assert json.loads(out)["horizon"] == 3


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "isomf", "recover", "--values", "1,2,3,4,5"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == '{"params":["2","-1","0","0"],"degree":2}'
