import json
import subprocess
import sys

import pytest

from hstarcodes.cli import run


@pytest.fixture
def files(tmp_path):
    d2 = tmp_path / "d2.json"
    d2.write_text(json.dumps({"dim": 2, "vertices": [[0, 0], [2, 0], [0, 2]]}))
    code = tmp_path / "pair.txt"
    code.write_text("1 0 1 1 2 0 2 2\n0 1 1 2 0 2 2 1\n")
    return tmp_path, d2, code


def call(capsys, *argv):
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_hstar(capsys, files):
    _, d2, _ = files
    code, out, _ = call(capsys, "hstar", d2)
    assert code == 0
    obj = json.loads(out)
    assert obj["coeffs"] == [1, 3, 0] and obj["agreement"] is True


def test_param_check(capsys):
    code, out, _ = call(capsys, "param-check", "--p", 3, "--r", 2, "--k", 3, "--d", 7)
    assert code == 0 and json.loads(out)["holds"] is True
    code, out, _ = call(capsys, "param-check", "--p", 3, "--r", 2, "--k", 3, "--d", 6,
                        "--format", "text")
    assert out.strip() == "false"


def test_sweep(capsys):
    code, out, _ = call(capsys, "bernoulli-sweep", "--p", 3, "--r", 2)
    obj = json.loads(out)
    assert code == 0 and obj["odd_zeros"] == [] and len(obj["characters"]) == 8


def test_code_pipeline(capsys, files):
    tmp, _, pair = files
    code, out, _ = call(capsys, "decompose", "--p", 3, pair)
    obj = json.loads(out)
    assert code == 0 and obj["pair"]["s"] == 1 and len(obj["bonisoli"]) == 2
    simplex = tmp / "s.json"
    assert run(["simplex-from-code", "--p", "3", str(pair), "--output", str(simplex)]) == 0
    assert json.loads(simplex.read_text())["hstar"] == [1, 0, 0, 8, 0, 0, 0, 0]
    code, out, _ = call(capsys, "code-from-simplex", simplex)
    obj = json.loads(out)
    assert code == 0 and (obj["p"], obj["k"], obj["r"]) == (3, 3, 2)


def test_group_pipeline(capsys, files):
    tmp, d2, _ = files
    code, out, _ = call(capsys, "lambda", d2)
    assert json.loads(out)["order"] == 4
    g = tmp / "g.json"
    g.write_text(out)
    code, out, _ = call(capsys, "simplex-from-group", g)
    assert code == 0 and json.loads(out)["dim"] == 2


def test_decompose_reports_pair_failure(capsys, tmp_path):
    a1 = tmp_path / "a1.json"
    a1.write_text(json.dumps({"p": 3, "n": 4, "generators": [[1, 0, 1, 1], [0, 1, 1, 2]]}))
    code, out, _ = call(capsys, "decompose", a1)
    obj = json.loads(out)
    assert code == 0 and obj["pair"]["error"]["type"] == "NotConstantAge"


def test_exit_codes(capsys, files):
    _, d2, _ = files
    code, _, err = call(capsys, "bernoulli-sweep", "--p", 2, "--r", 1)
    assert code == 1
    assert json.loads(err)["error"]["type"] == "EvenPrime"
    code, _, err = call(capsys, "hstar", d2, "--caps", '{"volume": 3}')
    assert code == 2 and json.loads(err)["error"]["type"] == "ResourceLimit"
    code, _, err = call(capsys, "no-such-command")
    assert code == 64 and "usage" in err
    code, _, _ = call(capsys, "simplex-code", "--p", 3)
    assert code == 64
    code, _, err = call(capsys, "hstar", "missing.json")
    assert code == 1 and "precondition" in json.loads(err)["error"]


def test_env_caps(capsys, files, monkeypatch):
    _, d2, _ = files
    monkeypatch.setenv("HSTAR_CAPS", '{"volume": 3}')
    assert call(capsys, "hstar", d2)[0] == 2


def test_deterministic_output(files):
    _, d2, pair = files
    cmds = [["hstar", str(d2)], ["decompose", "--p", "3", str(pair)],
            ["bernoulli-sweep", "--p", "5", "--r", "2"]]
    for argv in cmds:
        runs = [subprocess.run([sys.executable, "-m", "hstarcodes", *argv],
                               capture_output=True, check=True).stdout for _ in range(2)]
        assert runs[0] == runs[1]


def test_verify_all(capsys):
    code, out, _ = call(capsys, "verify-all", "--scale", "small")
    obj = json.loads(out)
    assert [r["criterion"] for r in obj["results"]] == list(range(1, 13))
    assert code == (0 if obj["passed"] else 1)
    assert "seconds" not in obj["results"][0]
