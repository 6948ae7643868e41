import json
import subprocess
import sys
from pathlib import Path

import pytest

from spinmcg.cli import run
from spinmcg.torelli import TackSequence, factorize

GOLDEN = Path(__file__).parent / "golden"


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, name, code", [
    (["table1"], "table1.txt", 1),
    (["table1", "--corrected"], "table1_corrected.txt", 0),
    (["coset-graph"], "coset_graph.txt", 0),
    (["certify", "-g", "3"], "certify_g3.txt", 0),
])
def test_golden(capsys, argv, name, code):
    got_code, out, _ = call(capsys, *argv)
    assert got_code == code
    assert out == (GOLDEN / name).read_text()


def test_eval(capsys):
    code, out, _ = call(capsys, "eval", "-g", "1", "C1")
    assert code == 0
    # T_{c1}(y1) = y1 + x1
    assert out.split() == ["1", "1", "0", "1"]
    code, out, _ = call(capsys, "eval", "-g", "2", "--json", "C1 C2")
    js = json.loads(out)
    assert len(js["matrix"]) == 4 and js["word"] == "C1 C2"


def test_member(capsys):
    assert call(capsys, "member", "-g", "3", "T1")[0] == 0
    code, out, _ = call(capsys, "member", "-g", "2", "C4")
    assert code == 1 and "x2" in out
    code, out, _ = call(capsys, "member", "-g", "2", "--form", "[0,0,1,1]", "C1")
    assert code == 1


def test_extendable(capsys):
    code, out, _ = call(capsys, "extendable", "-g", "3", "X4 D1")
    assert code == 0 and out.startswith("extendable")
    assert call(capsys, "extendable", "-g", "3", "C4")[0] == 1
    assert call(capsys, "extendable", "-g", "1", "C1")[0] == 2


def test_witness(capsys):
    code, out, _ = call(capsys, "witness", "-g", "2")
    assert code == 0 and out.startswith("z = x2")
    assert call(capsys, "witness", "-g", "1")[0] == 1


def test_lambda(capsys):
    code, out, _ = call(capsys, "lambda", "-g", "2", "x2+y2")
    assert code == 0 and out.strip() == "x2+y2"
    code, out, _ = call(capsys, "lambda", "-g", "2", "--full", "x2+y2")
    assert out.splitlines()[1] == "[] x1+x2 -> x1+y2"
    assert call(capsys, "lambda", "-g", "2", "x2")[0] == 2


def test_rewrite_and_verify(capsys, tmp_path):
    code, out, _ = call(capsys, "rewrite", "-g", "3", "11110000")
    assert code == 0 and "verified" in out
    code, out, _ = call(capsys, "rewrite", "-g", "4", "--json", "[1,2,4,6]")
    data = json.loads(out)
    f = tmp_path / "cert.json"
    f.write_text(json.dumps(data))
    assert call(capsys, "verify-cert", str(f))[0] == 0
    data["root"]["tacks"] = "1111000000"
    f.write_text(json.dumps(data))
    code, out, _ = call(capsys, "verify-cert", str(f))
    assert code == 1 and "FAIL" in out


def test_verify_cert_bad_input(capsys, tmp_path):
    f = tmp_path / "bad.json"
    f.write_text("{}")
    assert call(capsys, "verify-cert", str(f))[0] == 2
    assert call(capsys, "verify-cert", str(tmp_path / "missing.json"))[0] == 2


def test_verify_cert_matches_library(capsys, tmp_path):
    cert = factorize(TackSequence.parse("[1,2,3,5,7,9]", 5))
    f = tmp_path / "c.json"
    f.write_text(json.dumps(cert.to_json()))
    code, out, _ = call(capsys, "verify-cert", "--json", str(f))
    assert code == 0 and json.loads(out)["ok"]


def test_orders(capsys):
    code, out, _ = call(capsys, "orders", "-g", "2", "--json")
    assert code == 0
    assert json.loads(out) == {"sp": 720, "generated": 120, "odd_forms": 6, "sp_over_odd_forms": 120}
    assert call(capsys, "orders", "-g", "4")[0] == 2


def test_arf_and_catalog(capsys):
    assert call(capsys, "arf", "1", "9")[1].strip() == "1"
    assert call(capsys, "arf", "1", "16")[0] == 2
    code, out, _ = call(capsys, "catalog", "cp2-Kd(3)")
    assert code == 0 and "arf=1" in out
    code, out, _ = call(capsys, "catalog", "--json", "cp2-K3-sum(3)")
    assert json.loads(out)["genus"] == 3
    assert call(capsys, "catalog", "torus")[0] == 2


@pytest.mark.parametrize("argv", [
    ["eval", "-g", "2", "C1 )"],
    ["eval", "-g", "2", "C9"],
    ["eval", "C1"],
    ["rewrite", "-g", "3", "11100000"],
    ["certify", "-g", "9"],
    ["nosuchcommand"],
])
def test_usage_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "spinmcg", "arf", "1", "9"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "1"
