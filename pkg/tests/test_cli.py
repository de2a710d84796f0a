import json
import subprocess
import sys

import pytest

from artinlef.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_lefschetz_counterexample(capsys):
    code, rep = run_json(capsys, "lefschetz", "--char", "3", "--ideal", "x^3,y^3,z^2", "--ell", "x+y+z")
    assert code == 0
    assert set(rep) == {"input", "result", "warnings", "version"}
    res = rep["result"]
    assert res["hilbert"] == [1, 3, 5, 5, 3, 1]
    v = res["verdict"]
    assert v["wl"] is False and v["decisive"] is True
    assert {"i": 1, "k": 3, "rank": 0, "full": False} in v["strong_ranks"]


def test_hf_example(capsys):
    code, rep = run_json(capsys, "hf", "--char", "0", "--dual", "X^4+Y^2*Z^2")
    assert code == 0
    assert rep["result"]["hilbert"] == [1, 3, 4, 3, 1]
    assert rep["result"]["coverage"] == "SL-char0-Thm3.3"


def test_sequences_enumerate(capsys):
    code, rep = run_json(capsys, "sequences", "enumerate", "--max-sperner", "6", "--max-socle", "5")
    assert code == 0
    seqs = rep["result"]["sequences"]
    assert len(seqs) == 10
    assert [1, 3, 6, 6, 3, 1] in seqs


def test_text_output(capsys):
    code, out, _ = run(capsys, "hf", "--dual", "X^4+Y^2*Z^2")
    assert code == 0
    assert "(1, 3, 4, 3, 1)" in out or "1,3,4,3,1" in out.replace(" ", "")


def test_json_is_byte_identical(capsys):
    args = ("lefschetz", "--dual", "X^3*Y+Y^2*Z^2+X*Z^3", "--ell", "generic", "--seed", "3", "--format", "json")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b


@pytest.mark.parametrize("argv,code", [
    (("hf", "--dual", "X^4+Q"), 2),
    (("hf",), 2),
    (("hf", "--dual", "X^4", "--ideal", "x^5"), 2),
    (("nonsense",), 2),
    (("scheme-probe", "--dual", "X^3+Y^3+Z^3+X*Y*Z"), 3),
    (("hessian", "--char", "3", "--dual", "X^4+Y^4+Z^4", "--degree", "1", "--point", "1,1,1"), 3),
    (("hf", "--ideal", "x^2,y^2"), 3),
    (("hf", "--char", "4", "--dual", "X^2"), 2),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_jordan_and_colon(capsys):
    code, rep = run_json(capsys, "jordan", "--dual", "X^4+Y^2*Z^2", "--ell", "x+y+z")
    assert code == 0
    assert rep["result"]["jordan_type"] == [5, 3, 3, 1]
    code, rep = run_json(capsys, "colon", "--dual", "X^4+Y^2*Z^2", "--omega", "x")
    assert code == 0
    text = json.dumps(rep["result"])
    assert "x^3" in text.lower()


def test_hessian_command(capsys):
    code, rep = run_json(capsys, "hessian", "--dual", "X^4+Y^2*Z^2", "--degree", "1", "--point", "1,1,1")
    assert code == 0
    assert "-3/8" in json.dumps(rep["result"])


def test_scheme_probe_command(capsys):
    code, rep = run_json(capsys, "scheme-probe", "--dual", "X^5+Y^5+Z^5")
    assert code == 0
    assert rep["result"]["agrees_with_ann_in_middle_zone"] is True


def test_sequences_check_and_classify(capsys):
    code, rep = run_json(capsys, "sequences", "check", "--seq", "1,3,5,5,3,1")
    assert code == 0
    code, rep = run_json(capsys, "sequences", "classify", "--seq", "1,3,5,6,6,5,3,1")
    assert code == 0
    assert "SL-char0-Thm3.8" in json.dumps(rep["result"])


def test_paper_examples_exit_zero(capsys):
    code, out, _ = run(capsys, "paper-examples")
    assert code == 0
    assert "FAIL" not in out
    assert out.count("PASS") >= 4


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "artinlef.cli", "sequences", "check", "--seq", "1,3,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
