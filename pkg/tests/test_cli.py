import json

import pytest

from primdiv.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_seq(capsys):
    code, out, _ = run(capsys, "seq", "--kind", "U", "--seed-a", "x", "--seed-b", "1", "--max-n", "5")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "U_5 = x^2 - 3*x + 1"
    code, out, _ = run(capsys, "seq", "--kind", "L", "--seed-a", "x", "--seed-b", "1", "--n", "4")
    assert out.strip() == "L_4 = x^3 - 2*x"


def test_primitive_part(capsys):
    code, out, _ = run(capsys, "primitive-part", "--kind", "F", "--seed-a", "x+1", "--seed-b", "x", "--n", "3")
    d = json.loads(out)
    assert code == EXIT_OK and d["primitive_part"] == "x^2 + x + 1/3" and d["has_primitive_divisor"]
    code, out, _ = run(capsys, "primitive-part", "--kind", "U", "--seed-a", "x", "--seed-b", "x-1", "--n", "3")
    assert code == EXIT_FAIL and not json.loads(out)["has_primitive_divisor"]
    code, _, err = run(capsys, "primitive-part", "--char", "5", "--seed-a", "x+1", "--seed-b", "x", "--n", "5")
    assert code == EXIT_USAGE and "error" in err


def test_strongdiv(capsys):
    code, out, _ = run(capsys, "strongdiv", "--seed-a", "x+1", "--seed-b", "x", "--m", "4", "--n", "6")
    assert code == EXIT_OK and json.loads(out)["gcd"] == "x + 1/2"
    code, out, _ = run(capsys, "strongdiv", "--kind", "S", "--seed-a", "x+1", "--seed-b", "x", "--max-n", "4")
    assert code == EXIT_FAIL and {"m": 1, "n": 2} in json.loads(out)["failures"]


def test_resultant_and_cyclotomic(capsys):
    code, out, _ = run(capsys, "resultant", "--lemma", "PMN", "--m", "9", "--n", "9")
    assert code == EXIT_OK and json.loads(out)["resultant"] in (1, -1)
    code, _, _ = run(capsys, "resultant", "--lemma", "RES2", "--m", "2", "--n", "4")
    assert code == EXIT_USAGE
    code, out, _ = run(capsys, "cyclotomic", "--n", "6")
    assert out.strip() == "X^2 - X*Y + Y^2"
    code, out, _ = run(capsys, "cyclotomic", "--n", "9", "--kind", "U", "--seed-a", "x", "--seed-b", "1")
    assert out.strip() == "x^3 - 6*x^2 + 9*x - 1"


def test_factor(capsys):
    code, out, _ = run(capsys, "factor", "--char", "5", "x^5 + 1")
    assert code == EXIT_OK and out.strip() == "1 * (x + 1)^5"
    code, _, _ = run(capsys, "factor", "x^2 + 1")
    assert code == EXIT_USAGE


def test_verify_and_out_file(capsys, tmp_path):
    target = tmp_path / "r.json"
    argv = ["verify", "frobenius", "--char", "3", "--trials", "2", "--max-n", "12", "--out", str(target)]
    assert main(argv) == EXIT_OK
    first = target.read_text()
    assert main(argv) == EXIT_OK
    assert target.read_text() == first
    assert json.loads(first)["summary"]["fail"] == 0
    code, _, _ = run(capsys, "verify", "valuation", "--char", "0")
    assert code == EXIT_USAGE


@pytest.mark.parametrize("argv", [[], ["bogus"], ["seq", "--seed-a", "x+", "--seed-b", "x"],
                                  ["seq", "--seed-a", "x9", "--seed-b", "x"], ["seq"]])
def test_usage_errors(capsys, argv):
    assert main(argv) == EXIT_USAGE
