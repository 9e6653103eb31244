"""Command-line interface: goldens, JSON schema, exit codes."""

import json

import pytest

from modgb.cli import main

LINEAR = "ring QQ[x,y,z] degrevlex;\nideal(x + 2*z, x + 2*y);\n"
DELTONE = "ring QQ[x,y,z] degrevlex;\nideal(x^2 - y, x*y + z + 1, z^2 + x);\n"
MANYBAD = "ring QQ[x,y,z] degrevlex;\nideal(%s);\n"
DOUBLING = "ring QQ[x,y,z] lex;\nideal(2*x - y, 2*y - z);\n"


@pytest.fixture()
def write(tmp_path):
    def _write(text):
        f = tmp_path / "in.txt"
        f.write_text(text)
        return str(f)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gb_golden(write, capsys):
    code, out, _ = run(capsys, "gb", write(LINEAR))
    assert code == 0
    assert out.strip() == "[x + 2*z, y - z]"


def test_gb_with_order_flag(write, capsys):
    code, out, _ = run(capsys, "gb", "--order", "lex", write(DOUBLING))
    assert code == 0
    assert out.strip() == "[x - 1/4*z, y - 1/2*z]"


def test_universal_denominator_golden(write, capsys):
    code, out, _ = run(capsys, "universal-denominator", write(DELTONE))
    assert code == 0
    assert out.strip() == "28 = 2^2 * 7"


def test_json_output(write, capsys):
    code, out, _ = run(capsys, "--json", "gb", write(LINEAR))
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["basis"] == ["x + 2*z", "y - z"]
    code, out, _ = run(capsys, "--json", "universal-denominator", write(DELTONE))
    doc = json.loads(out)
    assert doc == {"schema": 1, "delta": "28", "factorization": "2^2 * 7"}


def test_nf(write, capsys):
    code, out, _ = run(capsys, "nf", "--poly", "x + 2*y", write(LINEAR))
    assert code == 0
    assert out.strip() == "0"
    code, out, _ = run(capsys, "nf", "--poly", "x + 2*y + 2*z", write(LINEAR))
    assert out.strip() == "2*z"


def test_classify(write, capsys):
    code, out, _ = run(
        capsys, "--json", "classify", "--primes", "2,5", write(DOUBLING)
    )
    assert code == 0
    doc = json.loads(out)
    by_prime = {r["prime"]: r for r in doc["primes"]}
    assert by_prime[2]["status"] == "SIGMA_BAD"
    assert by_prime[5]["status"] == "SIGMA_GOOD"
    assert by_prime[5]["pauer"] == "PAUER_LUCKY"


def test_strong_gb(write, capsys):
    code, out, _ = run(capsys, "strong-gb", write(DOUBLING))
    assert code == 0
    assert "lcm of leading coefficients: 2" in out


def test_rad_check(write, capsys):
    code, out, _ = run(capsys, "--json", "rad-check", write(DOUBLING))
    assert code == 0
    doc = json.loads(out)
    assert doc == {"schema": 1, "rad_den": "2", "rad_lcm": "2", "equal": True}


def test_detect_bad(write, capsys):
    text = "ring QQ[x,y,z] degrevlex;\nideal(2*x - y, 2*y - z);\n"
    code, out, _ = run(
        capsys,
        "--json",
        "detect-bad",
        "--tau",
        "lex",
        "--primes",
        "3,5",
        write(text),
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert {r["prime"] for r in doc["primes"]} == {3, 5}
    assert all(r["status"] == "UNDECIDED" for r in doc["primes"])


def test_detect_bad_elimination_orderings(write, capsys):
    text = (
        "ring QQ[x,y,z,w,s,t] degrevlex;\n"
        "ideal(x - t^3, y - s*t^2 + 2*s^2, z - s^2*t + 5, w - s^3 + 7*t);\n"
    )
    code, out, _ = run(
        capsys,
        "--json",
        "detect-bad",
        "--sigma",
        "elim(x,y,z,w)",
        "--tau",
        "elim(s,t)",
        "--primes",
        "2,3,5,7",
        write(text),
    )
    assert code == 0
    doc = json.loads(out)
    status = {r["prime"]: r["status"] for r in doc["primes"]}
    assert status == {
        2: "TAU_BAD_CERTIFIED",
        3: "TAU_BAD_CERTIFIED",
        5: "UNDECIDED",
        7: "TAU_BAD_CERTIFIED",
    }


def test_fan(write, capsys):
    code, out, _ = run(capsys, "fan", write(DELTONE))
    assert code == 0
    assert out.count("cone ") == 12
    assert "universal denominator: 28 = 2^2 * 7" in out


def test_modular_gb(write, capsys):
    code, out, _ = run(
        capsys, "modular-gb", "--order", "lex", "--seed", "7", write(DOUBLING)
    )
    assert code == 0
    assert out.splitlines()[0] == "[x - 1/4*z, y - 1/2*z]"


def test_parse_error_exits_1(write, capsys):
    code, _, err = run(capsys, "gb", write("ring QQ[x lex; ideal(x);"))
    assert code == 1
    assert "error:" in err


def test_missing_file_exits_1(capsys):
    code, _, err = run(capsys, "gb", "/nonexistent/input.txt")
    assert code == 1
    assert "error:" in err


def test_bad_usage_exits_2_and_prints_grammar(capsys):
    code, _, err = run(capsys, "frobnicate", "x")
    assert code == 2
    assert "input file grammar" in err


def test_stdin_input(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(LINEAR))
    code, out, _ = run(capsys, "gb", "-")
    assert code == 0
    assert out.strip() == "[x + 2*z, y - z]"
