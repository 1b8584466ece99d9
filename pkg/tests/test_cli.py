import json

from springerec.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_ec(capsys):
    code, out, _ = run(capsys, "ec", "--type", "C", "--partition", "6,4,2")
    assert code == 0 and out == "142"
    code, out, _ = run(capsys, "ec", "--type", "A", "--partition", "1,1,1,1")
    assert code == 0 and out == "24"


def test_ec_trace(capsys):
    code, out, _ = run(capsys, "ec", "--type", "C", "--partition", "6,4,2", "--trace")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "EC(6,4,2)"
    assert lines[-2] == " = 42*EC(2) + 50*EC(1,1)"
    assert lines[-1] == " = 142"


def test_ec_json_roundtrip(capsys):
    code, out, _ = run(capsys, "--format", "json", "ec", "--type", "C", "--partition", "6,4,2")
    assert code == 0
    data = json.loads(out)
    assert data == {
        "command": "ec",
        "input": {"type": "C", "partition": [6, 4, 2]},
        "result": {"euler_characteristic": 142},
    }


def test_mult(capsys):
    code, out, _ = run(capsys, "mult", "--type", "B", "--partition", "3,1,1", "--over", "A")
    assert code == 0
    assert out.splitlines() == ["++\t3", "+-\t1"]


def test_restrict(capsys):
    code, out, _ = run(capsys, "restrict", "--type", "C", "--partition", "6,4,2")
    assert code == 0
    assert out == "TSp(6,4,2)|W' = TSp(4,4,2) + TSp(6,2,2) + TSp(6,4)"


def test_betti_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "betti", "--type", "C", "--partition", "2,2")
    assert code == 0
    data = json.loads(out)
    assert data["result"]["degrees"] == {"0": {"+": 1}, "2": {"+": 2, "-": 1}}


def test_betti_out_of_scope_exits_2(capsys):
    code, out, err = run(capsys, "betti", "--type", "C", "--partition", "6,4,2")
    assert code == 2
    assert out == ""  # no partial output
    assert "4, 4, 2" in err


def test_tworow(capsys):
    code, out, _ = run(capsys, "tworow", "--type", "C", "--i", "2", "--j", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("\t") == ["degree", "Id", "sgn"]
    assert lines[1].split("\t") == ["0", "1", "0"]
    assert lines[2].split("\t") == ["2", "2", "1"]


def test_exc(capsys):
    code, out, _ = run(capsys, "exc", "--group", "E6", "--orbit", "A_0")
    assert code == 0 and out == "51840"
    code, out, _ = run(capsys, "exc", "--group", "G2", "--orbit", "G_2(a_1)")
    assert code == 0
    assert out.splitlines() == ["3\t3", "21\t1", "111\t0", "EC = 5"]


def test_exc_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "exc", "--group", "E7", "--orbit", "A_4+A_1")
    data = json.loads(out)
    assert code == 0
    assert data["result"]["rows"] == [
        {"phi": "2", "mult": 7308},
        {"phi": "11", "mult": 4788},
    ]
    assert data["result"]["euler"] == 7308 + 4788


def test_usage_errors_exit_1(capsys):
    assert run(capsys, "ec", "--type", "C", "--partition", "3,1")[0] == 1  # invalid label
    assert run(capsys, "ec", "--type", "C")[0] == 1  # missing flag
    assert run(capsys, "exc", "--group", "G2", "--orbit", "nope")[0] == 1
    assert run(capsys, "nonsense")[0] == 1


def test_very_even_sign_echoed(capsys):
    code, out, _ = run(
        capsys, "--format", "json", "ec", "--type", "D", "--partition", "2,2", "--sign", "+"
    )
    data = json.loads(out)
    assert code == 0
    assert data["input"]["sign"] == "+"
    assert data["result"]["euler_characteristic"] == 2


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "exc")
    assert code == 0
    assert out.splitlines()[-1] == "PASS"
    code, out, _ = run(capsys, "verify", "--suite", "symfunc", "--max-n", "4")
    assert code == 0


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0
