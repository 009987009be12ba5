import json
import subprocess
import sys
from functools import partial

import pytest

from nrlambda import bench, cli
from nrlambda.characters import ClassFunction, PowerGroup, character_from_json
from nrlambda.cli import main
from nrlambda.errors import AlgebraError, NotMAS, ParseError, QAlgebraRequired, SizeLimit
from nrlambda.necklace import NeckVec
from nrlambda.series import LambdaSeries
from nrlambda.symrep import MASMatrix

S3 = json.dumps({"kind": "symmetric", "n": 3})
S2 = json.dumps({"kind": "symmetric", "n": 2})
Z6 = json.dumps({"kind": "cyclic", "n": 6})
PERM3 = json.dumps({"values": ["3", "1", "0"]})
SIGN2 = json.dumps({"values": ["1", "-1"]})
ZETA6 = json.dumps({"values": [
    {"m": 6, "coords": ["1", "0"]}, {"m": 6, "coords": ["0", "1"]},
    {"m": 3, "coords": ["0", "1"]}, "-1", {"m": 3, "coords": ["-1", "-1"]},
    {"m": 6, "coords": ["1", "-1"]}]})
Q0 = json.dumps({"k": 2, "entries": [["1", "3"], ["1/3", "-1"]]})


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_exterior_table(capsys):
    code, out, _ = run(capsys, "exterior", "--group", S3, "--char", PERM3, "--max", "3")
    assert code == 0
    assert out.splitlines() == [
        "classes: [1,1,1] [2,1] [3]",
        "lambda^0 = (1, 1, 1)",
        "lambda^1 = (3, 1, 0)",
        "lambda^2 = (3, -1, 0)",
        "lambda^3 = (1, -1, 1)",
    ]


def test_exterior_max_zero(capsys):
    code, out, _ = run(capsys, "exterior", "--group", S3, "--char", PERM3, "--max", "0")
    assert code == 0 and out.splitlines()[1:] == ["lambda^0 = (1, 1, 1)"]


def test_exterior_json_round_trips(capsys):
    code, out, _ = run(capsys, "exterior", "--group", S3, "--char", PERM3, "--max", "3", "--json")
    assert code == 0
    data = json.loads(out)
    G = PowerGroup.from_json(data["group"])
    powers = [character_from_json(G, p) for p in data["powers"]]
    assert powers[2] == [3, -1, 0]
    assert all(isinstance(p, ClassFunction) for p in powers)


@pytest.mark.parametrize("argv", [
    ["exterior", "--group", "{not json", "--char", PERM3],
    ["exterior", "--group", S3, "--char", json.dumps({"values": ["1", "2"]})],
    ["exterior", "--group", S3, "--char", PERM3, "--bogus"],
    ["exterior", "--group", S3, "--char", PERM3, "--order", "0"],
    ["factor", "--group", S3, "--char", PERM3, "--class", "[5]"],
    ["symrep", "--matrix", Q0, "--sigma", "(1 2"],
    ["frobnicate"],
    [],
])
def test_parse_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_ring_error_exits_3(capsys):
    bad = json.dumps({"values": ["1/2", "1", "1"], "ring": "Z"})
    code, _, err = run(capsys, "exterior", "--group", S3, "--char", bad)
    assert code == 3 and err.startswith("IntegralityViolation")
    assert cli.exit_code_for(QAlgebraRequired("x")) == 3


def test_exit_code_table():
    assert cli.exit_code_for(ParseError("x")) == 2
    assert cli.exit_code_for(NotMAS("x")) == 5
    assert cli.exit_code_for(SizeLimit("x")) == 6
    assert cli.exit_code_for(AlgebraError("x")) == 1


def test_factor_examples(capsys):
    code, out, _ = run(capsys, "factor", "--group", S3, "--char", PERM3, "--class", "[3]")
    assert code == 0 and out.strip() == "[3]: (1+t^3)^1"
    code, out, _ = run(capsys, "factor", "--group", S2, "--char", SIGN2, "--class", "1")
    assert code == 0 and out.strip() == "[2]: (1+t)^-1 (1-t^2)^1"


def test_factor_all_classes(capsys):
    code, out, _ = run(capsys, "factor", "--group", S3, "--char", PERM3)
    assert code == 0
    assert out.splitlines() == ["[1,1,1]: (1+t)^3", "[2,1]: (1+t)^1 (1-t^2)^1", "[3]: (1+t^3)^1"]


def test_factor_non_integer_valued(capsys):
    code, out, _ = run(capsys, "factor", "--group", Z6, "--char", ZETA6, "--strict")
    assert code == 4
    code, out, _ = run(capsys, "factor", "--group", Z6, "--char", ZETA6, "--class", "g", "--order", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("note: NotIntegerValued")
    assert lines[1].startswith("g: truncated (")


def test_factor_json_round_trips(capsys):
    code, out, _ = run(capsys, "factor", "--group", S3, "--char", PERM3, "--json")
    data = json.loads(out)
    assert code == 0 and data["integer_valued"]
    row = data["classes"][2]
    assert NeckVec.from_json(row["necklace"]) == NeckVec({3: 1})
    assert row["product"] == "(1+t^3)^1"


def test_symrep_examples(capsys):
    code, out, _ = run(capsys, "symrep", "--matrix", Q0, "--sigma", "(1 2 3 4)")
    assert code == 0 and out.strip() == "chi=0; necklace={4:4}; lambda=(1-t^4)^4"
    code, out, _ = run(capsys, "symrep", "--matrix", Q0, "--sigma", "()", "--n", "2")
    assert code == 0 and out.strip().endswith("lambda=(1+t)^4")
    code, out, _ = run(capsys, "symrep", "--matrix", Q0, "--sigma", "(1 2)(3 4 5)", "--oracle")
    assert code == 0 and out.splitlines()[-1] == "oracle: MATCH"


def test_symrep_errors(capsys):
    bad = json.dumps({"k": 2, "entries": [["1", "2"], ["2", "1"]]})
    assert run(capsys, "symrep", "--matrix", bad, "--sigma", "(1 2)")[0] == 5
    sigma = "(" + " ".join(str(i) for i in range(1, 14)) + ")"
    assert run(capsys, "symrep", "--matrix", Q0, "--sigma", sigma, "--oracle")[0] == 6
    code, out, _ = run(capsys, "symrep", "--matrix", Q0, "--sigma", sigma)
    assert code == 0 and out.startswith("chi=")


def test_symrep_json_round_trips(capsys):
    code, out, _ = run(capsys, "symrep", "--matrix", Q0, "--sigma", "(1 2)(3 4 5)", "--json")
    data = json.loads(out)
    assert code == 0
    assert MASMatrix.from_json(data["matrix"]).trace == 0
    assert NeckVec.from_json(data["necklace"]).support() <= {1, 2, 3, 6}
    assert LambdaSeries.from_json(data["series"]).order == 16


def test_at_path_and_out_file(capsys, tmp_path):
    (tmp_path / "g.json").write_text(S3)
    (tmp_path / "c.json").write_text(PERM3)
    target = tmp_path / "out.txt"
    code, out, _ = run(capsys, "factor", "--group", f"@{tmp_path / 'g.json'}",
                       "--char", f"@{tmp_path / 'c.json'}", "--class", "2", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "[3]: (1+t^3)^1\n"
    assert run(capsys, "factor", "--group", f"@{tmp_path / 'missing.json'}", "--char", PERM3)[0] == 2


def test_verify_thm322(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "thm322", "--cases", "50", "--seed", "42")
    assert code == 0 and "FAIL" not in out
    assert "passed 50/50 cases" in out


def test_verify_unknown_suite(capsys):
    assert run(capsys, "verify", "--suite", "nope")[0] == 2


def test_verify_is_deterministic(capsys):
    first = run(capsys, "verify", "--suite", "ring", "--seed", "7")
    second = run(capsys, "verify", "--suite", "ring", "--seed", "7")
    assert first == second and first[0] == 0
    j1 = run(capsys, "verify", "--suite", "symrep", "--seed", "7", "--cases", "5", "--json")
    j2 = run(capsys, "verify", "--suite", "symrep", "--seed", "7", "--cases", "5", "--json")
    assert j1 == j2 and json.loads(j1[1])["failed_cases"] == 0


@pytest.mark.parametrize("suite", ["ring", "vft", "enr", "intval", "symrep"])
def test_every_suite_passes_a_short_run(capsys, suite):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--cases", "3", "--seed", "1")
    assert code == 0, out


def test_bench_both(capsys):
    code, out, _ = run(capsys, "bench", "--impl", "both", "--size", "2000")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "size 2000"
    assert lines[1].startswith("direct: ") and lines[2].startswith("ghost: ")
    assert lines[3] == "AGREE"


def test_bench_single_strategy(capsys):
    code, out, _ = run(capsys, "bench", "--impl", "direct", "--size", "300")
    assert code == 0 and len(out.splitlines()) == 2


def test_bench_limits(capsys):
    assert run(capsys, "bench", "--size", "200000")[0] == 6
    assert run(capsys, "bench", "--impl", "fft")[0] == 2


def test_bench_disagreement_exits_1(capsys, monkeypatch):
    def broken(x, y, size):
        out = list(bench.ghost_mul(x, y, size))
        out[0] += 1
        return out

    rigged = partial(bench.run_bench, strategies={"direct": bench.direct_mul, "ghost": broken})
    monkeypatch.setattr(cli, "run_bench", rigged)
    code, out, _ = run(capsys, "bench", "--size", "100")
    assert code == 1 and out.splitlines()[-1] == "DISAGREE"


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nrlambda", "factor", "--group", S3,
                           "--char", PERM3, "--class", "[3]"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "[3]: (1+t^3)^1"
