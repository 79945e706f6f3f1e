import json
import shutil
import subprocess
from fractions import Fraction

import pytest

from qfaeq.cli import main
from qfaeq.io import load_qfa, serialize_qfa
from qfaeq.linalg import CMatrix
from qfaeq.qfa import Alphabet, KLetterQFA, always_accept_qfa, last_letter_qfa, validate


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    base = tmp_path_factory.mktemp("qfa")
    paths = {}

    def write(name, automaton):
        path = base / f"{name}.json"
        path.write_text(serialize_qfa(automaton))
        paths[name] = str(path)

    write("last_letter", last_letter_qfa())
    write("always", always_accept_qfa(Alphabet("ab")))
    write(
        "rotation",
        KLetterQFA(
            n=2,
            alphabet=Alphabet("a"),
            k=1,
            initial=(1, 0),
            accepting=frozenset({0}),
            transitions={
                "a": CMatrix(
                    [
                        [Fraction(3, 5), Fraction(-4, 5)],
                        [Fraction(4, 5), Fraction(3, 5)],
                    ]
                )
            },
        ),
    )
    broken = base / "broken.json"
    text = (base / "last_letter.json").read_text()
    broken.write_text(text.replace('"1/1",\n      "0/1"', '"1/1",\n      "1/1"', 1))
    paths["broken"] = str(broken)
    paths["dir"] = str(base)
    return paths


def test_validate_ok(files, capsys):
    assert main(["validate", files["last_letter"]]) == 0
    assert "ok:" in capsys.readouterr().out


def test_validate_invalid_document(files, capsys):
    assert main(["validate", files["broken"]]) == 2
    assert "error:" in capsys.readouterr().err


def test_validate_missing_file(files, capsys):
    assert main(["validate", files["dir"] + "/nope.json"]) == 2
    assert "error:" in capsys.readouterr().err


def test_prob_prints_exact_and_decimal(files, capsys):
    assert main(["prob", files["rotation"], "a"]) == 0
    out = capsys.readouterr().out.strip()
    assert out.startswith("9/25 ~ 0.36")
    assert main(["prob", files["rotation"], "aa"]) == 0
    assert capsys.readouterr().out.startswith("49/625 ~ ")


def test_prob_empty_word(files, capsys):
    assert main(["prob", files["last_letter"], ""]) == 0
    assert capsys.readouterr().out.startswith("0/1 ~ 0")


def test_prob_foreign_letter(files, capsys):
    assert main(["prob", files["rotation"], "ax"]) == 2
    assert "not in alphabet" in capsys.readouterr().err


def test_equiv_identical_files(files, capsys):
    assert main(["equiv", files["last_letter"], files["last_letter"]]) == 0
    out = capsys.readouterr().out
    assert "verdict: equivalent" in out
    assert "witness" not in out


def test_equiv_last_letter_vs_always(files, capsys):
    rc = main(["equiv", files["last_letter"], files["always"]])
    out = capsys.readouterr().out
    assert rc == 1
    assert "verdict: not_equivalent" in out
    assert "witness: ''" in out
    assert "p1: 0/1" in out
    assert "p2: 1/1" in out
    assert "bound_used: 18" in out


def test_equiv_json_schema(files, capsys):
    rc = main(["equiv", files["last_letter"], files["always"], "--json"])
    assert rc == 1
    report = json.loads(capsys.readouterr().out)
    assert list(report) == [
        "verdict",
        "method",
        "bound_used",
        "witness",
        "p1",
        "p2",
        "stats",
    ]
    assert report["verdict"] == "not_equivalent"
    assert report["method"] == "algebraic"
    assert report["witness"] == ""
    assert report["p1"] == "0/1" and report["p2"] == "1/1"
    assert set(report["stats"]) == {"basis_sizes", "nodes_processed", "wall_ms"}
    assert report["stats"]["nodes_processed"] > 0


def test_equiv_json_stable_modulo_wall_time(files, capsys):
    main(["equiv", files["last_letter"], files["always"], "--json"])
    first = json.loads(capsys.readouterr().out)
    main(["equiv", files["last_letter"], files["always"], "--json"])
    second = json.loads(capsys.readouterr().out)
    del first["stats"]["wall_ms"], second["stats"]["wall_ms"]
    assert first == second


def test_equiv_bruteforce_method(files, capsys):
    rc = main(
        [
            "equiv",
            files["last_letter"],
            files["always"],
            "--method",
            "bruteforce",
            "--max-len",
            "4",
        ]
    )
    out = capsys.readouterr().out
    assert rc == 1
    assert "method: bruteforce" in out
    assert "witness: ''" in out
    rc = main(
        [
            "equiv",
            files["last_letter"],
            files["last_letter"],
            "--method",
            "bruteforce",
            "--max-len",
            "6",
        ]
    )
    assert rc == 0


def test_equiv_alphabet_mismatch(files, capsys):
    assert main(["equiv", files["rotation"], files["always"]]) == 2
    assert "alphabet mismatch" in capsys.readouterr().err


def test_bound_binary_two_state_pair(files, capsys, tmp_path):
    f1 = tmp_path / "g1.json"
    f2 = tmp_path / "g2.json"
    assert (
        main(
            ["gen", "--states", "2", "--alphabet", "a,b", "--k", "2",
             "--seed", "1", "-o", str(f1)]
        )
        == 0
    )
    assert (
        main(
            ["gen", "--states", "2", "--alphabet", "a,b", "--k", "2",
             "--seed", "2", "-o", str(f2)]
        )
        == 0
    )
    capsys.readouterr()
    assert main(["bound", str(f1), str(f2)]) == 0
    assert capsys.readouterr().out.strip() == "32"


def test_bound_mixed_sizes(files, capsys):
    assert main(["bound", files["last_letter"], files["always"]]) == 0
    assert capsys.readouterr().out.strip() == "18"


def test_gen_writes_valid_deterministic_file(files, capsys, tmp_path):
    f1 = tmp_path / "a.json"
    f2 = tmp_path / "b.json"
    args = ["gen", "--states", "3", "--alphabet", "a,b", "--k", "1", "--seed", "9"]
    assert main(args + ["-o", str(f1)]) == 0
    assert main(args + ["-o", str(f2)]) == 0
    assert validate(load_qfa(f1)) == []
    assert f1.read_bytes() == f2.read_bytes()


def test_gen_rejects_bad_alphabet(files, capsys, tmp_path):
    rc = main(
        ["gen", "--states", "2", "--alphabet", "ab", "--k", "1",
         "--seed", "0", "-o", str(tmp_path / "x.json")]
    )
    assert rc == 2
    assert "alphabet" in capsys.readouterr().err


def test_bench_csv_output(files, capsys):
    assert main(["bench", "--grid", "n=1,2;m=1;k=1;seeds=2;maxlen=6"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "n,m,k,method,verdict,millis"
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 2 * 2 * 2  # cells x seeds x methods
    for alg, brute in zip(rows[0::2], rows[1::2]):
        assert alg[3] == "algebraic" and brute[3] == "bruteforce"
        assert alg[:3] == brute[:3]
        assert alg[4] == brute[4]  # the two methods agree
        assert alg[4] in ("equivalent", "not_equivalent")


def test_bench_rejects_bad_grid(files, capsys):
    assert main(["bench", "--grid", "n=1;zap=3"]) == 2
    assert "unknown key" in capsys.readouterr().err


def test_unknown_flag_exits_2(files, capsys):
    assert main(["equiv", files["always"], files["always"], "--frobnicate"]) == 2


def test_unknown_subcommand_exits_2(capsys):
    assert main(["transmogrify"]) == 2


def test_no_arguments_exits_2(capsys):
    assert main([]) == 2


def test_console_script_entry_point():
    exe = shutil.which("qfaeq")
    assert exe is not None
    result = subprocess.run(
        [exe, "--help"], capture_output=True, text=True, timeout=60
    )
    assert result.returncode == 0
    assert "equiv" in result.stdout
