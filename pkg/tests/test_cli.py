"""The command line: outputs, exit codes, a scripted game."""

import io
import json

import pytest

from chromatic_nim.cli import main

PHI2_JSON = '{"kind":"beatty","p":3,"q":1,"d":5,"r":2}'


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_color_evil(capsys):
    code, out, _ = run(capsys, "color", "--scheme", '{"kind":"evil"}', "--upto", "7")
    assert code == 0
    assert out.strip() == "G G R G R R G"


def test_color_three_halves(capsys):
    code, out, _ = run(capsys, "color", "--scheme", '{"kind":"rational","p":3,"q":2}', "--upto", "5")
    assert code == 0
    assert out.strip() == "R G R R G"


def test_color_json_format(capsys):
    code, out, _ = run(capsys, "color", "--scheme", PHI2_JSON, "--upto", "4", "--format", "json")
    assert code == 0
    assert json.loads(out)["colors"] == "GRGG"


def test_color_from_scheme_file(tmp_path, capsys):
    path = tmp_path / "scheme.json"
    path.write_text('{"kind":"integer","beta":3}')
    code, out, _ = run(capsys, "color", "--scheme", str(path), "--upto", "6")
    assert code == 0
    assert out.strip() == "G G R G G R"


def test_solve_text(capsys):
    code, out, _ = run(capsys, "solve", "--scheme", PHI2_JSON, "--heaps", "4,2")
    assert code == 0
    assert "status: N" in out
    assert "heap 1 -> 1" in out


def test_solve_json(capsys):
    code, out, _ = run(capsys, "solve", "--scheme", PHI2_JSON, "--heaps", "4,2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "N"
    assert data["winning_moves"] == [{"nim": {"heap": 0, "to": 1}}]


def test_solve_oracle_flag(capsys):
    code, out, _ = run(
        capsys, "solve", "--scheme", PHI2_JSON, "--heaps", "4,2", "--oracle", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["backend"] == "oracle"


def test_pp_text(capsys):
    code, out, _ = run(capsys, "pp", "--scheme", '{"kind":"evil"}', "--count", "3")
    assert code == 0
    assert out.splitlines() == ["(0, 0)", "(1, 3)", "(2, 5)"]


def test_pp_csv(capsys):
    code, out, _ = run(capsys, "pp", "--scheme", '{"kind":"evil"}', "--count", "3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "scheme_id,a,b"
    assert len(lines) == 4
    assert lines[1].endswith("0,0")
    assert lines[3].endswith("2,5")


def test_pp_height_with_strategy(capsys):
    code, out, _ = run(
        capsys,
        "pp",
        "--scheme",
        '{"kind":"rational","p":3,"q":2}',
        "--height",
        "6",
        "--strategy",
        "red-dominated",
    )
    assert code == 0
    assert out.splitlines() == ["(0, 0)", "(1, 1)", "(2, 3)", "(4, 4)", "(5, 6)"]


def test_pp_rejects_count_and_height_together(capsys):
    code, _, err = run(capsys, "pp", "--scheme", '{"kind":"evil"}', "--count", "3", "--height", "9")
    assert code == 2
    assert "exactly one" in err


def test_pp_strategy_kind_mismatch_exits_2(capsys):
    code, _, err = run(
        capsys, "pp", "--scheme", '{"kind":"evil"}', "--count", "3", "--strategy", "integer"
    )
    assert code == 2
    assert err.startswith("error:")


def test_verify_pass_exits_0(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--scheme",
        '{"kind":"evil"}',
        "--strategy",
        "evil-closed",
        "--height",
        "25",
    )
    assert code == 0
    assert out.startswith("PASS")


def test_verify_precondition_failure_exits_1(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--scheme",
        '{"kind":"integer","beta":2}',
        "--strategy",
        "beatty",
        "--height",
        "10",
    )
    assert code == 1
    assert out.startswith("FAIL")


def test_verify_fuzz(capsys):
    code, out, _ = run(
        capsys, "verify", "--fuzz", "4", "--height", "12", "--seed", "9", "--kind", "green"
    )
    assert code == 0
    assert len(out.strip().splitlines()) == 4


def test_verify_fuzz_json(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--fuzz",
        "3",
        "--height",
        "10",
        "--seed",
        "2",
        "--kind",
        "both",
        "--format",
        "json",
    )
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 3
    assert all(r["passed"] for r in reports)


def test_bad_scheme_exits_2(capsys):
    code, _, err = run(capsys, "solve", "--scheme", '{"kind":"nope"}', "--heaps", "1,2")
    assert code == 2
    assert "error:" in err


def test_missing_scheme_file_exits_2(capsys):
    code, _, err = run(capsys, "color", "--scheme", "/no/such/file.json", "--upto", "3")
    assert code == 2
    assert "not found" in err


def test_bad_heaps_exit_2(capsys):
    code, _, err = run(capsys, "solve", "--scheme", '{"kind":"evil"}', "--heaps", "4,x")
    assert code == 2
    code, _, err = run(capsys, "solve", "--scheme", '{"kind":"evil"}', "--heaps=-1,2")
    assert code == 2


def test_play_scripted_engine_win(capsys, monkeypatch):
    # engine starts on (4, 2) and plays heap 1 -> 1; the human hands back (1, 1)
    # by emptying heap 2, the engine then wipes the board with a green move
    monkeypatch.setattr("sys.stdin", io.StringIO("2 0\n"))
    code, out, _ = run(
        capsys, "play", "--scheme", PHI2_JSON, "--heaps", "4,2", "--engine-side", "first"
    )
    assert code == 0
    assert "engine plays: heap 1 -> 1" in out
    assert "engine wins" in out


def test_play_quit(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("q\n"))
    code, out, _ = run(
        capsys, "play", "--scheme", PHI2_JSON, "--heaps", "4,2", "--engine-side", "second"
    )
    assert code == 0
    assert "goodbye" in out


def test_play_rejects_illegal_then_accepts(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("1 9\n1 0\n"))
    code, out, _ = run(
        capsys, "play", "--scheme", '{"kind":"evil"}', "--heaps", "1", "--engine-side", "second"
    )
    assert code == 0
    assert "illegal move" in out
    assert "you win" in out
