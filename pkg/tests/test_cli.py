"""Command-line interface and frame-file grammar."""

from __future__ import annotations

import json

import pytest

from skewtorsion import FrameSyntaxError, InvalidFrame
from skewtorsion.cli import format_frame, main, parse_frame

from helpers import NIL6_FRAME_TEXT, nil6


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_nil6_frame_round_trip():
    assert parse_frame(NIL6_FRAME_TEXT) == nil6()
    assert parse_frame(format_frame(nil6())) == nil6()


def test_heisenberg_dim_three():
    M = parse_frame("dim 3\nd e1 = e2^e3\n")
    assert M.dim == 3 and not M.differentials[1]


def test_rational_coefficients_and_comments():
    M = parse_frame("# header\ndim 4\n\nd e1 = 1/2*e2^e3 - 3*e2^e4  # trailing\n")
    assert M.differentials[0][(1, 2)] == 0.5 and M.differentials[0][(1, 3)] == -3
    assert parse_frame(format_frame(M)) == M


def test_jacobi_failure_reports_triple():
    with pytest.raises(InvalidFrame) as info:
        parse_frame("dim 3\nd e1 = e1^e2\nd e2 = e1^e3\n")
    assert info.value.triple == (0, 1, 2)


@pytest.mark.parametrize(
    "text,line,column",
    [
        ("d e1 = e2^e3\n", 1, 1),
        ("dim 3\nd e1 = e3^e2\n", 2, 8),
        ("dim 3\nd e1 = e2^e4\n", 2, 11),
        ("dim 3\nd e1 = e2^e3 e1^e2\n", 2, 14),
        ("dim 3\nd e1 = 2 e2^e3\n", 2, 8),
        ("dim 3\nd e1 = e2^e3\nd e1 = e2^e3\n", 3, 3),
        ("dim 3\nx e1 = e2^e3\n", 2, 1),
        ("dim 3\nd e1 =\n", 2, 7),
        ("", 1, 1),
    ],
)
def test_syntax_errors_carry_position(text, line, column):
    with pytest.raises(FrameSyntaxError) as info:
        parse_frame(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_model_run_exit_code_and_json(capsys):
    code, out, _ = run(capsys, "--model", "s6_nk", "--param", "t=2", "--check", "nk,pont")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0
    assert [r["id"] for r in lines[:-1]] == ["nk.constant_type", "nk.dT", "nk.dT_declared", "nk.N_psi_plus",
                                             "pont.nabla", "pont.tilde"]
    assert lines[-1]["summary"]["pass"] == 6 and len(lines[-1]["commentary"]) == 3


def test_failure_gives_exit_one(capsys):
    code, out, _ = run(capsys, "--model", "s7_np", "--check", "pont.nabla", "--format", "text")
    assert code == 1 and "C0_CONFLICT" in out and "holds only with c0 = 1/3" in out


def test_usage_errors_give_exit_two(capsys):
    assert run(capsys, "--model", "nil6", "--check", "nonexistent")[0] == 2
    assert run(capsys, "--model", "mystery")[0] == 2
    assert run(capsys, "--model", "s6_nk", "--param", "t=abc")[0] == 2
    assert run(capsys, "--model", "s6_nk", "--param", "x=1")[0] == 2
    assert run(capsys)[0] == 2


def test_frame_file_paths(capsys, tmp_path):
    good = tmp_path / "nil.txt"
    good.write_text(NIL6_FRAME_TEXT)
    code, out, _ = run(capsys, "--frame-file", str(good), "--format", "text")
    assert code == 0 and "su3.admissible" in out
    bad = tmp_path / "bad.txt"
    bad.write_text("dim 3\nd e1 = e1^e2\nd e2 = e1^e3\n")
    code, _, err = run(capsys, "--frame-file", str(bad))
    assert code == 2 and "e1,e2,e3" in err
    syn = tmp_path / "syn.txt"
    syn.write_text("dim 3\nd e1 = e2^\n")
    code, _, err = run(capsys, "--frame-file", str(syn))
    assert code == 2 and "line 2, column" in err
    assert run(capsys, "--frame-file", str(tmp_path / "missing"))[0] == 2


def test_reports_are_deterministic(capsys):
    args = ("--model", "s5_sasaki", "--format", "json")
    first = run(capsys, *args)
    assert first == run(capsys, *args)
