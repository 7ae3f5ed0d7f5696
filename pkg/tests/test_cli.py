import os

import pytest

from mta import zoo
from mta.cli import main
from mta.textformat import parse_automaton

FIX = os.path.join(os.path.dirname(zoo.__file__), "fixtures")


def fx(name):
    return os.path.join(FIX, name + ".mta")


@pytest.mark.parametrize("argv, code", [
    (["accepts", fx("fig1"), "--", "aa", "aaaa"], 0),
    (["accepts", fx("fig1"), "--", "a", "a"], 1),
    (["accepts", fx("lxx_taped"), "--", "ab", "ab"], 0),
    (["decide", "equiv", fx("lxx"), fx("lxx")], 0),
    (["decide", "universal", fx("lm")], 3),
    (["decide", "empty", fx("lm")], 1),
    (["decide", "finite", fx("fig1")], 1),
    (["decide", "finite", fx("lrho")], 3),
    (["op", "intersect", fx("lm"), fx("lxx")], 3),
    (["validate", fx("fig1")], 0),
    (["check-sync", fx("lxx"), "--s", "0"], 0),
    (["check-sync", fx("fig1"), "--s", "1"], 1),
    (["check-sync", fx("fig1")], 1),
    (["check-sync", fx("lrho")], 3),
    (["deconvolve", "a_", "ab"], 2),
    (["accepts", "/nonexistent.mta", "--", "a"], 2),
    (["pcp", "a:a"], 0),
    (["pcp", "a:b", "--max-states", "200"], 1),
    (["zoo", "list"], 0),
])
def test_exit_codes(argv, code, capsys):
    assert main(argv) == code


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as err:
        main(["decide"])
    assert err.value.code == 2


def test_convolve_output(capsys):
    assert main(["convolve", "ab", "a"]) == 0
    assert capsys.readouterr().out.split() == ["aa", "b_"]
    assert main(["deconvolve", "aa", "b_"]) == 0
    assert "ab" in capsys.readouterr().out


def test_trace_and_witness(capsys):
    assert main(["trace", fx("fig1"), "--", "a", "aa"]) == 0
    assert "done" in capsys.readouterr().out
    assert main(["check-sync", fx("fig1"), "--s", "1"]) == 1
    assert "aaaa" in capsys.readouterr().out


def test_op_and_synchronize_emit_documents(capsys, tmp_path):
    out = tmp_path / "u.mta"
    assert main(["op", "union", fx("e"), fx("h"), "-o", str(out)]) == 0
    m = parse_automaton(out.read_text())
    assert m.tapes == 2
    assert main(["synchronize", fx("lag1_xx"), "--s", "1"]) == 0
    assert parse_automaton(capsys.readouterr().out).is_deterministic


def test_zoo_emit_round_trip(capsys):
    assert main(["zoo", "emit", "L_m", "--form", "taped"]) == 0
    assert "model: taped" in capsys.readouterr().out
    assert main(["zoo", "emit", "nope"]) == 2


def test_pcp_solution_line(capsys):
    assert main(["pcp", "ab:a", "c:bc"]) == 0
    assert "12" in capsys.readouterr().out
