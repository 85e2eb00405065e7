import json

import pytest
from hypothesis import given, settings, strategies as st

from sallymod.cli import EXIT_ASSERT, EXIT_ENGINE, EXIT_INPUT, EXIT_OK, main
from sallymod.families import EXAMPLE_IDS
from sallymod.field import FieldSpec
from sallymod.io import AnalysisInput, InputError, build, dump_input, load_input

POLY_INPUT = """\
ring:
  variables: [x, y]
  field: p:32003
ideal: [x^3, x^2*y + x*y^2, y^3]
reduction: [x^3, y^3]
config:
  seed: 7
"""


def test_load_and_build():
    inp = load_input(POLY_INPUT)
    assert inp.variables == ("x", "y") and inp.setting("seed") == 7
    I, J = build(inp)
    assert I.colength() == 7 and J.colength() == 9


def test_auto_reduction_is_seeded():
    text = POLY_INPUT.replace("reduction: [x^3, y^3]\n", "")
    a = build(load_input(text))[1]
    b = build(load_input(text))[1]
    assert a.equals(b)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(2, 15), min_size=2, max_size=4, unique=True),
       st.sampled_from([None, "q", "p:101"]), st.integers(0, 99))
def test_round_trip(gens, field, seed):
    inp = AnalysisInput(semigroup=tuple(sorted(gens)), field=field, reduction=("t^2",),
                        config={"seed": seed, "oracle": True})
    assert load_input(dump_input(inp)) == inp


def test_round_trip_examples():
    from sallymod.cli import example_input
    for id in EXAMPLE_IDS:
        inp = example_input(id)
        assert load_input(dump_input(inp)) == inp


@pytest.mark.parametrize("text,line,col", [
    ("ring:\n  variables: [x, y]\nideal: [x^2, y^2 +* x]\n", 3, 19),
    ("ring:\n  variables: [x, y]\nideal: [x^2, y^2]\nconfig:\n  seed: abc\n", 5, 9),
    ("ring:\n  variables: [x, y]\nbogus: 1\n", 3, 1),
    ("ring:\n  variables: [x, y]\n  field: p:12\n", 3, 10),
    ("ring: [\n", 2, 1),
])
def test_input_errors_are_located(text, line, col):
    with pytest.raises(InputError) as exc:
        load_input(text)
        build(load_input(text))
    assert (exc.value.line, exc.value.column) == (line, col)


def test_env_field_override(monkeypatch):
    monkeypatch.setenv("SALLYMOD_FIELD", "q")
    inp = load_input(POLY_INPUT.replace("  field: p:32003\n", ""))
    assert inp.field_spec() == FieldSpec.rationals()


# --- command line ------------------------------------------------------------------

def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_json_is_deterministic(capsys, tmp_path):
    f = tmp_path / "in.yaml"
    f.write_text(POLY_INPUT)
    code1, out1, _ = run(capsys, "analyze", str(f), "--format", "json")
    code2, out2, _ = run(capsys, "analyze", str(f), "--format", "json")
    assert code1 == code2 == EXIT_OK
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["provenance"]["field"] == "p:32003"
    assert "wall_seconds" not in doc["provenance"]
    assert doc["ok"] is True


def test_analyze_example_text(capsys):
    code, out, _ = run(capsys, "analyze", "Semigroup5_6_9")
    assert code == EXIT_OK
    assert "CohenMacaulay" in out and "reduction number r = 3" in out


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.yaml"
    bad.write_text("ring:\n  variables: [x]\nideal: [x^2 + ]\n")
    assert run(capsys, "analyze", str(bad))[0] == EXIT_INPUT
    assert run(capsys, "analyze", str(tmp_path / "missing.yaml"))[0] == EXIT_INPUT
    notred = tmp_path / "nr.yaml"
    notred.write_text("ring:\n  variables: [x, y]\nideal: [x, y]\nreduction: [x^2, y^2]\n"
                      "config:\n  bound_reduction: 4\n")
    code, _, err = run(capsys, "analyze", str(notred))
    assert code == EXIT_ENGINE and "ReductionError" in err
    with pytest.raises(SystemExit) as exc:
        main(["analyze"])
    assert exc.value.code == 2


def test_budget_gives_partial_report(capsys):
    code, out, _ = run(capsys, "analyze", "Graph_n1", "--power-budget", "2", "--format", "json")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["partial"] is True
    assert doc["depth_class"] == "ExactlyDMinus1"


def test_verify_paper_fast_and_injected_mismatch(capsys):
    code, out, _ = run(capsys, "verify-paper", "--fast", "--fields", "p:32003")
    assert code == EXIT_OK and "FAIL" not in out
    code, out, _ = run(capsys, "verify-paper", "--fast", "--fields", "p:32003",
                       "--override", "Graph_n1:colength(I)=7")
    assert code == EXIT_ASSERT
    assert any("colength(I)" in l and l.rstrip().endswith("FAIL") for l in out.splitlines())


def test_question_budget(capsys):
    code, out, _ = run(capsys, "question", "1")
    assert code == EXIT_OK and "(c) I^2 ⊆ J: True" in out
    code, _, err = run(capsys, "question", "9")
    assert code == EXIT_INPUT and "budget" in err


def test_example_dump(capsys):
    code, out, _ = run(capsys, "example", "Semigroup6_7_9_17")
    assert code == EXIT_OK and "semigroup: [6, 7, 9, 17]" in out


def test_shipped_inputs_round_trip():
    import pathlib
    files = sorted((pathlib.Path(__file__).parent.parent / "inputs").glob("*.yaml"))
    assert len(files) >= 6
    for f in files:
        inp = load_input(f.read_text())
        assert load_input(dump_input(inp)) == inp, f.name
