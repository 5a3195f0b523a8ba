import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from quasiwords.cli import run

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden" / "cli"

LEFT = "((a0/a1)*(a2*a3))/(a4\\a0)"
RIGHT = "(a4*(a2*a3))/a1"

# name, argv, exit code
CASES = [
    ("eq_twowords", ["eq", LEFT, RIGHT], 0),
    ("eq_different", ["eq", "a*b", "b*a"], 0),
    ("rep_ab", ["rep", "a*b"], 0),
    ("rep_twowords", ["rep", RIGHT], 0),
    ("rep_json", ["rep", RIGHT, "--json"], 0),
    ("parse", ["parse", "a*b/c o d"], 0),
    ("parse_json", ["parse", "a\\\\(b//c)", "--json"], 0),
    ("eliminate", ["eliminate", LEFT], 0),
    ("patterns", ["patterns", LEFT], 0),
    ("patterns_json", ["patterns", LEFT, "--json"], 0),
    ("enumerate", ["enumerate", "--max-leaves", "3"], 0),
    ("enumerate_two", ["enumerate", "--generators", "a,b", "--max-leaves", "2", "--ops", "all"], 0),
    ("plot16", ["plot16"], 0),
    ("check_quasigroup", ["check-quasigroup", str(DATA / "q3.json")], 0),
    ("conjugate", ["conjugate", "--g", "st", str(DATA / "q3.json")], 0),
    ("semisymmetrize", ["semisymmetrize", str(DATA / "q3.json")], 0),
    ("check_homotopy", ["check-homotopy", str(DATA / "homotopy.json")], 0),
    ("check_automaton", ["check-automaton", str(DATA / "automaton.json"), "--json"], 0),
    ("automaton_to_quasigroup", ["automaton-to-quasigroup", str(DATA / "automaton.json")], 0),
    ("check_linss", ["check-linss", str(DATA / "linss_good.json")], 0),
    ("linss_automaton", ["linss-automaton", str(DATA / "linss_good.json")], 0),
    ("linss_identify", ["linss-identify", str(DATA / "linss_good.json")], 0),
    ("linss_identify_json", ["linss-identify", str(DATA / "linss_good.json"), "--json"], 0),
    ("not_homotopy_json", ["check-homotopy", str(DATA / "not_homotopy.json"), "--json"], 1),
    ("bad_linss_json", ["check-linss", str(DATA / "linss_bad.json"), "--json"], 1),
]


def invoke(argv, capsys):
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name, argv, code", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv, code, capsys):
    got_code, out, _ = invoke(argv, capsys)
    assert got_code == code
    path = GOLDEN / f"{name}.out"
    if os.environ.get("REGEN_GOLDEN"):
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(out)
    assert out == path.read_text()
    # byte-identical on a second run
    assert invoke(argv, capsys)[1] == out


def test_documented_examples(capsys):
    assert invoke(["eq", LEFT, RIGHT], capsys)[1] == "equal\n"
    assert invoke(["rep", "a*b"], capsys)[1] == "a: 1*R\nb: 1*L\n"


@pytest.mark.parametrize("argv, fragment", [
    (["parse", "a*"], "position 2"),
    (["rep", "(a"], "position 2"),
    (["check-quasigroup", str(DATA / "malformed.json")], "line 3, column 1"),
    (["check-quasigroup", str(DATA / "missing.json")], "cannot read"),
    (["conjugate", "--g", "q", str(DATA / "q3.json")], "bad S3 word"),
    (["frobnicate"], "invalid choice"),
    (["rep"], "required"),
    (["rep", "a", "--bogus"], "unrecognized"),
    (["plot16", "--count", "0"], "at least 1"),
])
def test_usage_errors_exit_2(argv, fragment, capsys):
    code, _, err = invoke(argv, capsys)
    assert code == 2
    assert fragment in err


@pytest.mark.parametrize("argv, fragment", [
    (["check-quasigroup", str(DATA / "not_latin.json")], "column 0 repeats 0"),
    (["check-homotopy", str(DATA / "not_homotopy.json")], "FAIL homotopy"),
    (["check-linss", str(DATA / "linss_bad.json")], "rho^3"),
    (["linss-identify", str(DATA / "linss_bad.json")], "rho^3"),
    (["check-automaton", str(DATA / "q3.json")], "missing field 'S1'"),
])
def test_domain_errors_exit_1(argv, fragment, capsys):
    code, _, err = invoke(argv, capsys)
    assert code == 1
    assert fragment in err


def test_every_verb_accepts_json(capsys):
    from quasiwords.cli import build_parser
    sub = next(a for a in build_parser()._actions if a.dest == "verb")
    for name, p in sub.choices.items():
        assert any("--json" in a.option_strings for a in p._actions), name


def test_plot16_writes_files(tmp_path, capsys):
    prefix = tmp_path / "fig"
    code, out, _ = invoke(["plot16", "--count", "4", "--out", str(prefix)], capsys)
    assert code == 0 and out == ""
    csv_lines = (tmp_path / "fig.csv").read_text().splitlines()
    assert len(csv_lines) == 5
    assert (tmp_path / "fig.svg").read_text().startswith("<?xml")


def test_json_outputs_parse(capsys):
    code, out, _ = invoke(["enumerate", "--max-leaves", "2", "--json"], capsys)
    data = json.loads(out)
    assert [d["word"] for d in data] == ["a", "a*a", "a/a", "a\\a"]


def test_stdin_input(monkeypatch, capsys):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO((DATA / "q3.json").read_text()))
    code, out, _ = invoke(["semisymmetrize", "-"], capsys)
    assert code == 0 and len(json.loads(out)["elements"]) == 27


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quasiwords", "parse", "a*"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    assert "position 2" in proc.stderr
