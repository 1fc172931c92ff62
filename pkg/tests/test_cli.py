import io
import json
from pathlib import Path

import pytest

from formalgeom import cli
from formalgeom import problem as pf
from formalgeom.errors import ParseError, ValidationError

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_series_cos():
    code, out, _ = run("series", "--input", str(FIXTURES / "cos.json"), "--order", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[:2] == ["task series order 6", "functional omega"]
    assert lines[2:9] == [
        "alpha= 0 coeff= 1/1 + 0/1 i",
        "alpha= 1 coeff= 0/1 + 0/1 i",
        "alpha= 2 coeff= -1/2 + 0/1 i",
        "alpha= 3 coeff= 0/1 + 0/1 i",
        "alpha= 4 coeff= 1/24 + 0/1 i",
        "alpha= 5 coeff= 0/1 + 0/1 i",
        "alpha= 6 coeff= -1/720 + 0/1 i",
    ]


def test_gns_cos_summary():
    code, out, _ = run("gns", "-i", str(FIXTURES / "cos.json"), "-N", "2")
    assert code == 0
    assert out.splitlines()[1] == "rank 2, stabilized, charpoly X: λ^2 + 1"
    assert "rank profile: 1 2 2" in out


def test_positivity_factorial():
    code, out, _ = run("positivity", "-i", str(FIXTURES / "factorial.json"), "-N", "3")
    assert code == 0
    assert out.splitlines()[1] == "PSD certificate"


def test_positivity_corrupted():
    code, out, _ = run("positivity", "-i", str(FIXTURES / "corrupted_moments.json"), "-N", "1")
    assert code == 0
    assert "NOT PSD" in out and "witness element: X" in out


def test_corrupted_moments_as_state_is_rejected():
    code, _, err = run("series", "-i", str(FIXTURES / "corrupted_moments.json"), "-N", "2")
    assert code == 2 and "PositivityFailure" in err


def test_radius_and_fock():
    code, out, _ = run("radius", "-i", str(FIXTURES / "factorial.json"), "-N", "16")
    assert code == 0 and "radius estimate: 1.0" in out
    code, out, _ = run("fock", "-i", str(FIXTURES / "fock.json"), "--norm", "1/2")
    assert code == 0 and "r-norm at r = 1/2" in out
    code, out, _ = run("fock", "-i", str(FIXTURES / "fock.json"), "--eval")
    assert code == 0 and "character check" in out


def test_props_exit_codes(monkeypatch):
    code, out, _ = run("props", "--suite", "lie")
    assert code == 0 and "0 failed" in out
    monkeypatch.setattr(cli, "run_suite", lambda name, seed: [("broken", False, "")])
    code, out, _ = run("props", "--suite", "lie")
    assert code == 3 and "FAIL broken" in out


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"algebra": {"dim": 1,\n  oops}\n')
    code, _, err = run("series", "-i", str(bad))
    assert code == 2 and "line 2" in err


def test_missing_input():
    code, _, err = run("gns")
    assert code == 2 and "--input" in err


def _cos_dict():
    return json.loads((FIXTURES / "cos.json").read_text())


def test_loader_rejects():
    with pytest.raises(ParseError) as info:
        pf.loads('{\n "algebra": [}')
    assert info.value.line == 2
    d = _cos_dict()
    d["representation"]["nu"] = [1.0, 0]
    with pytest.raises(ParseError):
        pf.from_dict(d)
    d = _cos_dict()
    d["moments"] = ["1"]
    with pytest.raises(ValidationError):
        pf.from_dict(d)
    d = _cos_dict()
    d["extra"] = 1
    with pytest.raises(ParseError):
        pf.from_dict(d)
    d = _cos_dict()
    d["tasks"] = [{"task": "dance"}]
    with pytest.raises(ParseError):
        pf.from_dict(d)
    d = {"algebra": {"dim": 1}, "tasks": [{"task": "series"}]}
    with pytest.raises(ValidationError):
        pf.from_dict(d)


def test_unreduced_rationals_accepted():
    d = _cos_dict()
    d["representation"]["matrices"] = [[["0", "2/2"], ["-3/3", "0"]]]
    assert pf.dumps(pf.from_dict(d)) == pf.dumps(pf.from_dict(_cos_dict()))


@pytest.mark.parametrize("name", sorted(p.name for p in FIXTURES.glob("*.json")))
def test_canonical_round_trip(name):
    text = pf.dumps(pf.load(FIXTURES / name))
    assert pf.dumps(pf.loads(text)) == text


def test_run_writes_reports(tmp_path):
    code, out, _ = run("run", "-i", str(FIXTURES / "cos.json"), "--out", str(tmp_path))
    assert code == 0
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ["01_series.txt", "02_gns.txt", "03_positivity.txt", "04_radius.txt"]
    assert "".join((tmp_path / n).read_text() for n in names) == out
