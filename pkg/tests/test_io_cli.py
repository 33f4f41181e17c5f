import json
import subprocess
import sys
from importlib import resources

import pytest

from hopfcert import cli, io
from hopfcert.catalog import drinfeld_double_group, sweedler
from hopfcert.decide import RouteDisagreement
from hopfcert.suites import SuiteResult

DATA = resources.files("hopfcert") / "data"
GOLDEN = sorted(p.name for p in DATA.iterdir() if p.name.endswith(".json"))
HOPF_FILES = {"sweedler.json", "double_c2_f2.json", "funcs_c2_f2.json"}


def _text(name):
    return (DATA / name).read_text()


def _hopf_for(name):
    stem = next(s for s in (f[:-5] for f in HOPF_FILES) if name.startswith(s))
    return io.hopf_from_dict(json.loads(_text(stem + ".json")))[0]


@pytest.mark.parametrize("name", GOLDEN)
def test_golden_round_trip(name):
    doc = json.loads(_text(name))
    if name in HOPF_FILES:
        h, rms, ccs = io.hopf_from_dict(doc)
        again = io.hopf_to_dict(h, rms, ccs, name=doc["name"])
    else:
        again = io.module_algebra_to_dict(io.module_algebra_from_dict(doc, _hopf_for(name)))
    assert io.dumps(again) == _text(name)


def test_export_matches_golden(tmp_path):
    assert cli.main(["export", "sweedler", "--out", str(tmp_path)]) == 0
    assert cli.main(["export", "double-group", "--n", "2", "--char", "2", "--out", str(tmp_path)]) == 0
    for f in tmp_path.iterdir():
        assert f.read_text() == _text(f.name)


def test_catalog_serialises_identically():
    e = sweedler()
    assert io.dumps(io.hopf_to_dict(e.hopf, e.rmatrices, e.cocycles)) == _text("sweedler.json")


def test_malformed_mult_record():
    doc = json.loads(_text("sweedler_I.json"))
    doc["mult"][3] = [1, 1, 7, "1"]
    with pytest.raises(io.ParseError, match=r"mult\[3\]"):
        io.algebra_from_dict(doc)
    doc["mult"][3] = [1, 1, "1"]
    with pytest.raises(io.ParseError, match=r"mult\[3\]"):
        io.algebra_from_dict(doc)
    doc["mult"][3] = [1, 1, 0, "1/0"]
    with pytest.raises(io.ParseError, match=r"mult\[3\]"):
        io.algebra_from_dict(doc)


@pytest.mark.parametrize("mutate,err", [
    (lambda d: d.pop("dim"), io.ParseError),
    (lambda d: d.update(field="Q(zeta_0)"), io.ParseError),
    (lambda d: d.update(schemaVersion=99), io.ParseError),
    (lambda d: d.update(unit=["0", "1"]), io.ValidationError),
    (lambda d: d["mult"].append([0, 1, 0, "1"]), io.ValidationError),
])
def test_document_errors(mutate, err):
    doc = json.loads(_text("sweedler_I.json"))
    mutate(doc)
    with pytest.raises(err):
        io.algebra_from_dict(doc)


def test_broken_module_algebra_rejected():
    h = _hopf_for("sweedler_I.json")
    doc = json.loads(_text("sweedler_I.json"))
    doc["action"].append([2, 0, 1, "1"])  # x.1 = y: the unit is no longer invariant
    with pytest.raises(io.ValidationError):
        io.module_algebra_from_dict(doc, h)


def test_broken_hopf_rejected():
    doc = json.loads(_text("sweedler.json"))
    doc["counit"][2] = "1"
    with pytest.raises(io.ValidationError):
        io.hopf_from_dict(doc)


def _write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def test_cli_predicate(tmp_path, capsys):
    hopf = str(DATA / "sweedler.json")
    alg = str(DATA / "sweedler_I.json")
    assert cli.main(["predicate", "separable", "--hopf", hopf, "--r", "R0", "--algebra", alg]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["verdict"] is True and out["certificate"]["section"][1] == ["0", "1/2"]
    outfile = tmp_path / "rep.json"
    assert cli.main(["predicate", "vect-invertible", "--hopf", hopf, "--r", "R0", "--j", "R_1",
                     "--out", str(outfile)]) == 0
    assert json.loads(outfile.read_text())["verdict"] is True


def test_cli_exit_codes(tmp_path, monkeypatch, capsys):
    assert cli.main(["check", "vect-g", "--n", "2", "--char", "2"]) == 0
    assert "suite vect-g" in capsys.readouterr().out
    hopf = str(DATA / "sweedler.json")
    assert cli.main(["predicate", "separable", "--hopf", hopf, "--r", "nope", "--algebra", hopf]) == 2
    doc = json.loads(_text("sweedler_I.json"))
    doc["mult"][3] = [1, 1, 9, "1"]
    bad = _write(tmp_path, "bad.json", doc)
    assert cli.main(["predicate", "separable", "--hopf", hopf, "--r", "R0", "--algebra", bad]) == 2
    assert "mult[3]" in capsys.readouterr().err
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert cli.main(["predicate", "separable", "--hopf", str(junk), "--r", "R0"]) == 2
    assert cli.main(["check", "uqsl2", "--p", "4"]) == 2

    failing = SuiteResult("fake")
    failing.check("x", True, False)
    monkeypatch.setitem(cli.SUITES, "properties", lambda: failing)
    assert cli.main(["check", "properties"]) == 1

    def boom():
        raise RouteDisagreement("routes differ")
    monkeypatch.setitem(cli.SUITES, "properties", boom)
    assert cli.main(["check", "properties"]) == 3


def test_cli_json_report(tmp_path):
    out = tmp_path / "double.json"
    assert cli.main(["check", "double-group", "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["ok"] and rep["schemaVersion"] == 1
    names = {c["name"]: c["actual"] for c in rep["checks"]}
    assert names["vect.fullyExact"] is True and names["vect.opFullyExact"] is False


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "hopfcert", "check", "vect-g", "--char", "0", "--format", "json"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["ok"]
