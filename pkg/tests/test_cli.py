import json

import pytest

from leibniz_levi.cli import run
from leibniz_levi.fileformat import load_algebra, render_map


@pytest.fixture(scope="module")
def fixdir(tmp_path_factory):
    d = tmp_path_factory.mktemp("fixtures")
    assert run(["fixtures", str(d)]) == 0
    return d


def test_fixtures_written(fixdir, fixtures):
    files = sorted(p.name for p in fixdir.iterdir())
    assert files == sorted(f"{n}.json" for n in fixtures)
    assert load_algebra(fixdir / "example_3_9.json").dim == 9
    assert load_algebra(fixdir / "L201.json").dim == 8
    assert load_algebra(fixdir / "hemi_sl2_adjoint.json").dim == 6
    assert load_algebra(fixdir / "hemi_sl2_double.json").dim == 9


def test_verify(fixdir, capsys):
    assert run(["verify", str(fixdir / "L201")]) == 0
    assert capsys.readouterr().out.strip() == "Leibniz identity: PASS (512 triples)"


def test_verify_failure(tmp_path, capsys):
    bad = {"dim": 2, "basis": ["e1", "e2"], "products": [
        {"left": "e1", "right": "e1", "result": [["1", "e2"]]},
        {"left": "e1", "right": "e2", "result": [["1", "e2"]]}]}
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(bad))
    assert run(["verify", str(f)]) == 1
    assert "FAIL" in capsys.readouterr().out
    assert run(["classify", str(f)]) == 1


def test_classify(fixdir, capsys):
    assert run(["classify", str(fixdir / "example_3_9")]) == 0
    assert "EXISTS_NON_CONJUGATE_PAIR" in capsys.readouterr().out
    assert run(["classify", "L201", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["verdict"] == "INNER_CONJUGATE"


def test_analyze(fixdir, capsys):
    files = [str(fixdir / f"{n}.json") for n in ("example_3_9", "L201")]
    assert run(["analyze", "--json", "--jobs", "2", *files]) == 0
    out = json.loads(capsys.readouterr().out)
    assert [r["dims"]["I"] for r in out] == [3, 3]
    assert run(["analyze", files[0]]) == 0
    assert capsys.readouterr().out


def test_malformed_input(tmp_path, capsys):
    f = tmp_path / "broken.json"
    f.write_text('{"dim": 2, "basis": ["a"]')
    assert run(["analyze", str(f)]) == 2
    assert "not valid JSON" in capsys.readouterr().err
    assert run(["verify", str(tmp_path / "missing")]) == 2
    assert run(["nonsense"]) == 2


@pytest.mark.parametrize("cmd", ["levi", "hom", "decompose"])
def test_reports(cmd, capsys):
    assert run([cmd, "example_3_9", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["name"] == "example_3_9"


def test_hom_output(capsys):
    assert run(["hom", "example_3_9"]) == 0
    assert "dimension: 1" in capsys.readouterr().out


def test_conjugate(tmp_path, l201, capsys):
    pairs = [(l201.e("e"), l201.vector({"x0": 2})), (l201.e("f"), l201.vector({"x2": 1})),
             (l201.e("h"), l201.vector({"x1": 2}))]
    m = tmp_path / "tau.json"
    m.write_text(render_map(l201, pairs))
    assert run(["conjugate", "L201", "--theta", str(m), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["exp(R_b)(S) = S_tau"] is True
    # from vectors not spanning S
    m.write_text(render_map(l201, pairs[:2]))
    assert run(["conjugate", "L201", "--theta", str(m)]) == 2


def test_conjugate_impossible(tmp_path, ex39):
    pairs = [(ex39.e("e1"), ex39.e("x8")), (ex39.e("e2"), ex39.e("x7")),
             (ex39.e("e3"), ex39.e("x9"))]
    m = tmp_path / "theta.json"
    m.write_text(render_map(ex39, pairs))
    assert run(["conjugate", "example_3_9", "--theta", str(m)]) == 1


def test_exp(capsys):
    a = ",".join(["0"] * 6 + ["1", "0"])
    assert run(["exp", "L201", "--element", a, "--json"]) == 0
    M = json.loads(capsys.readouterr().out)["matrix"]
    assert M[0] == ["1", "0", "0", "2", "0", "0", "0", "0"]
    # y2 acts invertibly on x0: not nilpotent
    assert run(["exp", "L201", "--element", "0,0,0,0,0,0,0,1"]) == 1
    assert run(["exp", "L201", "--element", "1,2"]) == 2
    assert run(["exp", "L201", "--element", "0,0,0,0,0,0,0,1/0"]) == 2
