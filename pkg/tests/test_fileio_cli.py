import json
from pathlib import Path

import pytest

from weakhopf import fileio
from weakhopf.cli import main
from weakhopf.exactlin import GF, QQ
from weakhopf.generators import fixture, random_hl_module, random_hopf_module, twisted_module
from weakhopf.hopfmod import regular_hopf_module

from conftest import ALL, cached

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.mark.parametrize("name", ALL + ["trivial", "S3*discrete-2"])
@pytest.mark.parametrize("field", [QQ, GF(7)])
def test_structure_round_trip_bit_exact(name, field, tmp_path):
    H = fixture(name, field)
    path = tmp_path / "h.whq"
    fileio.save(H, path)
    text = path.read_text()
    K = fileio.load(path, check=True)
    assert (K.unit, K.mul, K.counit, K.comul, K.antipode, K.c) == \
        (H.unit, H.mul, H.counit, H.comul, H.antipode, H.c)
    fileio.save(K, path)
    assert path.read_text() == text


@pytest.mark.parametrize("name", ["C2", "pair-2", "chein-S3"])
def test_module_round_trip(name, tmp_path):
    H = cached(name)
    for M in (regular_hopf_module(H), random_hopf_module(H, 3), random_hl_module(H, 2, 4)):
        path = tmp_path / "m.json"
        fileio.save(M, path)
        M2 = fileio.load_module(path, H, check=True)
        assert M2.action == M.action and M2.dim == M.dim
        assert fileio.dumps(M2) == path.read_text()


def test_rational_scalars_canonical():
    d = fileio.structure_to_dict(cached("C2"))
    d["antipode"][0][0] = "2/2"
    H = fileio.structure_from_dict(d)
    assert fileio.structure_to_dict(H)["antipode"][0][0] == "1"


@pytest.mark.parametrize("text", [
    "{", "[]", '{"dim": -1}', '{"dim": 1, "unit": ["1"]}',
    '{"dim": 1, "unit": [1], "mul": [[["1"]]], "counit": ["1"], "comul": [[["1"]]], "antipode": [["1"]]}',
    '{"field": "R", "dim": 0}',
    '{"dim": 1, "unit": ["1"], "mul": [["1"]], "counit": ["1"], "comul": [[["1"]]], "antipode": [["1"]]}',
])
def test_parse_errors(text):
    with pytest.raises(fileio.FormatError):
        fileio.loads(text)


def run(argv, capsys):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def test_cli_validate_fixture_files(capsys):
    assert run(["validate", FIXTURES / "s3.whq"], capsys)[0] == 0
    code, out = run(["validate", FIXTURES / "broken-antipode.whq"], capsys)
    assert code == 1 and "first failure: (a4-" in out
    assert run(["validate", FIXTURES / "empty.whq"], capsys)[0] == 0


def test_cli_labels_in_report(capsys):
    code, out = run(["validate", FIXTURES / "s3.whq"], capsys)
    assert "(a4-5) pass" in out and "(mu-assoc-1) pass" in out


def test_cli_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.whq"
    bad.write_text('{"dim": 2}')
    assert run(["validate", bad], capsys)[0] == 2
    assert run(["validate", tmp_path / "missing.whq"], capsys)[0] == 2


def test_cli_derive(capsys):
    code, out = run(["derive", FIXTURES / "discrete-3.whq"], capsys)
    assert code == 0 and "dim H_L = 3" in out
    assert "Π^L = η∘ε" in run(["derive", FIXTURES / "c2.whq"], capsys)[1]
    out = run(["derive", FIXTURES / "chein-s3.whq"], capsys)[1]
    assert "H nonassociative: witness (" in out


def test_cli_json_report(capsys):
    code, out = run(["derive", FIXTURES / "pair-2.whq", "--report", "json"], capsys)
    doc = json.loads(out)
    assert code == doc["exit"] == 0 and "dim H_L = 2" in doc["notes"]


def test_cli_field_override(capsys):
    assert run(["validate", FIXTURES / "s3.whq", "--field", "F7"], capsys)[0] == 0


@pytest.mark.parametrize("name", ["s3", "c2", "discrete-3", "pair-2", "chein-s3"])
def test_cli_fundamental(name, capsys):
    assert run(["fundamental", FIXTURES / f"{name}.whq"], capsys)[0] == 0


def test_cli_fundamental_with_module(capsys):
    code, out = run(["fundamental", FIXTURES / "s3.whq", "--module", FIXTURES / "s3-random.hmod"],
                    capsys)
    assert code == 0 and "(alpha:quasilineal) pass" in out


def test_cli_equivalence(capsys):
    assert run(["equivalence", FIXTURES / "discrete-3.whq"], capsys)[0] == 0
    assert run(["equivalence", FIXTURES / "pair-2.whq", "--seed", "5"], capsys)[0] == 0


def test_cli_equivalence_non_strong(capsys):
    code, out = run(["equivalence", FIXTURES / "discrete-3.whq",
                     "--module", FIXTURES / "discrete-3-twisted.hmod",
                     "--module", FIXTURES / "discrete-3-free2.hlmod"], capsys)
    assert code == 1 and "(c1)" in out


def test_cli_gen_matches_fixture_files(tmp_path, capsys):
    out = tmp_path / "s3.whq"
    assert run(["gen", "S3", "-o", out], capsys)[0] == 0
    assert out.read_text() == (FIXTURES / "s3.whq").read_text()
    assert run(["gen", "bogus"], capsys)[0] == 2


def test_cli_gen_modules(tmp_path, capsys):
    H = cached("discrete-3")
    out = tmp_path / "t.hmod"
    run(["gen", "discrete-3", "--module", "twisted", "-o", out], capsys)
    assert fileio.load_module(out, H).action == twisted_module(H).action
