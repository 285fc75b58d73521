import json

import pytest

from sp4solvable.cli import main
from sp4solvable.sp4 import T, X_A2B, X_AB, X_ALPHA, X_BETA
from sp4solvable.structure import Subalgebra


@pytest.fixture
def tn_path(tmp_path):
    sub = Subalgebra.from_matrices([T(1, 1), X_BETA, X_ALPHA, X_AB, X_A2B])
    p = tmp_path / "tn.json"
    p.write_text(json.dumps(sub.to_json()))
    return str(p)


@pytest.fixture
def ta_path(tmp_path):
    sub = Subalgebra.from_matrices([T(2, 1), X_ALPHA])
    p = tmp_path / "ta.json"
    p.write_text(json.dumps(sub.to_json()))
    return str(p)


def test_identify_tn_is_s537(tn_path, capsys):
    assert main(["identify", "--input", tn_path, "--output", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["sw"] == "s_{5,37}"
    assert out["catalog_rows"] == [{"row": "d5_T11_n", "param": None}]


def test_identify_dim2(ta_path, capsys):
    assert main(["identify", "--input", ta_path, "--output", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["degraaf"] == "K2" and out["sw"] == "s_{2,1}"


def test_classify_element_cli(tmp_path, capsys):
    p = tmp_path / "x.json"
    p.write_text(json.dumps(X_A2B.to_json()))
    assert main(["classify-element", "--input", str(p), "--output", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["row"] == "X_alpha" and out["table"] == 2


def test_conjugate_cli_roundtrip(ta_path, tmp_path, capsys):
    assert main(["conjugate", "--input", ta_path, "--conjugator", "W",
                 "--output", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    img = Subalgebra.from_json({"ambient": out["ambient"], "basis": out["basis"]})
    assert img.space == Subalgebra.from_matrices([T(1, 2), X_A2B]).space


def test_invariants_cli(ta_path, capsys):
    assert main(["invariants", "--input", ta_path, "--output", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["dim"] == 2 and out["ss_content"] == "has_regular_ss"


def test_export_catalog_roundtrips(capsys):
    assert main(["export-catalog"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data) == 65
    from sp4solvable.catalog import catalog_from_json
    assert len(catalog_from_json(data)) == 65


def test_parse_error_exit_code(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("[[nope")
    assert main(["identify", "--input", str(p)]) == 2
    p2 = tmp_path / "notclosed.json"
    p2.write_text(json.dumps({"ambient": "sp4", "basis": [
        X_ALPHA.to_json(), X_BETA.to_json()]}))
    assert main(["identify", "--input", str(p2)]) == 2


def test_irrational_spectrum_exit_code(tmp_path, capsys):
    # char poly t^4 - 1: eigenvalues +-1, +-i
    from sp4solvable.linalg import Mat4
    weird = Mat4([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]])
    p = tmp_path / "weird.json"
    p.write_text(json.dumps(weird.to_json()))
    assert main(["classify-element", "--input", str(p)]) == 3


def test_deterministic_output(ta_path, capsys):
    main(["identify", "--input", ta_path, "--output", "json"])
    first = capsys.readouterr().out
    main(["identify", "--input", ta_path, "--output", "json"])
    assert capsys.readouterr().out == first


def test_verify_catalog_cli_small(capsys, monkeypatch):
    # restricted sample set keeps the CLI path fast; full run is in acceptance
    assert main(["verify-catalog", "--params", "2,1/2", "--output", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["overall_pass"] is True
    assert out["samples"] == ["2", "3", "5", "-2", "-3", "1/2", "2/3", "7/3"]


def test_env_override_samples(capsys, monkeypatch):
    monkeypatch.setenv("SP4_PARAM_SAMPLES", "2,3")
    assert main(["verify-catalog", "--output", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["samples"] == ["2", "3"]


def test_identify_borel_cli(tmp_path, capsys):
    from sp4solvable.sp4 import T as TT
    sub = Subalgebra.from_matrices([TT(1, 0), TT(0, 1), X_BETA, X_ALPHA,
                                    X_AB, X_A2B])
    p = tmp_path / "b.json"
    p.write_text(json.dumps(sub.to_json()))
    assert main(["identify", "--input", str(p), "--output", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["sw"] == "s_{6,242}"
    assert out["catalog_rows"] == [{"row": "d6_b", "param": None}]


def test_verify_catalog_with_probe(capsys):
    assert main(["verify-catalog", "--params", "2", "--probe-count", "5",
                 "--seed", "3", "--output", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert any("random subalgebras" in r["check"] for r in out["records"])
