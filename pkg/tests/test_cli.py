"""Command-line interface: exit codes, report text, structured round-trips."""

import json
import os

from gradedlie.cli import main

DATA = os.path.join(os.path.dirname(__file__), os.pardir,
                    "src", "gradedlie", "data")


def data_file(name):
    return os.path.join(DATA, name + ".json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_bundled_documents(capsys):
    for name in ("sl3", "gl1gl1sl2", "adjoint_sl2", "char2"):
        code, out, _ = run(capsys, "verify", data_file(name))
        assert code == 0
        assert "pentad standard: valid" in out


def test_build_sl3_text(capsys):
    code, out, _ = run(capsys, "build", data_file("sl3"))
    assert code == 0
    assert "0, 2, 4, 2, 0" in out
    assert "total: 8" in out
    assert "finite: yes" in out


def test_build_gl1gl1sl2_total(capsys):
    code, out, _ = run(capsys, "build", data_file("gl1gl1sl2"))
    assert code == 0
    assert "total: 9" in out
    assert "transitive: no" in out


def test_build_adjoint_inconclusive(capsys):
    code, out, _ = run(capsys, "build", data_file("adjoint_sl2"), "--depth", "2")
    assert code == 0
    assert "finite: inconclusive at depth 2" in out
    assert "bracket checks: valid" in out


def test_extend_report(capsys):
    code, out, _ = run(capsys, "extend", data_file("gl1gl1sl2"))
    assert code == 0
    assert "positive levels: 1, 2, 0" in out
    assert "transitive: yes" in out
    assert "irreducibility: irreducible (degree-0 reduction" in out
    assert "lifted pentad: valid" in out


def test_chain_report(capsys):
    code, out, _ = run(capsys, "chain", data_file("gl1gl1sl2"))
    assert code == 0
    assert "both sides: 2,3,5,3,2 (15)" in out
    assert "sigma residual: zero" in out
    assert "isomorphic-within-depth (exact, finite)" in out


def test_structured_round_trip_is_byte_identical(tmp_path, capsys):
    code, out1, _ = run(capsys, "build", data_file("sl3"), "--format", "structured")
    assert code == 0
    again = tmp_path / "sl3_out.json"
    again.write_text(out1)
    code, out2, _ = run(capsys, "build", str(again), "--format", "structured")
    assert code == 0
    assert out1 == out2


def test_structured_chain_is_deterministic(capsys):
    _, out1, _ = run(capsys, "chain", data_file("gl1gl1sl2"),
                     "--format", "structured")
    _, out2, _ = run(capsys, "chain", data_file("gl1gl1sl2"),
                     "--format", "structured")
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["chain"]["verdict"]["status"] == "isomorphic-within-depth"


def test_missing_file_is_input_error(capsys):
    code, _, err = run(capsys, "verify", "/no/such/file.json")
    assert code == 2
    assert "input error" in err


def test_corrupted_b0_fails_verification(tmp_path, capsys):
    with open(data_file("sl3")) as fh:
        doc = json.load(fh)
    doc["b0"][0][1] = "1/3"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(bad))
    assert code == 1
    assert "violated" in out or "degenerate" in out


def test_zero_dim_algebra_rejected(tmp_path, capsys):
    doc = {"field": "rational",
           "algebra": {"dim": 0, "brackets": []},
           "representation": {"dim": 0, "operators": []},
           "b0": []}
    f = tmp_path / "empty.json"
    f.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(f))
    assert code == 1
    assert "non-zero Lie algebra" in out


def test_extend_without_module_block(capsys):
    code, _, err = run(capsys, "extend", data_file("sl3"))
    assert code == 2
    assert "module block" in err


def test_malformed_json_reports_location(tmp_path, capsys):
    f = tmp_path / "broken.json"
    f.write_text('{"field": "rational",')
    code, _, err = run(capsys, "verify", str(f))
    assert code == 2
    assert "line" in err and "column" in err


def test_mismatched_scalar_field_rejected(tmp_path, capsys):
    with open(data_file("sl3")) as fh:
        doc = json.load(fh)
    doc["b0"][0][0] = "1 mod 5"  # GF(5) literal in a rational document
    f = tmp_path / "mixed.json"
    f.write_text(json.dumps(doc))
    code, _, err = run(capsys, "verify", str(f))
    assert code == 2


def test_nonsymmetric_b0_extend_refusal(tmp_path, capsys):
    # a standard pentad with a skew B0: extension works, pairing is refused
    doc2 = {
        "field": "rational",
        "algebra": {"dim": 2, "brackets": []},
        "representation": {"dim": 2, "operators": [
            [["1", "0"], ["0", "0"]], [["0", "0"], ["0", "1"]]]},
        "b0": [["0", "1"], ["-1", "0"]],
        "module": {"dim": 1, "pi": [[["1"]], [["0"]]],
                   "varpi": [[["-1"]], [["0"]]], "pairing0": [["1"]]},
    }
    f = tmp_path / "skew.json"
    f.write_text(json.dumps(doc2))
    code, out, _ = run(capsys, "extend", str(f))
    assert code == 0
    assert "refused (B0 is not symmetric)" in out
