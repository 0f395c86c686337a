"""Command line surface: documents in, reports out, stable exit codes."""

import hashlib
import io
import json

import pytest

from shadowcalc import (example, shadow_from_json, shadow_to_json, theta_cone,
                        validate_shadow)
from shadowcalc.cli import main


@pytest.fixture()
def run(capsys):
    def invoke(*argv):
        rc = main(list(argv))
        captured = capsys.readouterr()
        return rc, captured.out, captured.err
    return invoke


@pytest.fixture()
def theta_file(tmp_path):
    path = tmp_path / "theta.json"
    path.write_text(json.dumps(shadow_to_json(theta_cone(1, 2, 3))))
    return str(path)


def write_doc(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


class TestEval:
    def test_text_report(self, run, theta_file):
        rc, out, err = run("eval", theta_file)
        assert rc == 0
        assert "bracket: -q^3 - q - q^-1 - q^-3" in out
        assert "ord at q=i: 1" in out
        assert "complete" in out

    def test_json_report(self, run, theta_file):
        rc, out, _ = run("eval", theta_file, "--format", "json")
        assert rc == 0
        doc = json.loads(out)
        assert doc["bracket"] == "-q^3 - q - q^-1 - q^-3"
        assert doc["ord_q_i"] == 1
        assert doc["complete"] is True
        assert doc["states"] == 1
        assert doc["cap"] == 19
        # sha of the raw input bytes, for pinning runs to documents
        raw = open(theta_file, "rb").read()
        assert doc["input"]["sha256"] == hashlib.sha256(raw).hexdigest()
        assert doc["graph_euler_bound"] == {"euler_upper_bound": 1,
                                            "red_boundary_vertices": 0}

    def test_states_listing(self, run, theta_file):
        rc, out, _ = run("eval", theta_file, "--format", "json", "--states")
        doc = json.loads(out)
        assert len(doc["state_values"]) == 1

    def test_deterministic_output(self, run, theta_file):
        _, first, _ = run("eval", theta_file, "--format", "json")
        _, second, _ = run("eval", theta_file, "--format", "json")
        assert first == second

    def test_out_flag_redirects(self, run, theta_file, tmp_path):
        target = tmp_path / "report.txt"
        rc, out, _ = run("eval", theta_file, "--out", str(target))
        assert rc == 0
        assert out == ""
        assert "bracket:" in target.read_text()

    def test_stdin_dash(self, run, monkeypatch):
        doc = json.dumps(shadow_to_json(theta_cone(1, 2, 3)))
        stdin = io.TextIOWrapper(io.BytesIO(doc.encode()), encoding="utf-8")
        monkeypatch.setattr("sys.stdin", stdin)
        rc, out, _ = run("eval", "-")
        assert rc == 0
        assert "ord at q=i: 1" in out

    def test_strict_incomplete_is_code_12(self, run, tmp_path):
        path = write_doc(tmp_path, "ladder.json", example("shadow-ladder")["data"])
        rc, out, _ = run("eval", path, "--cap", "10")
        assert rc == 0
        assert "INCOMPLETE" in out
        rc, _, _ = run("eval", path, "--cap", "10", "--strict")
        assert rc == 12

    def test_unbounded_is_code_12(self, run, tmp_path):
        path = write_doc(tmp_path, "sphere.json",
                         example("shadow-free-sphere")["data"])
        rc, _, err = run("eval", path)
        assert rc == 12

    def test_ribbon_section_for_links(self, run, tmp_path):
        path = write_doc(tmp_path, "g2.json",
                         example("shadow-threaded-g2")["data"])
        rc, out, _ = run("eval", path, "--format", "json")
        doc = json.loads(out)
        assert doc["components"] == 1
        assert doc["ord_q_i"] == -1
        assert doc["ribbon"]["ribbon_excluded"] is True
        assert doc["ribbon"]["genus_lower_bound"] == 1


class TestCompile:
    def test_emits_a_valid_shadow(self, run, tmp_path):
        path = write_doc(tmp_path, "trefoil.json", example("trefoil")["data"])
        rc, out, _ = run("compile", path)
        assert rc == 0
        shadow = shadow_from_json(json.loads(out))
        assert validate_shadow(shadow) == ()

    def test_report_wraps_shadow(self, run, tmp_path):
        path = write_doc(tmp_path, "trefoil.json", example("trefoil")["data"])
        rc, out, _ = run("compile", path, "--report")
        doc = json.loads(out)
        assert set(doc) == {"input", "shadow", "report"}
        ledger = doc["report"]["gleam_ledger"]
        for corners in ledger.values():
            assert sum(sign for _, sign, _ in corners) == 0

    def test_compile_then_eval_round_trip(self, run, tmp_path):
        path = write_doc(tmp_path, "hopf.json", example("hopf")["data"])
        rc, out, _ = run("compile", path)
        compiled = write_doc(tmp_path, "hopf-shadow.json", json.loads(out))
        rc, out, _ = run("eval", compiled, "--format", "json")
        assert rc == 0
        assert json.loads(out)["components"] == 2


class TestSkein:
    def test_check_agrees(self, run, tmp_path):
        path = write_doc(tmp_path, "trefoil.json", example("trefoil")["data"])
        rc, out, _ = run("skein", path, "--check")
        assert rc == 0
        assert "agrees" in out

    def test_graph_diagram_rejected(self, run, tmp_path):
        path = write_doc(tmp_path, "theta.json", example("theta")["data"])
        rc, _, err = run("skein", path)
        assert rc == 10


class TestClosedForm:
    def test_tet_all_twos(self, run):
        rc, out, _ = run("closed-form", "tet", "2", "2", "2", "2", "2", "2")
        assert rc == 0
        assert "ord at q=i: -2" in out
        assert "holds" in out

    def test_inadmissible_reports_zero(self, run):
        rc, out, _ = run("closed-form", "theta", "1", "1", "1")
        assert rc == 0
        assert "value 0" in out
        assert "infinity" in out

    def test_arity_checked(self, run):
        rc, _, err = run("closed-form", "tet", "2", "2")
        assert rc == 2


class TestVerify:
    def test_reports_each_state(self, run, theta_file):
        rc, out, _ = run("verify", theta_file)
        assert rc == 0
        assert "0 bound failures" in out
        assert "ord 1 >= 1" in out


class TestExamples:
    def test_listing(self, run):
        rc, out, _ = run("examples")
        assert rc == 0
        assert "trefoil" in out
        assert "shadow-ladder" in out

    def test_single_document(self, run):
        rc, out, _ = run("examples", "trefoil")
        assert rc == 0
        assert json.loads(out) == example("trefoil")["data"]

    def test_unknown_name(self, run):
        rc, _, err = run("examples", "borromean")
        assert rc != 0


class TestExitCodes:
    def test_bad_json_is_10(self, run, tmp_path):
        path = tmp_path / "junk.json"
        path.write_text("{not json")
        rc, _, err = run("eval", str(path))
        assert rc == 10

    def test_bad_schema_is_10(self, run, tmp_path):
        path = write_doc(tmp_path, "bad.json", {"regions": []})
        rc, _, err = run("eval", str(path))
        assert rc == 10

    def test_invalid_shadow_is_11(self, run, tmp_path):
        doc = shadow_to_json(theta_cone(1, 2, 3))
        doc = json.loads(json.dumps(doc))
        doc["interior_edges"][0]["regions"][0] = "nope"
        path = write_doc(tmp_path, "invalid.json", doc)
        rc, _, err = run("eval", str(path))
        assert rc == 11

    def test_missing_file_is_11(self, run, tmp_path):
        rc, _, err = run("eval", str(tmp_path / "absent.json"))
        assert rc == 11

    def test_unknown_subcommand_is_2(self, run):
        with pytest.raises(SystemExit) as exc:
            run("frobnicate")
        assert exc.value.code == 2
