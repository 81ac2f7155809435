import json
import subprocess
import sys

import pytest

from conftest import D9
from schubitope import diagrams
from schubitope.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def d9_file(tmp_path):
    path = tmp_path / "d9.json"
    path.write_text(json.dumps(diagrams.to_json_dict(D9)))
    return str(path)


class TestVertices:
    def test_skyline_json(self, capsys):
        code, out, _ = run_cli(capsys, "vertices", "--skyline", "1,0,3", "--format", "json")
        assert code == 0
        assert out.strip() == '{"vertices":[[1,0,3],[1,3,0],[3,0,1],[3,1,0]]}'

    def test_empty_skyline(self, capsys):
        code, out, _ = run_cli(capsys, "vertices", "--skyline", "0,0", "--format", "json")
        assert code == 0
        assert out.strip() == '{"vertices":[[0,0]]}'

    def test_text_format(self, capsys):
        code, out, _ = run_cli(capsys, "vertices", "--skyline", "1,0,3", "--format", "text")
        assert code == 0
        assert out.splitlines() == ["1,0,3", "1,3,0", "3,0,1", "3,1,0"]

    def test_rothe_source(self, capsys):
        code, out, _ = run_cli(capsys, "vertices", "--rothe", "1432")
        assert code == 0
        got = set(map(tuple, json.loads(out)["vertices"]))
        assert (0, 2, 1, 0) in got


class TestTheta:
    def test_d9_breakdown(self, capsys, d9_file):
        code, out, _ = run_cli(capsys, "theta", "--diagram", d9_file, "--set", "1,3")
        assert code == 0
        assert out.splitlines() == ["7", "columns: 2,1,1,2,1"]

    def test_json(self, capsys, d9_file):
        code, out, _ = run_cli(capsys, "theta", "--diagram", d9_file, "--set", "1,3",
                               "--format", "json")
        assert json.loads(out) == {"set": [1, 3], "theta": 7, "columns": [2, 1, 1, 2, 1]}

    def test_rank_agrees(self, capsys, d9_file):
        code, out, _ = run_cli(capsys, "rank", "--diagram", d9_file, "--set", "1,3")
        assert code == 0
        assert out.splitlines()[0] == "7"


class TestConstructorsAndFill:
    def test_rothe_json(self, capsys):
        code, out, _ = run_cli(capsys, "rothe", "--perm", "1432")
        assert code == 0
        assert json.loads(out) == {"n": 4, "boxes": [[2, 2], [2, 3], [3, 2]]}

    def test_skyline_text(self, capsys):
        code, out, _ = run_cli(capsys, "skyline", "--alpha", "1,0,3", "--format", "text")
        assert out.strip() == "□..\n...\n□□□"

    def test_fill_grid(self, capsys):
        code, out, _ = run_cli(capsys, "fill", "--skyline", "1,0,3", "--perm", "213")
        assert code == 0
        assert out.strip() == "1..\n...\n222"

    def test_fill_d9(self, capsys, d9_file):
        code, out, _ = run_cli(capsys, "fill", "--diagram", d9_file, "--perm", "31524")
        assert code == 0
        assert len(out.strip().splitlines()) == 5


class TestHRep:
    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "hrep", "--skyline", "1,0,3")
        doc = json.loads(out)
        assert doc["total"] == 4
        assert {"S": [1], "b": 3} in doc["bounds"]

    def test_hform(self, capsys):
        code, out, _ = run_cli(capsys, "hrep", "--skyline", "1,0,3", "--format", "hform")
        assert out.splitlines()[0] == "3 4"
        assert len(out.splitlines()) == 7


class TestMemberAndBruhat:
    def test_member_true(self, capsys):
        code, out, _ = run_cli(capsys, "member", "--skyline", "1,0,3", "--point", "2,1,1")
        assert code == 0 and out.strip() == "true"

    def test_member_false(self, capsys):
        code, out, _ = run_cli(capsys, "member", "--skyline", "1,0,3", "--point", "4,0,0")
        assert code == 0 and out.strip() == "false"

    def test_member_rational_point(self, capsys):
        code, out, _ = run_cli(capsys, "member", "--skyline", "1,0,3",
                               "--point", "3/2,3/2,1")
        assert code == 0 and out.strip() == "true"

    def test_bruhat(self, capsys):
        code, out, _ = run_cli(capsys, "bruhat", "--u", "312", "--w", "321")
        assert code == 0 and out.strip() == "true"
        code, out, _ = run_cli(capsys, "bruhat", "--u", "321", "--w", "312", "--format", "json")
        assert code == 0 and json.loads(out) == {"leq": False}


class TestPolynomials:
    def test_key_json(self, capsys):
        code, out, _ = run_cli(capsys, "key", "--alpha", "1,0,3")
        doc = json.loads(out)
        assert doc["n"] == 3 and len(doc["terms"]) == 9

    def test_key_text(self, capsys):
        code, out, _ = run_cli(capsys, "key", "--alpha", "0,1", "--format", "text")
        assert out.strip() == "x1 + x2"

    def test_schubert_text(self, capsys):
        code, out, _ = run_cli(capsys, "schubert", "--perm", "132", "--format", "text")
        assert out.strip() == "x1 + x2"


class TestErrors:
    def test_bad_permutation_names_flag(self, capsys):
        code, _, err = run_cli(capsys, "rothe", "--perm", "1322")
        assert code == 2
        assert "--perm" in err and "permutation" in err

    def test_malformed_diagram_json(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, err = run_cli(capsys, "theta", "--diagram", str(path), "--set", "1")
        assert code == 2 and "--diagram" in err

    def test_diagram_missing_field(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"n": 2}))
        code, _, err = run_cli(capsys, "vertices", "--diagram", str(path))
        assert code == 2 and "boxes" in err

    def test_conflicting_sources_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["vertices", "--skyline", "1,0", "--rothe", "12"])
        assert exc.value.code == 2

    def test_missing_source_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["vertices"])
        assert exc.value.code == 2

    def test_part_exceeding_grid(self, capsys):
        code, _, err = run_cli(capsys, "vertices", "--skyline", "9,0")
        assert code == 2 and "exceeds" in err

    def test_dimension_overflow(self, capsys):
        code, _, err = run_cli(capsys, "vertices", "--rothe", "9,8,7,6,5,4,3,2,1")
        assert code == 2 and "budget" in err

    def test_point_dimension_mismatch(self, capsys):
        code, _, err = run_cli(capsys, "member", "--skyline", "1,0,3", "--point", "1,1")
        assert code == 2 and "--point" in err


class TestVerify:
    def test_small_scope_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n", "2", "--jobs", "1")
        assert code == 0
        assert out.splitlines()[-1].startswith("PASS:")

    def test_json_report(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n", "2", "--jobs", "1", "--format", "json")
        doc = json.loads(out)
        assert doc["status"] == "pass"
        assert all(c["counterexample"] is None for c in doc["checks"])

    def test_deterministic_given_seed(self, capsys):
        _, out1, _ = run_cli(capsys, "verify", "--n", "2", "--jobs", "1", "--seed", "42")
        _, out2, _ = run_cli(capsys, "verify", "--n", "2", "--jobs", "1", "--seed", "42")
        assert out1 == out2

    def test_worker_pool(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n", "2", "--jobs", "2")
        assert code == 0


class TestRoundTrips:
    """Every emitted JSON document must parse back and re-serialize bit-identically."""

    def test_vertices_doc(self, capsys):
        from schubitope.polytope import vertex_set_from_json_dict, vertex_set_to_json_dict

        _, out, _ = run_cli(capsys, "vertices", "--skyline", "1,0,3")
        doc = out.strip()
        again = json.dumps(vertex_set_to_json_dict(vertex_set_from_json_dict(json.loads(doc))),
                           separators=(",", ":"))
        assert doc == again

    def test_diagram_doc(self, capsys):
        _, out, _ = run_cli(capsys, "rothe", "--perm", "1432")
        doc = out.strip()
        again = json.dumps(diagrams.to_json_dict(diagrams.from_json_dict(json.loads(doc))),
                           separators=(",", ":"))
        assert doc == again

    def test_hrep_doc(self, capsys):
        from schubitope.polytope import hrep_from_json_dict, hrep_to_json_dict

        _, out, _ = run_cli(capsys, "hrep", "--skyline", "1,0,3")
        doc = out.strip()
        again = json.dumps(hrep_to_json_dict(hrep_from_json_dict(json.loads(doc))),
                           separators=(",", ":"))
        assert doc == again

    def test_polynomial_doc(self, capsys):
        from schubitope.polyoracle import poly_from_json_dict, poly_to_json_dict

        _, out, _ = run_cli(capsys, "key", "--alpha", "1,0,3")
        doc = out.strip()
        again = json.dumps(poly_to_json_dict(poly_from_json_dict(json.loads(doc))),
                           separators=(",", ":"))
        assert doc == again


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "schubitope.cli", "vertices", "--skyline", "1,0,3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == '{"vertices":[[1,0,3],[1,3,0],[3,0,1],[3,1,0]]}'
