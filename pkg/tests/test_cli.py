"""
WHQ Engine - Command Line Tests

Runs ``whq.main`` in-process against temporary structure files.
"""
import json
import pytest
from pathlib import Path
import sys

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from whq import main
from src.structure import set_entry
from src.structure_io import load_structure, save_structure
from src.synthesis import strip_lambda


@pytest.fixture
def z2_file(tmp_path):
    path = tmp_path / "z2.json"
    assert main(["example", "group", "--group", "z2", "--out", str(path)]) == 0
    return path


class TestExample:
    """Bundled example emission."""

    def test_writes_file(self, z2_file):
        S = load_structure(z2_file)
        assert S.dim == 2 and S.antipode is not None

    def test_prime_field(self, tmp_path):
        path = tmp_path / "z3.json"
        assert main(["example", "group-z3", "--prime", "5", "--out", str(path)]) == 0
        assert json.loads(path.read_text())["field"] == {"kind": "prime", "p": 5}

    def test_stdout(self, capsys):
        assert main(["example", "trivial"]) == 0
        assert json.loads(capsys.readouterr().out)["dim"] == 1

    def test_unknown_group(self):
        assert main(["example", "group", "--group", "a5"]) == 2


class TestCheck:
    """Identity suites and exit codes."""

    def test_all_suites(self, z2_file, tmp_path):
        out = tmp_path / "report.json"
        assert main(["check", str(z2_file), "--suite", "all", "--json", str(out)]) == 0
        suites = [r["suite"] for r in json.loads(out.read_text())]
        assert suites == ["premises", "projections", "omega", "lemma-diagrams", "galois", "prop27", "axioms"]

    def test_failure_exit_code(self, p2, tmp_path, capsys):
        path = save_structure(set_entry(p2, "comult", (3, 0), 1), tmp_path / "broken.json")
        assert main(["check", str(path), "--suite", "premises"]) == 1
        assert "counit-left: FAILS" in capsys.readouterr().out

    def test_axioms_skipped_without_antipode(self, p2, tmp_path, capsys):
        path = save_structure(strip_lambda(p2), tmp_path / "bare.json")
        assert main(["check", str(path), "--suite", "axioms"]) == 1
        assert "[axioms] SKIPPED" in capsys.readouterr().out

    def test_gated_suite_without_premises_report(self, p2, tmp_path, capsys):
        path = save_structure(set_entry(p2, "comult", (3, 0), 1), tmp_path / "broken.json")
        assert main(["check", str(path), "--suite", "prop27"]) == 1
        assert "[prop27] SKIPPED" in capsys.readouterr().out

    def test_missing_file(self, tmp_path):
        assert main(["check", str(tmp_path / "absent.json")]) == 2

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"dim": 0}')
        assert main(["check", str(path)]) == 2


class TestSynthesizeAndClassify:
    """End-to-end synthesis and classification."""

    def test_synthesize(self, p2, tmp_path):
        bare = save_structure(strip_lambda(p2), tmp_path / "bare.json")
        out = tmp_path / "with-antipode.json"
        assert main(["synthesize", str(bare), "--out", str(out)]) == 0
        assert load_structure(out).antipode.matrix == p2.antipode.matrix

    def test_synthesize_failure(self, idempotent_monoid, tmp_path, capsys):
        path = save_structure(idempotent_monoid, tmp_path / "monoid.json")
        assert main(["synthesize", str(path)]) == 1
        assert "NotInvertibleF" in capsys.readouterr().out

    def test_classify(self, p2, tmp_path, capsys):
        path = save_structure(p2, tmp_path / "p2.json")
        out = tmp_path / "classification.json"
        assert main(["classify", str(path), "--json", str(out)]) == 0
        assert "verdict: WeakHopfAlgebra" in capsys.readouterr().out
        assert json.loads(out.read_text())["dual_verdict"] == "WeakHopfAlgebra"

    def test_dualize(self, z2_file, tmp_path):
        out = tmp_path / "dual.json"
        assert main(["dualize", str(z2_file), "--out", str(out)]) == 0
        assert json.loads(out.read_text())["mode"] == "coquasigroup"


class TestEvalAndPerturb:
    """Expression evaluation and perturbation."""

    def test_equal_expressions(self, z2_file, capsys):
        assert main(["eval", str(z2_file), "--expr", "piL * id(1)", "--equals", "id(1)"]) == 0
        assert "==" in capsys.readouterr().out

    def test_unequal_expressions(self, z2_file):
        assert main(["eval", str(z2_file), "--expr", "lambda", "--equals", "eta . eps"]) == 1

    def test_print_matrix(self, z2_file, capsys):
        assert main(["eval", str(z2_file), "--expr", "eta . eps"]) == 0
        assert "H^1 -> H^1" in capsys.readouterr().out

    def test_syntax_error(self, z2_file, capsys):
        assert main(["eval", str(z2_file), "--expr", "mu . ("]) == 2
        assert "offset 7" in capsys.readouterr().err

    def test_perturb(self, z2_file, tmp_path):
        out = tmp_path / "perturbed.json"
        assert main(["perturb", str(z2_file), "--target", "mult", "--seed", "3", "--out", str(out)]) == 0
        assert load_structure(out).mu.matrix != load_structure(z2_file).mu.matrix


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
