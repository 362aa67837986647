"""
WHQ Engine - Structure File Tests
"""
import json
import pytest
from pathlib import Path
import sys

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.errors import StructureFormatError
from src.examples import build_example
from src.exact import PrimeField
from src.moncat import mor_equal
from src.structure import Mode, dualize
from src.structure_io import dumps, load_structure, loads, save_structure


def same_structure(a, b) -> bool:
    maps = all(mor_equal(getattr(a, m), getattr(b, m)) for m in ("eta", "mu", "eps", "delta"))
    lam = (a.antipode is None and b.antipode is None) or mor_equal(a.antipode, b.antipode)
    return maps and lam and a.mode is b.mode and a.basis == b.basis


MINIMAL = {
    "dim": 1,
    "unit": [1],
    "counit": ["1"],
    "mult": [{"i": 0, "j": 0, "k": 0, "v": 1}],
    "comult": [{"i": 0, "j": 0, "k": 0, "v": "1"}],
}


class TestRoundTrip:
    """Saving is canonical."""

    def test_save_and_load(self, p2, tmp_path):
        path = save_structure(p2, tmp_path / "p2.json")
        back = load_structure(path)
        assert same_structure(back, p2)
        assert back.name == "p2"

    def test_canonical_text(self, s10):
        text = dumps(s10)
        assert dumps(loads(text)) == text

    def test_dual_mode_survives(self, s3):
        back = loads(dumps(dualize(s3)))
        assert back.mode is Mode.COQUASIGROUP

    def test_prime_field(self):
        S = build_example("group-z3", PrimeField(7))
        data = json.loads(dumps(S))
        assert data["field"] == {"kind": "prime", "p": 7}
        assert loads(dumps(S)).field == PrimeField(7)

    def test_sparse_entries(self, z2):
        data = json.loads(dumps(z2))
        # group-like basis: one product and one coproduct entry per basis pair / element
        assert len(data["mult"]) == 4
        assert len(data["comult"]) == 2
        assert data["antipode"] == [["1", "0"], ["0", "1"]]

    def test_minimal_file(self):
        S = loads(json.dumps(MINIMAL))
        assert S.dim == 1 and S.antipode is None
        assert S.mode is Mode.QUASIGROUP


class TestMalformed:
    """Every format problem surfaces as StructureFormatError."""

    def test_not_json(self):
        with pytest.raises(StructureFormatError):
            loads("{dim: 2")

    def test_wrong_unit_length(self):
        with pytest.raises(StructureFormatError):
            loads(json.dumps({**MINIMAL, "unit": [1, 0]}))

    def test_index_out_of_range(self):
        bad = {**MINIMAL, "mult": [{"i": 1, "j": 0, "k": 0, "v": 1}]}
        with pytest.raises(StructureFormatError):
            loads(json.dumps(bad))

    def test_duplicate_entry(self):
        bad = {**MINIMAL, "mult": MINIMAL["mult"] * 2}
        with pytest.raises(StructureFormatError):
            loads(json.dumps(bad))

    def test_bad_literal(self):
        with pytest.raises(StructureFormatError):
            loads(json.dumps({**MINIMAL, "counit": ["one"]}))

    def test_rational_with_p(self):
        with pytest.raises(StructureFormatError):
            loads(json.dumps({**MINIMAL, "field": {"kind": "rational", "p": 3}}))

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_structure(tmp_path / "absent.json")


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
