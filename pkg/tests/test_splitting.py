"""
WHQ Engine - Omega Splitting Tests

Ranks of the split images, the Ω identity suite and the (co)equalizer
realizations of the split objects.
"""
import pytest
from pathlib import Path
import sys

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.errors import ModuleLawFailure
from src.examples import build_example
from src.matrix import ExactMatrix
from src.moncat import mor_equal
from src.projections import base_monoid
from src.splitting import (
    OMEGA_KEYS,
    check_lemma_diagrams,
    check_omega_identities,
    equalizer,
    omega_family,
    regular_module,
    relative_tensor,
)
from src.structure import dualize, set_entry


class TestOmegaFamily:
    """Ω_σ^α and the dimensions of H ×_σ^α H."""

    def test_groupoid_ranks(self, p2):
        family = omega_family(p2)
        # composable pairs: 4 arrows times 2 matching arrows each
        assert [family.rank(s, a) for s, a in OMEGA_KEYS] == [8, 8, 8, 8]

    def test_loop_omegas_are_identities(self, s10):
        family = omega_family(s10)
        for key in OMEGA_KEYS:
            assert mor_equal(family.omega(*key), s10.id(2))
            assert family.rank(*key) == 100

    def test_splitting_factors(self, p2):
        family = omega_family(p2)
        for side, idx in OMEGA_KEYS:
            q, j = family.q(side, idx), family.j(side, idx)
            assert q @ j == ExactMatrix.identity(family.rank(side, idx), p2.field)
            assert j @ q == family.omega(side, idx).matrix

    def test_trivial(self, trivial):
        assert omega_family(trivial).rank("L", 1) == 1


class TestOmegaIdentities:
    """Idempotency and compatibility with μ."""

    @pytest.mark.parametrize("name", ["trivial", "group-z3", "groupoid-pair", "steiner-ag3"])
    def test_suite_passes(self, name):
        report = check_omega_identities(build_example(name), max_workers=1)
        assert report.passed, report.failures()
        assert len(report.lines) == 8

    def test_dual(self, p2):
        assert check_omega_identities(dualize(p2), max_workers=1).passed


class TestDiagrams:
    """Coequalizers and equalizers realizing the split objects."""

    @pytest.mark.parametrize("name", ["group-s3", "groupoid-pair", "steiner-ag3"])
    def test_diagrams_commute(self, name):
        report = check_lemma_diagrams(build_example(name), max_workers=1)
        assert report.passed, report.failures()
        assert len(report.lines) == 10

    def test_dual(self, p2):
        assert check_lemma_diagrams(dualize(p2), max_workers=1).passed

    def test_skipped_without_premises(self, p2):
        broken = set_entry(p2, "comult", (3, 0), 1)
        report = check_lemma_diagrams(broken, max_workers=1)
        assert report.skipped
        assert not report.passed
        assert any("PremiseFailure" in note for note in report.notes)

    def test_relative_tensor_rank(self, p2):
        base = base_monoid(p2, "L")
        rank, action = regular_module(p2, "L", base)
        coeq = relative_tensor(p2, rank, action, "L", base)
        assert coeq.coequalizes()
        assert coeq.rank == omega_family(p2).rank("L", 1)

    def test_bad_module(self, p2):
        base = base_monoid(p2, "L")
        with pytest.raises(ModuleLawFailure):
            relative_tensor(p2, 4, ExactMatrix.zeros(4, 8, p2.field), "L", base)

    def test_equalizer(self):
        from src.exact import QQ

        left = ExactMatrix.from_rows([[1, 0], [0, 1]], QQ)
        right = ExactMatrix.from_rows([[1, 0], [0, 2]], QQ)
        assert equalizer(left, right) == ExactMatrix.from_rows([[1], [0]], QQ)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
