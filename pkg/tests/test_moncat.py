"""
WHQ Engine - Morphism Calculus Tests
"""
import pytest
from pathlib import Path
import sys

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.errors import ArityMismatch, MixedFields, NotIdempotent, PositionOutOfRange
from src.exact import QQ, PrimeField
from src.matrix import ExactMatrix
from src.moncat import Mor, compose, convolve, identity, mor_equal, split_idempotent, swap, tensor, transpose


class TestComposition:
    """compose puts its first argument outermost."""

    def test_unit_law(self, s3):
        assert mor_equal(compose(s3.mu, tensor(s3.eta, s3.H)), s3.H)
        assert mor_equal(compose(s3.mu, tensor(s3.H, s3.eta)), s3.H)

    def test_arity_mismatch(self, s3):
        with pytest.raises(ArityMismatch):
            compose(s3.mu, s3.mu)

    def test_mixed_fields(self):
        a = identity(1, 2, QQ)
        b = identity(1, 2, PrimeField(3))
        with pytest.raises(MixedFields):
            compose(a, b)

    def test_wrong_shape(self):
        with pytest.raises(ArityMismatch):
            Mor(1, 1, 2, ExactMatrix.identity(3, QQ))


class TestSwap:
    """Symmetry on tensor powers."""

    def test_involution(self, z3):
        c = z3.c
        assert mor_equal(compose(c, c), z3.id(2))

    def test_naturality(self, s3):
        f = tensor(s3.antipode, s3.H)
        g = tensor(s3.H, s3.antipode)
        assert mor_equal(compose(s3.c, f), compose(g, s3.c))

    def test_position_range(self):
        with pytest.raises(PositionOutOfRange):
            swap(2, 2, 2, QQ)

    def test_middle_swap(self):
        s = swap(3, 2, 2, QQ)
        # e0⊗e1⊗e0 (index 2) -> e0⊗e0⊗e1 (index 1)
        assert s.matrix[1, 2] == 1


class TestConvolution:
    """f∗g = μ∘(f⊗g)∘δ."""

    def test_antipode_identity(self, s3):
        eta_eps = s3.eta_eps
        assert mor_equal(convolve(s3, s3.H, s3.antipode), eta_eps)

    def test_rejects_non_endomorphism(self, s3):
        with pytest.raises(ArityMismatch):
            convolve(s3, s3.mu, s3.H)


class TestSplitting:
    """Idempotents split as inj∘proj with proj∘inj = id."""

    def test_projection_splits(self):
        e = ExactMatrix.from_rows([[1, 1], [0, 0]], QQ)
        split = split_idempotent(Mor(1, 1, 2, e))
        assert split.rank == 1
        assert split.proj @ split.inj == ExactMatrix.identity(1, QQ)
        assert split.inj @ split.proj == e

    def test_not_idempotent(self):
        with pytest.raises(NotIdempotent):
            split_idempotent(Mor(1, 1, 2, ExactMatrix.from_rows([[2, 0], [0, 1]], QQ)))

    def test_transpose(self, s3):
        assert mor_equal(transpose(transpose(s3.mu)), s3.mu)
        assert transpose(s3.mu).src_arity == 1


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
