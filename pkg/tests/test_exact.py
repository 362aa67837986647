"""
WHQ Engine - Exact Scalar Tests

Field axioms for the rationals and GF(p), and misuse errors.
"""
import pytest
from fractions import Fraction
from pathlib import Path
import sys

from hypothesis import given, strategies as st

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.errors import DivisionByZero, MixedFields
from src.exact import QQ, PrimeField, Residue, div, mul, parse_field

P = 7
GF7 = PrimeField(P)

rationals = st.fractions(max_denominator=50)
residues = st.integers(min_value=0, max_value=P - 1).map(lambda v: Residue(v, P))


class TestRationalField:
    """Arithmetic over Q."""

    @given(rationals, rationals, rationals)
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(rationals.filter(lambda x: x != 0))
    def test_multiplicative_inverse(self, a):
        assert div(QQ.one, a) * a == QQ.one

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            div(Fraction(1), Fraction(0))

    def test_parse_and_format(self):
        assert QQ.parse(" -3/6 ") == Fraction(-1, 2)
        assert QQ.format(Fraction(4, 2)) == "2"
        assert QQ.format(Fraction(-1, 2)) == "-1/2"

    def test_bad_literal(self):
        with pytest.raises(ValueError):
            QQ.parse("one half")


class TestPrimeField:
    """Arithmetic over GF(p)."""

    @given(residues, residues, residues)
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(residues.filter(lambda x: bool(x)))
    def test_multiplicative_inverse(self, a):
        assert a * (GF7.one / a) == GF7.one

    def test_reduction(self):
        assert Residue(9, P) == Residue(2, P)
        assert -Residue(1, P) == Residue(6, P)

    def test_rational_literal(self):
        # 1/2 = 4 in GF(7)
        assert GF7.parse("1/2") == Residue(4, P)
        assert GF7.format(GF7.parse("1/2")) == "4"

    def test_zero_division(self):
        with pytest.raises(DivisionByZero):
            Residue(3, P) / Residue(0, P)

    def test_not_prime(self):
        with pytest.raises(ValueError):
            PrimeField(6)

    def test_mixed_fields(self):
        with pytest.raises(MixedFields):
            mul(Residue(1, P), Fraction(1, 2))
        with pytest.raises(MixedFields):
            Residue(1, 5) + Residue(1, P)


class TestParseField:
    """Field names used by settings and the CLI."""

    @pytest.mark.parametrize("name", ["rational", "Q", " qq "])
    def test_rationals(self, name):
        assert parse_field(name) == QQ

    def test_prime(self):
        assert parse_field("11") == PrimeField(11)

    @pytest.mark.parametrize("name", ["reals", "4"])
    def test_rejects(self, name):
        with pytest.raises(ValueError):
            parse_field(name)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
