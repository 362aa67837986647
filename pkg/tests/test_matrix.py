"""
WHQ Engine - Exact Matrix Tests

Kronecker convention, elimination, inverses and subspaces.
"""
import pytest
from fractions import Fraction
from pathlib import Path
import sys

from hypothesis import given, settings as hsettings, strategies as st

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.errors import Singular
from src.exact import QQ, PrimeField
from src.matrix import ExactMatrix


def M(rows, field=QQ):
    return ExactMatrix.from_rows(rows, field)


small = st.integers(min_value=-3, max_value=3)
square3 = st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3)


class TestConstruction:
    """Sparse storage and equality."""

    def test_zeros_dropped(self):
        m = M([[0, 1], [0, 0]])
        assert dict(m.entries) == {(0, 1): Fraction(1)}

    def test_equality_is_exact(self):
        assert M([[1, 2]]) == M([[Fraction(2, 2), 2]])
        assert M([[1, 2]]) != M([[1, 3]])

    def test_out_of_range_entry(self):
        with pytest.raises(IndexError):
            ExactMatrix.from_entries(2, 2, QQ, {(2, 0): 1})

    def test_permutation(self):
        p = ExactMatrix.permutation([1, 2, 0], QQ)
        e0 = M([[1], [0], [0]])
        assert p @ e0 == M([[0], [1], [0]])


class TestKron:
    """Row-major convention: e_i ⊗ e_j -> i*d + j."""

    def test_basis_vectors(self):
        e = [M([[1], [0]]), M([[0], [1]])]
        for i in range(2):
            for j in range(2):
                v = e[i].kron(e[j])
                assert v.to_rows()[i * 2 + j] == [1]
                assert v.shape == (4, 1)

    def test_mixed_product(self):
        a, b = M([[1, 2], [0, 1]]), M([[0, 1], [1, 0]])
        c, d = M([[2, 0], [1, 1]]), M([[1, 1], [0, 1]])
        assert a.kron(b) @ c.kron(d) == (a @ c).kron(b @ d)


class TestElimination:
    """Rank, RREF, kernel and cokernel."""

    def test_rank_and_rref(self):
        m = M([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
        assert m.rank == 2
        rref, pivots = m.rref()
        assert pivots == (0, 1)
        assert rref == M([[1, 0, 1], [0, 1, 1]])

    def test_kernel(self):
        m = M([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
        k = m.kernel()
        assert k.shape == (3, 1)
        assert (m @ k).is_zero()

    def test_cokernel(self):
        m = M([[1, 0], [0, 1], [1, 1]])
        q = m.cokernel()
        assert q.shape == (1, 3)
        assert (q @ m).is_zero()

    def test_rank_factorization(self):
        m = M([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
        c, r = m.rank_factorization()
        assert c.shape == (3, 2) and r.shape == (2, 3)
        assert c @ r == m

    def test_same_column_space(self):
        a = M([[1, 0], [0, 1], [0, 0]])
        b = M([[1, 1], [1, -1], [0, 0]])
        assert a.same_column_space(b)
        assert not a.same_column_space(M([[1], [0], [0]]))

    def test_prime_field_rank_drops(self):
        # det = 5 vanishes in GF(5)
        rows = [[1, 2], [-1, 3]]
        assert M(rows).rank == 2
        assert M(rows, PrimeField(5)).rank == 1


class TestInverse:
    """Inverses and their failure evidence."""

    def test_inverse(self):
        m = M([[2, 1], [1, 1]])
        assert m @ m.inverse() == ExactMatrix.identity(2, QQ)

    def test_singular_reports_deficiency(self):
        with pytest.raises(Singular) as info:
            M([[1, 2], [2, 4]]).inverse("f")
        assert info.value.rank == 1
        assert info.value.deficiency == 1
        assert "f is singular" in str(info.value)

    def test_right_inverse(self):
        q = M([[1, 0, 1], [0, 1, 1]])
        assert q @ q.right_inverse() == ExactMatrix.identity(2, QQ)

    @hsettings(max_examples=40, deadline=None)
    @given(square3)
    def test_inverse_or_singular(self, rows):
        m = M(rows)
        if m.rank == 3:
            assert m.inverse() @ m == ExactMatrix.identity(3, QQ)
        else:
            with pytest.raises(Singular):
                m.inverse()


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
