"""
WHQ Engine - Structure Tests

Builders, premise validation, dualization and perturbation.
"""
import pytest
from pathlib import Path
import sys

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.errors import NotAGroup, NotAGroupoid, NotAUnitalMagma, NotIPLoop
from src.examples import build_example, example_names, resolve_name
from src.exact import PrimeField
from src.moncat import compose, mor_equal, tensor
from src.structure import (
    Arrow,
    Mode,
    dualize,
    group_algebra,
    groupoid_algebra,
    loop_algebra,
    magma_algebra,
    perturb,
    perturbation_site,
    set_entry,
    validate_premises,
)

EXAMPLES = ["trivial", "group-z2", "group-z3", "group-s3", "groupoid-pair", "steiner-ag3"]


class TestBundledExamples:
    """Every bundled example satisfies its premises, in both modes."""

    def test_catalog(self):
        assert example_names() == EXAMPLES

    @pytest.mark.parametrize("name", EXAMPLES)
    def test_premises(self, name):
        S = build_example(name)
        report = validate_premises(S, max_workers=1)
        assert report.passed, report.failures()
        assert report.mode == "quasigroup"

    @pytest.mark.parametrize("name", EXAMPLES)
    def test_dual_premises(self, name):
        report = validate_premises(dualize(build_example(name)), max_workers=1)
        assert report.passed, report.failures()
        assert report.mode == "coquasigroup"

    def test_prime_field_build(self):
        S = build_example("group-z3", PrimeField(5))
        assert str(S.field) == "GF(5)"
        assert validate_premises(S, max_workers=1).passed

    def test_group_alias(self):
        assert resolve_name("group", "z2") == "group-z2"
        assert resolve_name("group") == "group-s3"
        with pytest.raises(ValueError):
            resolve_name("group", "a5")
        with pytest.raises(ValueError):
            resolve_name("no-such-example")

    def test_dimensions(self, trivial, s3, p2, s10):
        assert (trivial.dim, s3.dim, p2.dim, s10.dim) == (1, 6, 4, 10)
        assert p2.basis == ("e11", "e12", "e21", "e22")


class TestBuilders:
    """Input validation of the table builders."""

    def test_not_a_group(self):
        with pytest.raises(NotAGroup):
            group_algebra([[0, 1], [1, 1]])

    def test_non_associative_table_rejected_as_group(self):
        from src.examples import load_catalog
        from src.structure import steiner_loop_table

        table = steiner_loop_table(load_catalog()["examples"]["steiner-ag3"]["triples"])
        with pytest.raises(NotAGroup):
            group_algebra(table)

    def test_fano_steiner_loop_is_a_group(self):
        from src.structure import steiner_loop_table

        fano = [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 5, 6]]
        assert group_algebra(steiner_loop_table(fano)).dim == 8

    def test_loop_example_is_not_associative(self, s10):
        mu = s10.mu
        assert not mor_equal(compose(mu, tensor(mu, s10.H)), compose(mu, tensor(s10.H, mu)))

    def test_magma_algebra(self, right_ip_loop):
        assert right_ip_loop.antipode is None
        assert validate_premises(right_ip_loop, max_workers=1).passed
        assert validate_premises(dualize(right_ip_loop), max_workers=1).passed
        with pytest.raises(NotAUnitalMagma):
            magma_algebra([[1, 1], [1, 1]])

    def test_right_ip_loop_rejected(self):
        # (xy)y = x holds, 1·(1·2) = 3 does not
        table = [
            [0, 1, 2, 3, 4, 5],
            [1, 0, 4, 5, 3, 2],
            [2, 3, 0, 4, 5, 1],
            [3, 2, 5, 0, 1, 4],
            [4, 5, 1, 2, 0, 3],
            [5, 4, 3, 1, 2, 0],
        ]
        with pytest.raises(NotIPLoop) as info:
            loop_algebra(table)
        assert info.value.condition == "inverse-property"

    def test_not_ip_loop(self):
        with pytest.raises(NotIPLoop) as info:
            loop_algebra([[0, 1, 2], [1, 1, 0], [2, 0, 1]])
        assert info.value.condition == "latin-square"

    def test_bad_groupoid(self):
        arrows = [Arrow(0, 0, "a"), Arrow(1, 0, "b")]
        composition = [[0, None], [None, None]]
        with pytest.raises(NotAGroupoid):
            groupoid_algebra(2, arrows, composition)

    def test_groupoid_antipode(self, p2):
        # λ(e_ij) = e_ji
        assert p2.antipode.matrix == p2.antipode.matrix.transpose()
        assert p2.antipode.matrix[2, 1] == 1 and p2.antipode.matrix[0, 0] == 1


class TestDualize:
    """Transposition of every structure map."""

    def test_involution(self, p2):
        back = dualize(dualize(p2))
        assert back.mode is Mode.QUASIGROUP
        for attr in ("eta", "mu", "eps", "delta", "antipode"):
            assert mor_equal(getattr(back, attr), getattr(p2, attr))
        assert back.name == p2.name

    def test_roles_swap(self, s3):
        D = dualize(s3)
        assert D.mode is Mode.COQUASIGROUP
        assert D.mu.matrix == s3.delta.matrix.transpose()
        assert D.eps.matrix == s3.eta.matrix.transpose()
        assert D.basis[0].endswith("*")


class TestPerturbation:
    """Seeded single-entry changes."""

    def test_deterministic(self, p2):
        a = perturb(p2, "mult", 7)
        b = perturb(p2, "mult", 7)
        assert a.mu.matrix == b.mu.matrix
        assert a.mu.matrix != p2.mu.matrix

    def test_site_changes_one_entry(self, p2):
        index, old, new = perturbation_site(p2, "comult", 3)
        assert old != new
        out = perturb(p2, "comult", 3)
        assert out.delta.matrix[index] == new

    def test_unknown_target(self, p2):
        with pytest.raises(ValueError):
            perturb(p2, "antipode", 1)

    def test_broken_counit_fails_premises(self, p2):
        broken = set_entry(p2, "comult", (3, 0), 1)
        report = validate_premises(broken, max_workers=1)
        assert not report.passed
        assert "counit-left" in report.failures()

    def test_nilpotent_product_fails_a2(self, z2):
        # z·z = 0 keeps δ multiplicative but breaks ε(xyz) = ε(xy)ε(yz)
        broken = set_entry(z2, "mult", (0, 3), 0)
        report = validate_premises(broken, max_workers=1)
        assert report.verdict("a1")
        assert not report.verdict("a2-delta")

    def test_perturbed_product_entry(self, s3):
        broken = set_entry(s3, "mult", (0, 0), 2)
        assert not mor_equal(compose(broken.mu, broken.c), compose(s3.mu, s3.c))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
