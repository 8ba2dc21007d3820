import pytest

from homtwist.polyalg import Poly, PolyEndo, enumerate_monomials
from homtwist.scalars import QLaurent

X = Poly.x()
Y = Poly.y()


def alpha_q():
    return PolyEndo.diagonal(QLaurent.q_power(2), QLaurent.q_power(1))


class TestArithmetic:
    def test_product(self):
        assert X * Y == Poly.monomial(1, 1)

    def test_binomial(self):
        assert (X + Y) * (X + Y) == Poly.parse("x^2 + 2*x*y + y^2")

    def test_mul_zero(self):
        assert Poly.parse("x^2 + y") * Poly.zero() == Poly.zero()


class TestDerivatives:
    def test_power_rule_y(self):
        assert Poly.parse("x^2*y").partial("y") == Poly.parse("x^2")

    def test_power_rule_x(self):
        assert Poly.parse("x^2*y").partial("x") == Poly.parse("2*x*y")

    def test_constant(self):
        assert Poly.parse("5").partial("x") == Poly.zero()

    def test_leibniz_rule_on_monomials(self):
        monos = enumerate_monomials(3)
        for p in monos:
            for r in monos:
                for var in ("x", "y"):
                    lhs = (p * r).partial(var)
                    rhs = p.partial(var) * r + p * r.partial(var)
                    assert lhs == rhs


class TestEndomorphisms:
    def test_monomial_weight(self):
        # x^i y^j picks up q^(2i+j)
        endo = alpha_q()
        for i in range(4):
            for j in range(4):
                p = Poly.monomial(i, j)
                assert endo(p) == p.scaled(QLaurent.q_power(2 * i + j))

    def test_identity(self):
        p = Poly.parse("x^3 + 2*x*y - y^2")
        assert PolyEndo.identity()(p) == p

    def test_substitution(self):
        assert alpha_q()(X * Y) == (X * Y).scaled(QLaurent.q_power(3))

    def test_multiplicativity(self):
        endo = alpha_q()
        monos = enumerate_monomials(3)
        for p in monos:
            for r in monos:
                assert endo(p * r) == endo(p) * endo(r)

    def test_commutes_with_grading_for_diagonal_endo(self):
        endo = alpha_q()
        p = Poly.parse("x^2 + x*y + y + 1")
        for n in range(4):
            assert endo(p).graded_component(n) == endo(p.graded_component(n))


class TestGrading:
    def test_graded_component(self):
        p = Poly.parse("x^2 + x*y + y")
        assert p.graded_component(2) == Poly.parse("x^2 + x*y")
        assert p.graded_component(1) == Poly.parse("y")

    def test_zero_cases(self):
        assert Poly.zero().graded_component(3) == Poly.zero()
        assert Poly.parse("x^3").graded_component(2) == Poly.zero()

    def test_components_sum_to_whole(self):
        p = Poly.parse("x^3 + 2*x*y - 5 + y^2")
        total = Poly.zero()
        for n in range(4):
            total = total + p.graded_component(n)
        assert total == p


class TestEnumeration:
    def test_degree_zero(self):
        assert enumerate_monomials(0) == [Poly.one()]

    def test_degree_one_order(self):
        assert enumerate_monomials(1) == [Poly.one(), X, Y]

    @pytest.mark.parametrize("d", [0, 1, 2, 3, 5])
    def test_count(self, d):
        assert len(enumerate_monomials(d)) == (d + 1) * (d + 2) // 2


class TestTextForm:
    @pytest.mark.parametrize(
        "text",
        ["0", "1", "x", "q^2*x^2*y + 3*x", "x^2 - y^2", "(q + 1)*x*y", "-x + 2"],
    )
    def test_roundtrip(self, text):
        p = Poly.parse(text)
        assert Poly.parse(str(p)) == p

    def test_rejects_negative_exponent(self):
        with pytest.raises(ValueError):
            Poly({(-1, 0): QLaurent.one()})
