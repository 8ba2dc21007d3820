from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from homtwist.scalars import Q, Q_INV, QLaurent


def ql(text):
    return QLaurent.parse(text)


class TestArithmetic:
    def test_distributivity_example(self):
        assert (Q + Q_INV) * Q == ql("q^2 + 1")

    def test_exponent_addition(self):
        assert QLaurent.q_power(2) * QLaurent.q_power(3) * QLaurent.q_power(4) == ql("q^9")

    def test_additive_inverse(self):
        a = ql("3*q^-1 + 1/2*q^2 - 7")
        assert (a + (-a)).is_zero()

    def test_zero_annihilates(self):
        assert ql("q^5 - 2") * QLaurent.zero() == QLaurent.zero()

    def test_power(self):
        assert (Q + 1) ** 2 == ql("q^2 + 2*q + 1")
        with pytest.raises(ValueError):
            Q ** (-1)


class TestSpecialize:
    def test_at_one(self):
        assert QLaurent.q_power(9).specialize(1) == 1

    def test_direct_evaluation(self):
        assert ql("q^2 + 1").specialize(2) == 5

    def test_reciprocal(self):
        assert Q_INV.specialize(Fraction(1, 2)) == 2

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            Q.specialize(0)


scalars = st.builds(
    QLaurent,
    st.dictionaries(
        st.integers(min_value=-5, max_value=5),
        st.fractions(min_value=-50, max_value=50, max_denominator=10),
        max_size=4,
    ),
)


class TestRingLaws:
    @given(scalars, scalars, scalars)
    def test_associativity_and_distributivity(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(scalars, scalars)
    def test_commutativity(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @given(scalars, scalars)
    def test_specialize_is_ring_morphism(self, a, b):
        q0 = Fraction(3, 2)
        assert (a * b).specialize(q0) == a.specialize(q0) * b.specialize(q0)
        assert (a + b).specialize(q0) == a.specialize(q0) + b.specialize(q0)

    @given(scalars, scalars)
    def test_canonical_equality(self, a, b):
        assert (a == b) == ((a - b).is_zero())


class TestTextForm:
    @pytest.mark.parametrize(
        "text",
        ["0", "1", "-1", "3*q^-1 + 1/2*q^2", "q", "-q^3", "2 - q", "q^-2 + q^2"],
    )
    def test_roundtrip(self, text):
        value = ql(text)
        assert QLaurent.parse(str(value)) == value

    def test_render_is_exponent_ascending(self):
        assert str(ql("q^2 + 3*q^-1")) == "3*q^-1 + q^2"

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            ql("q^^2")
        with pytest.raises(ValueError):
            ql("")
