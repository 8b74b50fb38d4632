import pytest
from hypothesis import given, strategies as st

from nichols_roots.errors import DomainError, ExactDivisionError
from nichols_roots.qlaurent import (ONE, ZERO, LaurentPoly, Q1, Q2, b_poly, binomsum_sides,
                                    identity_suite, lesscrazysum_sides, mono, qbinom, qfact,
                                    qint, verify_identity)

from oracles import laurent_to_sympy, sympy_qbinom


def q_poly(*coeffs):
    return LaurentPoly.from_coeffs(coeffs, "q")


exponents = st.tuples(*[st.integers(-3, 3)] * 4)
laurent = st.dictionaries(exponents, st.integers(-5, 5), max_size=5).map(LaurentPoly)


class TestArithmetic:
    def test_zero_coefficients_are_dropped(self):
        p = LaurentPoly({(1, 0, 0, 0): 0, (0, 0, 0, 0): 2})
        assert p.terms == {(0, 0, 0, 0): 2}
        assert LaurentPoly({(2, 0, 0, 0): 0}) == ZERO

    @given(laurent, laurent, laurent)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a + b == b + a
        assert a - a == ZERO
        assert a * ONE == a

    @given(laurent, laurent)
    def test_exact_division_inverts_multiplication(self, a, b):
        if b.is_zero():
            return
        assert (a * b).exact_div(b) == a

    def test_inexact_division_raises(self):
        with pytest.raises(ExactDivisionError):
            (ONE + mono(q=1)).exact_div(ONE - mono(q=1))

    def test_negative_powers_only_for_monomials(self):
        assert mono(q=2, r=-1) ** -2 == mono(q=-4, r=2)
        with pytest.raises(Exception):
            (ONE + mono(q=1)) ** -1

    def test_evaluate(self):
        p = mono(3, q=2, r=-1) + ONE
        assert p.evaluate({"q": 2, "r": 4}) == 4


class TestQNumbers:
    def test_qint_examples(self):
        assert qint(0) == ZERO
        assert qint(3) == q_poly(1, 1, 1)
        assert qint(-2) == -q_poly(1, 1)

    def test_qbinom_examples(self):
        assert qbinom(2, 1) == q_poly(1, 1)
        assert qbinom(4, 2) == q_poly(1, 1, 2, 1, 1)
        assert qbinom(3, 5) == ZERO
        assert qbinom(3, -1) == ZERO

    def test_qbinom_negative_m(self):
        with pytest.raises(DomainError):
            qbinom(-1, 0)

    @pytest.mark.parametrize("m", range(0, 11))
    def test_qbinom_matches_sympy(self, m):
        for i in range(-1, m + 2):
            ours = qbinom(m, i)
            ref = sympy_qbinom(m, i)
            if ours.is_zero():
                assert ref == 0
            else:
                assert laurent_to_sympy(ours) == ref

    def test_qbinom_at_one_is_binomial(self):
        from math import comb
        for m in range(10):
            for i in range(m + 1):
                assert qbinom(m, i).evaluate({"q": 1}) == comb(m, i)

    def test_qfact(self):
        assert qfact(0) == ONE
        assert qfact(3) == qint(1) * qint(2) * qint(3)

    def test_b_poly_examples(self):
        assert b_poly(0) == ONE
        assert b_poly(1) == ONE - mono(r=1)
        assert b_poly(2) == ONE - mono(r=1) - mono(q=1, r=1) + mono(q=1, r=2)

    def test_Q_examples(self):
        assert Q1(0, 0) == ONE
        assert Q2(0, 0) == ONE


class TestIdentities:
    def test_named_examples(self):
        assert verify_identity("pascal_q", m=5, i=2)
        assert verify_identity("binomsum", t=2, k=5)
        assert verify_identity("lesscrazysum", m=4, n=-2)
        assert verify_identity("Q1eqQ2", 3, 4)

    def test_unknown_identity(self):
        with pytest.raises(DomainError):
            verify_identity("pascal", m=1, i=0)
        with pytest.raises(DomainError):
            verify_identity("binomsum", t=1)

    def test_full_suite(self):
        failures = [(name, params) for name, params, ok in identity_suite() if not ok]
        assert failures == []

    def test_binomsum_is_not_vacuous(self):
        # Both sides are nontrivial and a shifted right side no longer matches.
        lhs, rhs = binomsum_sides(2, 5)
        assert not lhs.is_zero()
        assert lhs != rhs * mono(q=1)
        lhs, rhs = lesscrazysum_sides(3, 1)
        assert len(lhs.terms) > 1
        assert lhs != rhs + mono(t=1)

    def test_Q1_differs_from_shifted_Q2(self):
        assert Q1(2, 3) != Q2(3, 2)

    @given(st.integers(0, 12), st.integers(0, 12))
    def test_symmetry(self, m, i):
        if i <= m:
            assert qbinom(m, i) == qbinom(m, m - i)
