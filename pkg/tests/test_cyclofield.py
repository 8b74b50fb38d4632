import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from nichols_roots.cyclofield import (FieldSpec, cyclotomic_poly, eval_monomial, evaluate_poly,
                                      mult_order, qfact_b_value)
from nichols_roots.errors import DomainError
from nichols_roots.freealg import Braiding2
from nichols_roots.qlaurent import b_poly, qbinom, qfact, Q1, Q2, mono

from conftest import qrs, scalars
from oracles import Q, laurent_to_sympy, to_complex


@st.composite
def field_elements(draw, order=12):
    field = FieldSpec(order)
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4),
                           min_size=field.degree, max_size=field.degree))
    z = field.zeta()
    out = field.zero
    for k, c in enumerate(coeffs):
        out = out + z ** k * c
    return out


class TestCyclotomicPoly:
    def test_examples(self):
        assert cyclotomic_poly(1).coeff_list("q") == [-1, 1]
        assert cyclotomic_poly(4).coeff_list("q") == [1, 0, 1]
        assert cyclotomic_poly(6).coeff_list("q") == [1, -1, 1]

    @pytest.mark.parametrize("n", range(1, 31))
    def test_matches_sympy(self, n):
        assert laurent_to_sympy(cyclotomic_poly(n)) == sympy.Poly(sympy.cyclotomic_poly(n, Q), Q)


class TestFieldArithmetic:
    @given(field_elements(), field_elements(), field_elements())
    def test_field_axioms(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        if b:
            assert (a / b) * b == a
            assert b * b.inverse() == 1

    @given(field_elements(), field_elements())
    def test_agrees_with_complex_numbers(self, a, b):
        assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-9
        assert abs(to_complex(a + b) - to_complex(a) - to_complex(b)) < 1e-9

    def test_canonical_representation(self):
        f = FieldSpec(6)
        z = f.zeta()
        assert z ** 2 == z - 1
        assert hash(z ** 2) == hash(z - 1)
        assert z ** 6 == 1 and z ** 3 == -1

    def test_embedding(self):
        z4 = FieldSpec(4).zeta()
        big = FieldSpec(12)
        assert big(z4) == big.zeta(4)
        assert big(z4) ** 2 == -1
        assert big(Fraction(1, 3)) * 3 == 1

    def test_zeta_outside_field(self):
        with pytest.raises(DomainError):
            FieldSpec(6).zeta(4)

    def test_roots_of_unity(self):
        assert len(FieldSpec(6).roots_of_unity()) == 6
        assert len(FieldSpec(3).roots_of_unity()) == 6
        assert len(FieldSpec(4).roots_of_unity()) == 4


class TestMultOrder:
    def test_examples(self):
        f = FieldSpec(6)
        assert mult_order(f.one) == 1
        assert mult_order(-f.one) == 2
        assert mult_order(f.zeta() ** 2) == 3
        assert mult_order(FieldSpec(1)(2)) == math.inf
        assert mult_order(FieldSpec(3).zeta()) == 3
        assert mult_order(-FieldSpec(3).zeta()) == 6

    def test_zero_has_no_order(self):
        with pytest.raises(DomainError):
            mult_order(FieldSpec(1).zero)

    @given(scalars())
    def test_order_is_minimal(self, e):
        t = mult_order(e)
        if t == math.inf:
            assert all(e ** d != 1 for d in range(1, 25))
        else:
            assert e ** t == 1
            assert all(e ** d != 1 for d in range(1, t))


class TestEvaluation:
    def test_eval_monomial(self):
        assert eval_monomial(0, 0, 0, qrs(2, 3, -1)) == 1
        assert eval_monomial(1, 2, 1, qrs(2, 3, -1)) == -18
        assert eval_monomial(3, 0, 1, qrs(1, FieldSpec(6).zeta(), -1)) == -1

    def test_qfact_b_value(self):
        assert qfact_b_value(0, qrs(2, 3, 5)) == 1
        assert qfact_b_value(2, qrs(2, 3, 5)) == 30
        assert qfact_b_value(1, qrs(2, 1, 5)) == 0

    @given(scalars(), scalars(), scalars())
    def test_specialization_is_a_homomorphism(self, q, r, s):
        """Identities proven over Z[q^+-1, r^+-1, s, t] survive evaluation."""
        br = Braiding2(q, r, q.field.one, s)
        for k in range(4):
            for m in range(4):
                assert evaluate_poly(Q1(k, m), br) == evaluate_poly(Q2(k, m), br)
        for m in range(1, 7):
            for i in range(m + 1):
                lhs = evaluate_poly(qbinom(m, i), br)
                rhs = evaluate_poly(qbinom(m - 1, i) * mono(q=i) + qbinom(m - 1, i - 1), br)
                assert lhs == rhs
        a, b = qfact(3) * b_poly(2), b_poly(3)
        assert evaluate_poly(a * b, br) == evaluate_poly(a, br) * evaluate_poly(b, br)


class TestModularImage:
    @given(field_elements(), field_elements())
    def test_is_a_ring_map(self, a, b):
        from nichols_roots.cyclofield import ModularImage
        image = ModularImage(a.field)
        p = image.p
        assert p % 12 == 1
        assert image(a * b) == image(a) * image(b) % p
        assert image(a + b) == (image(a) + image(b)) % p

    def test_root_has_exact_order(self):
        from nichols_roots.cyclofield import modular_root
        for n in (1, 3, 4, 6, 12):
            p, w = modular_root(n)
            assert pow(w, n, p) == 1
            assert all(pow(w, d, p) != 1 for d in range(1, n))
