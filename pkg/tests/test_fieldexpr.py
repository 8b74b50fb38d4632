import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nichols_roots.cyclofield import FieldSpec
from nichols_roots.fieldexpr import (Div, FieldExprError, Mul, Neg, Pow, Rational, Zeta, evaluate,
                                     parse_field_expr, parse_scalar, render, required_order,
                                     root_of_unity_label)

from oracles import to_complex

leaves = st.one_of(
    st.builds(Rational, st.integers(0, 40), st.integers(1, 9)),
    st.builds(Zeta, st.sampled_from([1, 2, 3, 4, 6, 12])),
)
trees = st.recursive(
    leaves,
    lambda sub: st.one_of(
        st.builds(Neg, sub),
        st.builds(Mul, sub, sub),
        st.builds(Div, sub, sub),
        st.builds(Pow, sub, st.integers(-3, 3)),
    ),
    max_leaves=8,
)


def reference(node):
    """Complex value of an expression, or None when it divides by zero."""
    if isinstance(node, Rational):
        return complex(Fraction(node.num, node.den))
    if isinstance(node, Zeta):
        return cmath.exp(2j * math.pi / node.order)
    if isinstance(node, Neg):
        v = reference(node.arg)
        return None if v is None else -v
    if isinstance(node, Pow):
        v = reference(node.base)
        if v is None or (abs(v) < 1e-12 and node.exp < 0):
            return None
        return v ** node.exp
    a, b = reference(node.left), reference(node.right)
    if a is None or b is None:
        return None
    if isinstance(node, Mul):
        return a * b
    return None if abs(b) < 1e-12 else a / b


class TestParser:
    def test_examples(self):
        assert parse_field_expr("zeta(6)^2") == Pow(Zeta(6), 2)
        assert parse_scalar("zeta(6)^2") == FieldSpec(6).zeta() ** 2
        assert parse_field_expr(" - 1 / 3 * zeta( 4 ) ") == Mul(Neg(Rational(1, 3)), Zeta(4))
        assert parse_field_expr("2/(3)") == Div(Rational(2), Rational(3))

    def test_lcm_embedding(self):
        a = parse_field_expr("-1/3 * zeta(4)")
        b = parse_field_expr("zeta(6)")
        field = FieldSpec(required_order(a, b))
        assert field.order == 12
        assert evaluate(a, field) == -field.zeta(4) / 3
        assert evaluate(a, field) ** 2 == Fraction(-1, 9)

    @pytest.mark.parametrize("text, offset", [("2^^3", 2), ("zeta(0)", 5), ("1/0", 2), ("(1", 2),
                                              ("1 +", 2), ("", 0), ("zeta 3", 5)])
    def test_errors_report_offsets(self, text, offset):
        with pytest.raises(FieldExprError) as info:
            parse_field_expr(text)
        assert info.value.position == offset
        assert str(info.value).endswith(f"at offset {offset}")

    def test_evaluation_errors(self):
        parse_field_expr("1/(0*zeta(3))")
        with pytest.raises(FieldExprError, match="division by zero"):
            parse_scalar("1/(0*zeta(3))")
        with pytest.raises(FieldExprError, match="does not lie"):
            evaluate(Zeta(4), FieldSpec(6))

    def test_zero_power_errors(self):
        with pytest.raises(FieldExprError):
            parse_scalar("(0)^-1")


@given(trees)
def test_render_round_trip(node):
    assert parse_field_expr(render(node)) == node


@given(trees)
def test_evaluation_matches_complex_numbers(node):
    field = FieldSpec(required_order(node))
    expected = reference(node)
    if expected is None or abs(expected) > 1e6:
        return
    try:
        value = evaluate(node, field)
    except FieldExprError:
        return
    assert abs(to_complex(value) - expected) < 1e-6 * max(1, abs(expected))


def test_root_of_unity_labels():
    f6 = FieldSpec(6)
    assert root_of_unity_label(f6, 0, False) == "1"
    assert root_of_unity_label(f6, 1, True) == "-zeta(6)"
    assert root_of_unity_label(f6, 2, False) == "zeta(6)^2"
    assert root_of_unity_label(f6, 2, True) == "-(zeta(6)^2)"
    for j in range(6):
        for neg in (False, True):
            value = parse_scalar(root_of_unity_label(f6, j, neg), f6)
            assert value == (-1 if neg else 1) * f6.zeta() ** j
