"""Braidings shared by the roots and acceptance tests."""
from fractions import Fraction

from nichols_roots.cyclofield import FieldSpec

from conftest import qrs

Z3 = FieldSpec(3).zeta()
Z4 = FieldSpec(4).zeta()
Z6 = FieldSpec(6).zeta()

# m -> (braidings meeting the tabulated non-root condition, a control braiding violating it)
NONROOT_CASES = {
    1: ([qrs(2, 3, -1), qrs(2, Fraction(1, 5), 5)], qrs(2, 3, 5)),
    2: ([qrs(2, 3, -1), qrs(2, 3, Fraction(-1, 18))], qrs(2, 3, 5)),
    3: ([qrs(1, -Z3, -1)], qrs(2, 3, -1)),
    4: ([qrs(1, -Z3, -1), qrs(Fraction(1, 4), 8 * Z4, -1), qrs(1, -Z3, (-Z3).inverse())], qrs(2, 3, 5)),
    6: ([qrs(1, Z6, -1)], qrs(2, 3, -1)),
}
