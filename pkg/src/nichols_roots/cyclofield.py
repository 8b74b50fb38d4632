"""Exact arithmetic in Q and in cyclotomic fields Q(zeta_n).

Elements of Q(zeta_n) are stored as integer coefficient vectors of length
phi(n) over a common positive denominator, reduced modulo the monic integer
polynomial Phi_n.  Reduction by a monic integer modulus never introduces
denominators, so products stay cheap; only inversion leaves Z.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from .errors import DomainError
from .qlaurent import LaurentPoly, b_poly, qfact

INFINITY = math.inf


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> LaurentPoly:
    """The n-th cyclotomic polynomial in the variable q."""
    if n < 1:
        raise DomainError("cyclotomic_poly requires n >= 1")
    poly = LaurentPoly({(n, 0, 0, 0): 1, (0, 0, 0, 0): -1})
    for d in range(1, n):
        if n % d == 0:
            poly = poly.exact_div(cyclotomic_poly(d))
    return poly


def _divisors(n: int):
    return [d for d in range(1, n + 1) if n % d == 0]


class FieldSpec:
    """Q(zeta_n); ``order == 1`` is the rational field."""

    __slots__ = ("order", "modulus", "degree", "_one", "_zero")
    _instances: dict = {}

    def __new__(cls, order: int = 1):
        if not isinstance(order, int) or order < 1:
            raise DomainError(f"cyclotomic order must be a positive integer, got {order!r}")
        inst = cls._instances.get(order)
        if inst is None:
            inst = super().__new__(cls)
            inst.order = order
            coeffs = cyclotomic_poly(order).coeff_list("q")
            inst.modulus = tuple(coeffs[:-1])
            inst.degree = len(coeffs) - 1
            inst._zero = FieldScalar._raw(inst, (0,) * inst.degree, 1)
            inst._one = FieldScalar._raw(inst, (1,) + (0,) * (inst.degree - 1), 1)
            cls._instances[order] = inst
        return inst

    def __reduce__(self):
        return (FieldSpec, (self.order,))

    @property
    def kind(self) -> str:
        return "rationals" if self.order == 1 else "cyclotomic"

    @property
    def characteristic(self) -> int:
        return 0

    def __repr__(self):
        return "FieldSpec(Q)" if self.order == 1 else f"FieldSpec(Q(zeta_{self.order}))"

    @property
    def one(self) -> "FieldScalar":
        return self._one

    @property
    def zero(self) -> "FieldScalar":
        return self._zero

    def __call__(self, value) -> "FieldScalar":
        """Coerce an int, Fraction or scalar of a subfield into this field."""
        if isinstance(value, FieldScalar):
            return value if value.field is self else value.embed(self)
        if isinstance(value, int):
            return FieldScalar._make(self, [value] + [0] * (self.degree - 1), 1)
        if isinstance(value, Fraction):
            return FieldScalar._make(self, [value.numerator] + [0] * (self.degree - 1), value.denominator)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    def zeta(self, d: int = None) -> "FieldScalar":
        """Primitive d-th root of unity exp(2*pi*i/d), for d dividing the order."""
        d = self.order if d is None else d
        if d < 1 or self.order % d:
            raise DomainError(f"zeta({d}) does not lie in {self!r}")
        return self.power_of_generator(self.order // d)

    def power_of_generator(self, k: int) -> "FieldScalar":
        k %= self.order
        poly = [0] * (k + 1)
        poly[k] = 1
        return FieldScalar._make(self, poly, 1)

    def roots_of_unity(self):
        """All roots of unity of the field, i.e. +-zeta_n^j."""
        seen = []
        gen = self.zeta()
        minus = -self.one
        for j in range(self.order):
            for sign in (self.one, minus):
                x = sign * gen ** j
                if x not in seen:
                    seen.append(x)
        return seen


def _normalize(nums, den) -> Tuple[Tuple[int, ...], int]:
    if den < 0:
        nums = [-x for x in nums]
        den = -den
    g = math.gcd(den, *nums)
    if g == 0:
        return tuple(nums), 1
    if g != 1:
        nums = [x // g for x in nums]
        den //= g
    if not any(nums):
        den = 1
    return tuple(nums), den


class FieldScalar:
    """Exact element of a :class:`FieldSpec`.  Immutable and hashable."""

    __slots__ = ("field", "num", "den")

    @classmethod
    def _raw(cls, field, num, den):
        obj = object.__new__(cls)
        obj.field = field
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def _make(cls, field: FieldSpec, poly, den: int) -> "FieldScalar":
        d = field.degree
        p = list(poly)
        if len(p) > d:
            mod = field.modulus
            for i in range(len(p) - 1, d - 1, -1):
                c = p[i]
                if c:
                    base = i - d
                    for j in range(d):
                        if mod[j]:
                            p[base + j] -= c * mod[j]
            p = p[:d]
        elif len(p) < d:
            p = p + [0] * (d - len(p))
        nums, den = _normalize(p, den)
        return cls._raw(field, nums, den)

    # -- coercion helpers
    def _other(self, other):
        if isinstance(other, FieldScalar):
            if other.field is not self.field:
                raise DomainError(f"field mismatch: {self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise DomainError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            if other.field is not self.field:
                return False
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field.order, self.num, self.den))

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return FieldScalar._make(self.field, [a + b for a, b in zip(self.num, o.num)], self.den)
        da, db = self.den, o.den
        return FieldScalar._make(self.field, [a * db + b * da for a, b in zip(self.num, o.num)], da * db)

    __radd__ = __add__

    def __neg__(self):
        return FieldScalar._raw(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldScalar._make(self.field, [a * other for a in self.num], self.den)
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b = self.num, o.num
        if len(a) == 1:
            return FieldScalar._make(self.field, [a[0] * b[0]], self.den * o.den)
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return FieldScalar._make(self.field, prod, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "FieldScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        if len(self.num) == 1:
            return FieldScalar._make(self.field, [self.den], self.num[0])
        # extended Euclid in Q[x]: find u with u * a = 1 mod Phi_n
        a = _trim([Fraction(c) for c in self.num])
        m = _trim([Fraction(c) for c in self.field.modulus] + [Fraction(1)])
        r0, r1 = m, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] == 0:
            quo, rem = _polydivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _trim(_polysub(s0, _polymul(quo, s1)))
        # r1 is a nonzero constant
        c = r1[0]
        inv = [x / c for x in s1]
        den = math.lcm(*(x.denominator for x in inv))
        nums = [int(x * den) for x in inv]
        # multiply by self.den since self = num/den
        return FieldScalar._make(self.field, [x * self.den for x in nums], den)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        result = self.field.one
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def embed(self, target: FieldSpec) -> "FieldScalar":
        """Image under Q(zeta_n) -> Q(zeta_N), zeta_n -> zeta_N^(N/n), for n | N."""
        if target is self.field:
            return self
        n, big = self.field.order, target.order
        if big % n:
            raise DomainError(f"cannot embed {self.field!r} into {target!r}")
        step = big // n
        out = target.zero
        for i, c in enumerate(self.num):
            if c:
                out = out + target.power_of_generator(i * step) * c
        return out * Fraction(1, self.den)

    def __repr__(self):
        return f"FieldScalar({self})"

    def __str__(self):
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        z = f"zeta({self.field.order})"
        parts = []
        for i, c in enumerate(self.num):
            if not c:
                continue
            coeff = Fraction(c, self.den)
            mono = "" if i == 0 else (z if i == 1 else f"{z}^{i}")
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            parts.append(("-" if coeff < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _polysub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _polymul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _polydivmod(a, b):
    a = list(a)
    quo = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and any(a):
        c = a[-1] / lead
        shift = len(a) - len(b)
        quo[shift] = c
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        a.pop()
        _trim(a)
        if len(a) < len(b):
            break
    return _trim(quo), _trim(a if a else [Fraction(0)])


# ---------------------------------------------------------------- operations

def mult_order(e: FieldScalar):
    """Multiplicative order of ``e``, or ``math.inf``.

    Torsion in Q(zeta_n)^x is the group of lcm(2, n)-th roots of unity, so it
    suffices to test the divisors of lcm(2, n).
    """
    if e.is_zero():
        raise DomainError("multiplicative order of zero")
    bound = math.lcm(2, e.field.order)
    for d in _divisors(bound):
        if e ** d == 1:
            return d
    return INFINITY


def eval_monomial(a: int, b: int, c: int, braiding) -> FieldScalar:
    """q^a r^b s^c evaluated at the braiding's (q, r, s)."""
    return braiding.q ** a * braiding.r ** b * braiding.s ** c


def evaluate_poly(poly: LaurentPoly, braiding, t=None) -> FieldScalar:
    """Specialize a Laurent polynomial at the braiding's (q, r, s) and optional t."""
    values = {"q": braiding.q, "r": braiding.r, "s": braiding.s}
    if t is not None:
        values["t"] = t
    return poly.evaluate(values, one=braiding.field.one)


def qfact_b_value(m: int, braiding) -> FieldScalar:
    """(m)_q! * b_m evaluated at the braiding's (q, r)."""
    if m < 0:
        raise DomainError("qfact_b_value requires m >= 0")
    return evaluate_poly(qfact(m) * b_poly(m), braiding)


def qint_value(m: int, x: FieldScalar) -> FieldScalar:
    """Quantum integer (m)_x at a field element x."""
    if m < 0:
        return -qint_value(-m, x)
    total = x.field.zero
    p = x.field.one
    for _ in range(m):
        total = total + p
        p = p * x
    return total


# ---------------------------------------------------------------- reduction mod p

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


@lru_cache(maxsize=None)
def modular_root(order: int, start: int = 2 ** 31) -> Tuple[int, int]:
    """A prime p = 1 mod ``order`` above ``start`` and a root of Phi_order modulo p.

    Such a root exists because (Z/p)^x is cyclic of order divisible by ``order``.
    """
    p = start - start % order + 1
    while True:
        if p > start and _is_prime(p):
            phi = cyclotomic_poly(order).coeff_list("q")
            for g in range(2, 200):
                w = pow(g, (p - 1) // order, p)
                if sum(c * pow(w, k, p) for k, c in enumerate(phi)) % p == 0:
                    return p, w
        p += order


class ModularImage:
    """Ring map Q(zeta_n) -> Z/p for elements whose denominator is prime to p."""

    def __init__(self, field: FieldSpec):
        self.p, root = modular_root(field.order)
        self.powers = [pow(root, k, self.p) for k in range(field.degree)]

    def __call__(self, x: FieldScalar):
        """Image of x, or None when p divides its denominator."""
        p = self.p
        if x.den % p == 0:
            return None
        value = sum(c * w for c, w in zip(x.num, self.powers))
        return value * pow(x.den, -1, p) % p
