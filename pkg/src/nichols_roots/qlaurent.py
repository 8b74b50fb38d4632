"""Integer Laurent polynomials in q, r, s, t and q-combinatorics.

A :class:`LaurentPoly` is a finite map from exponent vectors
``(e_q, e_r, e_s, e_t)`` to nonzero Python integers.  The q-integers,
q-factorials, Gaussian binomials and the two-parameter products used for
rank-two Nichols algebras are built on top of it, together with a small
registry of identities that can be checked by exact expansion.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Callable, Dict, Iterable, Mapping, Tuple

from .errors import DomainError, ExactDivisionError

VARIABLES = ("q", "r", "s", "t")
Exponent = Tuple[int, int, int, int]
_ZERO_EXP: Exponent = (0, 0, 0, 0)


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


def _sub_exp(a: Exponent, b: Exponent) -> Exponent:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients in q, r, s, t."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean: Dict[Exponent, int] = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != 4:
                    raise DomainError(f"exponent vector must have length 4, got {exp!r}")
                if c:
                    clean[tuple(int(e) for e in exp)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exponent, int]) -> "LaurentPoly":
        # terms must already be free of zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({_ZERO_EXP: int(c)} if c else {})

    @classmethod
    def monomial(cls, coeff: int = 1, *, q: int = 0, r: int = 0, s: int = 0, t: int = 0) -> "LaurentPoly":
        return cls._raw({(q, r, s, t): int(coeff)} if coeff else {})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], var: str = "q") -> "LaurentPoly":
        """Univariate polynomial sum(c_i * var^i) from a coefficient list."""
        pos = VARIABLES.index(var)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0, 0, 0, 0]
                e[pos] = i
                terms[tuple(e)] = int(c)
        return cls._raw(terms)

    @property
    def terms(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @staticmethod
    def _coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: Dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _add_exp(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly._raw({tuple(-x * (-n) for x in e): c ** (-n)})
            raise DomainError("only unit monomials have negative powers")
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def leading_term(self) -> Tuple[Exponent, int]:
        """Lexicographically largest exponent vector and its coefficient."""
        if not self._terms:
            raise DomainError("zero polynomial has no leading term")
        e = max(self._terms)
        return e, self._terms[e]

    def min_exponents(self) -> Exponent:
        if not self._terms:
            return _ZERO_EXP
        exps = list(self._terms)
        return tuple(min(e[i] for e in exps) for i in range(4))

    def shift(self, e: Exponent) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector ``e``."""
        return LaurentPoly._raw({_add_exp(k, e): c for k, c in self._terms.items()})

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient ``self / other``; raises :class:`ExactDivisionError` unless exact.

        Both operands are first shifted by monomials (units of the Laurent
        ring) so that no variable divides them; the quotient of such a pair
        is then an ordinary polynomial and single-divisor leading-term
        elimination decides divisibility.
        """
        other = self._coerce(other)
        if not other._terms:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self._terms:
            return LaurentPoly()
        ma, mb = self.min_exponents(), other.min_exponents()
        rem = dict(self.shift(tuple(-x for x in ma))._terms)
        div = other.shift(tuple(-x for x in mb))
        lead_e, lead_c = div.leading_term()
        div_terms = list(div._terms.items())
        quot: Dict[Exponent, int] = {}
        while rem:
            e = max(rem)
            c = rem[e]
            de = _sub_exp(e, lead_e)
            if min(de) < 0 or c % lead_c:
                raise ExactDivisionError(f"{other} does not divide {self}")
            qc = c // lead_c
            quot[de] = qc
            for be, bc in div_terms:
                k = _add_exp(be, de)
                v = rem.get(k, 0) - qc * bc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly._raw(quot).shift(_sub_exp(ma, mb))

    def evaluate(self, values: Mapping[str, object], one=1):
        """Substitute ring elements for the variables.

        ``values`` maps variable names to elements supporting ``*``, ``+`` and
        integer powers (negative powers need invertible values).  Variables not
        occurring in the polynomial may be omitted.
        """
        total = None
        for e, c in self._terms.items():
            term = one * c
            for name, k in zip(VARIABLES, e):
                if k:
                    term = term * (values[name] ** k)
            total = term if total is None else total + term
        return one * 0 if total is None else total

    def coeff_list(self, var: str = "q") -> list:
        """Coefficients of a univariate nonnegative-exponent polynomial."""
        pos = VARIABLES.index(var)
        if not self._terms:
            return []
        out = [0] * (max(e[pos] for e in self._terms) + 1)
        for e, c in self._terms.items():
            if any(x for i, x in enumerate(e) if i != pos) or e[pos] < 0:
                raise DomainError(f"{self} is not a polynomial in {var} alone")
            out[e[pos]] = c
        return out

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            mono = "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in zip(VARIABLES, e) if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()


def mono(coeff: int = 1, **exps: int) -> LaurentPoly:
    return LaurentPoly.monomial(coeff, **exps)


# ---------------------------------------------------------------- q-numbers

@lru_cache(maxsize=None)
def qint(m: int) -> LaurentPoly:
    """Quantum integer (m)_q, with (0)_q = 0 and (-m)_q = -(m)_q."""
    if m < 0:
        return -qint(-m)
    return LaurentPoly({(i, 0, 0, 0): 1 for i in range(m)})


@lru_cache(maxsize=None)
def qfact(m: int) -> LaurentPoly:
    if m < 0:
        raise DomainError("q-factorial of a negative integer")
    return ONE if m == 0 else qfact(m - 1) * qint(m)


@lru_cache(maxsize=None)
def qbinom(m: int, i: int) -> LaurentPoly:
    """Gaussian binomial coefficient, by exact division of q-factorials."""
    if m < 0:
        raise DomainError("qbinom requires m >= 0")
    if i < 0 or i > m:
        return ZERO
    return qfact(m).exact_div(qfact(i) * qfact(m - i))


def b_poly(m: int) -> LaurentPoly:
    """prod_{j=0}^{m-1} (1 - q^j r)."""
    if m < 0:
        raise DomainError("b_poly requires m >= 0")
    out = ONE
    for j in range(m):
        out = out * (ONE - mono(q=j, r=1))
    return out


def _prod(factors: Iterable[LaurentPoly]) -> LaurentPoly:
    out = ONE
    for f in factors:
        out = out * f
    return out


@lru_cache(maxsize=None)
def Q1(k: int, m: int) -> LaurentPoly:
    """Sum form of the two-parameter polynomial Q^{k,m}."""
    if k < 0 or m < 0:
        raise DomainError("Q1 requires k, m >= 0")
    total = ZERO
    for i in range(m + 1):
        e = i * (2 * k + i - 1)
        term = qbinom(m + 1, i) * mono(q=e // 2)
        term = term * _prod(mono(q=k + j, r=2) - mono(r=1) for j in range(i))
        term = term * _prod(ONE - mono(q=2 * k + m - j, r=2) for j in range(1, m - i + 1))
        total = total + term
    return total


@lru_cache(maxsize=None)
def Q2(k: int, m: int) -> LaurentPoly:
    """Closed product form of Q^{k,m}; the quotient is computed by exact division."""
    if k < 0 or m < 0:
        raise DomainError("Q2 requires k, m >= 0")
    sign = -1 if (m + 1) % 2 else 1
    top = mono(sign, q=(2 * k + m) * (m + 1) // 2, r=m + 1) - ONE
    numerator = top * _prod(ONE - mono(q=k + i, r=1) for i in range(m + 1))
    return numerator.exact_div(mono(q=2 * k + m, r=2) - ONE)


# ---------------------------------------------------------------- identities

def _check_symmetry(m: int, i: int) -> bool:
    return qbinom(m, i) == qbinom(m, m - i)


def _check_pascal_q(m: int, i: int) -> bool:
    if m < 1:
        raise DomainError("pascal_q requires m >= 1")
    rhs = qbinom(m - 1, i) * mono(q=i) + qbinom(m - 1, i - 1)
    return qbinom(m, i) == rhs


def _check_pascal_q_rev(m: int, i: int) -> bool:
    if m < 1:
        raise DomainError("pascal_q_rev requires m >= 1")
    rhs = qbinom(m - 1, i) + mono(q=m - i) * qbinom(m - 1, i - 1)
    return qbinom(m, i) == rhs


def binomsum_sides(t: int, k: int) -> Tuple[LaurentPoly, LaurentPoly]:
    if t < 0 or k < -1:
        raise DomainError("binomsum requires t >= 0 and k >= -1")
    lhs = ZERO
    for j in range(t, k + 1):
        e = -j * (j + 1) // 2 + (j - t) * (j - t - 1) // 2
        lhs = lhs + mono(q=e) * qbinom(j, t)
    rhs = mono(q=-((t + 1) * (2 * k - t)) // 2) * qbinom(k + 1, t + 1)
    return lhs, rhs


def lesscrazysum_sides(m: int, n: int) -> Tuple[LaurentPoly, LaurentPoly]:
    if m < 0:
        raise DomainError("lesscrazysum requires m >= 0")
    t = mono(t=1)
    lhs = ZERO
    for i in range(m + 1):
        term = qbinom(m, i) * mono(q=i * (i - 1) // 2)
        term = term * _prod(mono(q=j + n, t=2) - t for j in range(i))
        term = term * _prod(ONE - mono(q=m + n - j, t=2) for j in range(1, m - i + 1))
        lhs = lhs + term
    rhs = _prod(ONE - mono(q=j, t=1) for j in range(m))
    return lhs, rhs


def _check_binomsum(t: int, k: int) -> bool:
    lhs, rhs = binomsum_sides(t, k)
    return lhs == rhs


def _check_lesscrazysum(m: int, n: int) -> bool:
    lhs, rhs = lesscrazysum_sides(m, n)
    return lhs == rhs


def _check_Q1eqQ2(k: int, m: int) -> bool:
    return Q1(k, m) == Q2(k, m)


IDENTITIES: Dict[str, Tuple[Tuple[str, ...], Callable[..., bool]]] = {
    "symmetry": (("m", "i"), _check_symmetry),
    "pascal_q": (("m", "i"), _check_pascal_q),
    "pascal_q_rev": (("m", "i"), _check_pascal_q_rev),
    "binomsum": (("t", "k"), _check_binomsum),
    "lesscrazysum": (("m", "n"), _check_lesscrazysum),
    "Q1eqQ2": (("k", "m"), _check_Q1eqQ2),
}


def verify_identity(name: str, *args: int, **kwargs: int) -> bool:
    """Expand both sides of a named identity and compare exactly.

    Parameters may be given positionally (in the order listed in
    ``IDENTITIES[name][0]``) or by keyword::

        verify_identity("binomsum", t=2, k=5)
    """
    try:
        names, check = IDENTITIES[name]
    except KeyError:
        raise DomainError(f"unknown identity {name!r}; known: {sorted(IDENTITIES)}") from None
    params = dict(zip(names, args))
    params.update(kwargs)
    if set(params) != set(names):
        raise DomainError(f"identity {name!r} takes parameters {names}, got {sorted(params)}")
    return check(**params)


def identity_suite(mmax: int = 12, tmax: int = 6, kmax: int = 12,
                   lc_mmax: int = 8, lc_nmax: int = 4, qmax: int = 8):
    """Yield ``(name, params, ok)`` over the standard parameter ranges."""
    for m in range(0, mmax + 1):
        for i in range(0, m + 1):
            yield "symmetry", {"m": m, "i": i}, verify_identity("symmetry", m=m, i=i)
    for m in range(1, mmax + 1):
        for i in range(-1, m + 2):
            yield "pascal_q", {"m": m, "i": i}, verify_identity("pascal_q", m=m, i=i)
            yield "pascal_q_rev", {"m": m, "i": i}, verify_identity("pascal_q_rev", m=m, i=i)
    for t in range(0, tmax + 1):
        for k in range(-1, kmax + 1):
            yield "binomsum", {"t": t, "k": k}, verify_identity("binomsum", t=t, k=k)
    for m in range(0, lc_mmax + 1):
        for n in range(-lc_nmax, lc_nmax + 1):
            yield "lesscrazysum", {"m": m, "n": n}, verify_identity("lesscrazysum", m=m, n=n)
    for k in range(0, qmax + 1):
        for m in range(0, qmax + 1):
            yield "Q1eqQ2", {"k": k, "m": m}, verify_identity("Q1eqQ2", k=k, m=m)
