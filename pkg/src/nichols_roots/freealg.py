"""The free algebra T(V) of a rank-two braided vector space of diagonal type.

Elements are homogeneous: a degree ``(a, b)`` (numbers of x1 and x2) plus a
sparse map from words of that degree to field scalars.  On top of the
product this module provides the skew derivations d1, d2, the adjoint
action of x1, super-letters of Lyndon words, and the families u_k, uhat_k,
P_k and S(k, t) whose behaviour in the Nichols algebra governs the roots of
degree m*alpha1 + 2*alpha2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .braidwords import Word, is_lyndon, power_root, shirshov, words_of_degree
from .cyclofield import FieldScalar, FieldSpec, evaluate_poly, qfact_b_value
from .errors import DomainError, PreconditionError
from .qlaurent import qbinom, qint

Degree = Tuple[int, int]


def common_field(values) -> FieldSpec:
    order = 1
    for v in values:
        if isinstance(v, FieldScalar):
            order = math.lcm(order, v.field.order)
    return FieldSpec(order)


@dataclass(frozen=True)
class Braiding2:
    """Braiding matrix (q11, q12, q21, q22) of a two-dimensional space of diagonal type."""

    q11: FieldScalar
    q12: FieldScalar
    q21: FieldScalar
    q22: FieldScalar
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        entries = (self.q11, self.q12, self.q21, self.q22)
        fields = {e.field for e in entries if isinstance(e, FieldScalar)}
        if len(fields) != 1 or not all(isinstance(e, FieldScalar) for e in entries):
            raise DomainError("braiding entries must be scalars of one field; use Braiding2.of()")
        for name, e in zip(("q11", "q12", "q21", "q22"), entries):
            if e.is_zero():
                raise DomainError(f"braiding entry {name} must be nonzero")

    @classmethod
    def of(cls, q11, q12, q21, q22, field: Optional[FieldSpec] = None) -> "Braiding2":
        """Build from ints, Fractions or field scalars, embedding into a common field."""
        vals = []
        for v in (q11, q12, q21, q22):
            if isinstance(v, float):
                raise DomainError("floating-point braiding entries are not exact")
            vals.append(Fraction(v) if isinstance(v, str) else v)
        if field is None:
            field = common_field(vals)
        return cls(*(field(v) for v in vals))

    @classmethod
    def from_qrs(cls, q, r, s, field: Optional[FieldSpec] = None) -> "Braiding2":
        """Braiding with q11 = q, q12 = r, q21 = 1, q22 = s."""
        return cls.of(q, r, 1, s, field=field)

    @property
    def field(self) -> FieldSpec:
        return self.q11.field

    @property
    def q(self) -> FieldScalar:
        return self.q11

    @property
    def r(self) -> FieldScalar:
        return self.q12 * self.q21

    @property
    def s(self) -> FieldScalar:
        return self.q22

    @property
    def matrix(self):
        return ((self.q11, self.q12), (self.q21, self.q22))

    def entry(self, i: int, j: int) -> FieldScalar:
        return self.matrix[i - 1][j - 1]

    def entry_power(self, i: int, j: int, e: int) -> FieldScalar:
        key = ("pow", i, j, e)
        val = self._cache.get(key)
        if val is None:
            val = self.entry(i, j) ** e
            self._cache[key] = val
        return val

    def chi(self, alpha: Sequence[int], beta: Sequence[int]) -> FieldScalar:
        """Bicharacter chi((a, b), (c, d)) = q11^ac q12^ad q21^bc q22^bd."""
        (a, b), (c, d) = alpha, beta
        return (self.entry_power(1, 1, a * c) * self.entry_power(1, 2, a * d)
                * self.entry_power(2, 1, b * c) * self.entry_power(2, 2, b * d))

    def monomial_is(self, a: int, b: int, c: int, sign: int) -> bool:
        """Decide q^a r^b s^c == sign (sign = +1 or -1)."""
        return self.q ** a * self.r ** b * self.s ** c == sign

    def __str__(self):
        return f"(q11={self.q11}, q12={self.q12}, q21={self.q21}, q22={self.q22})"


# ---------------------------------------------------------------- elements

@lru_cache(maxsize=None)
def word_basis(a: int, b: int) -> Tuple[Tuple[Word, ...], Dict[Word, int]]:
    """Words of degree (a, b) in descending lexicographic order, with their index map."""
    words = tuple(words_of_degree(a, b))
    return words, {w: i for i, w in enumerate(words)}


class FreeElement:
    """Homogeneous element of T(V)."""

    __slots__ = ("braiding", "degree", "coeffs")

    def __init__(self, braiding: Braiding2, degree: Degree, coeffs: Optional[Dict] = None):
        self.braiding = braiding
        self.degree = tuple(degree)
        clean = {}
        for w, c in (coeffs or {}).items():
            w = Word(w)
            if w.degree != self.degree:
                raise DomainError(f"word {w} does not have degree {self.degree}")
            c = braiding.field(c)
            if c:
                clean[w] = c
        self.coeffs = clean

    @classmethod
    def _raw(cls, braiding, degree, coeffs):
        obj = object.__new__(cls)
        obj.braiding = braiding
        obj.degree = degree
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, braiding: Braiding2, degree: Degree) -> "FreeElement":
        return cls._raw(braiding, tuple(degree), {})

    @classmethod
    def word(cls, braiding: Braiding2, word, coeff=1) -> "FreeElement":
        w = Word(word)
        return cls(braiding, w.degree, {w: coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other: "FreeElement"):
        if other.braiding is not self.braiding and other.braiding != self.braiding:
            raise DomainError("elements live over different braidings")

    def __eq__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def __add__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        self._check(other)
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        if other.degree != self.degree:
            raise DomainError(f"cannot add elements of degrees {self.degree} and {other.degree}")
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            v = out.get(w)
            if v is None:
                out[w] = c
            else:
                v = v + c
                if v:
                    out[w] = v
                else:
                    del out[w]
        return FreeElement._raw(self.braiding, self.degree, out)

    def __neg__(self):
        return FreeElement._raw(self.braiding, self.degree, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "FreeElement":
        c = self.braiding.field(c)
        if not c:
            return FreeElement.zero(self.braiding, self.degree)
        return FreeElement._raw(self.braiding, self.degree, {w: c * v for w, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, FreeElement):
            return mul(self, other)
        if isinstance(other, (int, Fraction, FieldScalar)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, FieldScalar)):
            return self.scale(other)
        return NotImplemented

    def to_row(self) -> Dict[int, FieldScalar]:
        """Coefficient vector indexed by position in :func:`word_basis`."""
        _, index = word_basis(*self.degree)
        return {index[w]: c for w, c in self.coeffs.items()}

    @classmethod
    def from_row(cls, braiding: Braiding2, degree: Degree, row: Dict[int, FieldScalar]) -> "FreeElement":
        words, _ = word_basis(*degree)
        return cls._raw(braiding, tuple(degree), {words[i]: c for i, c in row.items() if c})

    def __repr__(self):
        return f"FreeElement(degree={self.degree}, {self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        words, index = word_basis(*self.degree)
        parts = []
        for w in sorted(self.coeffs, key=index.__getitem__):
            c = self.coeffs[w]
            text = str(c)
            if c.is_rational():
                sign = "-" if c.to_fraction() < 0 else "+"
                text = str(abs(c.to_fraction()))
            else:
                sign, text = "+", f"({text})"
            parts.append((sign, f"{text} · {w}"))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def generator(braiding: Braiding2, i: int) -> FreeElement:
    if i not in (1, 2):
        raise DomainError("generators are x1 and x2")
    return FreeElement._raw(braiding, (1, 0) if i == 1 else (0, 1), {Word((i,)): braiding.field.one})


def unit(braiding: Braiding2) -> FreeElement:
    return FreeElement._raw(braiding, (0, 0), {Word(()): braiding.field.one})


def mul(x: FreeElement, y: FreeElement) -> FreeElement:
    """Concatenation product of T(V)."""
    x._check(y)
    deg = (x.degree[0] + y.degree[0], x.degree[1] + y.degree[1])
    out: Dict[Word, FieldScalar] = {}
    for w1, c1 in x.coeffs.items():
        for w2, c2 in y.coeffs.items():
            w = tuple.__new__(Word, tuple.__add__(w1, w2))
            v = out.get(w)
            c = c1 * c2
            if v is None:
                out[w] = c
            else:
                v = v + c
                if v:
                    out[w] = v
                else:
                    del out[w]
    return FreeElement._raw(x.braiding, deg, out)


def skew_derivation(i: int, x: FreeElement) -> FreeElement:
    """d_i with d_i(x_j) = delta_ij and d_i(xy) = d_i(x) y + chi(deg x, alpha_i) x d_i(y).

    On a word this deletes one occurrence of the letter i, weighted by chi of
    the degree of the prefix in front of it with alpha_i.
    """
    if i not in (1, 2):
        raise DomainError("skew derivations are d1 and d2")
    br = x.braiding
    a0, b0 = x.degree
    deg = (a0 - 1, b0) if i == 1 else (a0, b0 - 1)
    out: Dict[Word, FieldScalar] = {}
    for w, c in x.coeffs.items():
        a = b = 0
        t = tuple(w)
        for pos, letter in enumerate(t):
            if letter == i:
                coef = c * br.entry_power(1, i, a) * br.entry_power(2, i, b)
                nw = tuple.__new__(Word, t[:pos] + t[pos + 1:])
                v = out.get(nw)
                if v is None:
                    out[nw] = coef
                else:
                    v = v + coef
                    if v:
                        out[nw] = v
                    else:
                        del out[nw]
            if letter == 1:
                a += 1
            else:
                b += 1
    return FreeElement._raw(br, deg, out)


def ad_x1(x: FreeElement) -> FreeElement:
    """x1 * x - chi(alpha1, deg x) * x * x1."""
    br = x.braiding
    x1 = generator(br, 1)
    return mul(x1, x) - mul(x, x1).scale(br.chi((1, 0), x.degree))


def ad_x1_power(x: FreeElement, m: int) -> FreeElement:
    for _ in range(m):
        x = ad_x1(x)
    return x


def superletter(braiding: Braiding2, u) -> FreeElement:
    """Super-letter [u] for u = v^k with v Lyndon; [v^k] = [v]^k."""
    u = Word(u)
    if not u:
        raise DomainError("the empty word has no super-letter")
    v, k = power_root(u)
    if not is_lyndon(v):
        raise DomainError(f"{u} is not a power of a Lyndon word")
    key = ("superletter", v)
    base = braiding._cache.get(key)
    if base is None:
        if len(v) == 1:
            base = generator(braiding, v[0])
        else:
            w1, w2 = shirshov(v)
            s1, s2 = superletter(braiding, w1), superletter(braiding, w2)
            base = mul(s1, s2) - mul(s2, s1).scale(braiding.chi(w1.degree, w2.degree))
        braiding._cache[key] = base
    out = base
    for _ in range(k - 1):
        out = mul(out, base)
    return out


# ---------------------------------------------------------------- u_k family

def u_vec(braiding: Braiding2, k: int) -> FreeElement:
    """u_0 = x2, u_k = x1 u_{k-1} - q^{k-1} q12 u_{k-1} x1."""
    if k < 0:
        raise DomainError("u_vec requires k >= 0")
    key = ("u", k)
    val = braiding._cache.get(key)
    if val is None:
        if k == 0:
            val = generator(braiding, 2)
        else:
            prev = u_vec(braiding, k - 1)
            x1 = generator(braiding, 1)
            val = mul(x1, prev) - mul(prev, x1).scale(braiding.q ** (k - 1) * braiding.q12)
        braiding._cache[key] = val
    return val


def normalizer(braiding: Braiding2, k: int) -> FieldScalar:
    """(k)_q! b_k in the field (cached)."""
    key = ("norm", k)
    val = braiding._cache.get(key)
    if val is None:
        val = qfact_b_value(k, braiding)
        braiding._cache[key] = val
    return val


def uhat(braiding: Braiding2, k: int) -> FreeElement:
    """u_k / ((k)_q! b_k), or 0 when that normalizer vanishes."""
    key = ("uhat", k)
    val = braiding._cache.get(key)
    if val is None:
        n = normalizer(braiding, k)
        if n.is_zero():
            val = FreeElement.zero(braiding, (k, 1))
        else:
            val = u_vec(braiding, k).scale(n.inverse())
        braiding._cache[key] = val
    return val


def require_normalizer(braiding: Braiding2, k: int, what: str = "") -> None:
    if normalizer(braiding, k).is_zero():
        raise PreconditionError(f"{what}requires (k)_q! b_k != 0 at k={k}")


def qbinom_value(braiding: Braiding2, m: int, i: int) -> FieldScalar:
    key = ("qbinom", m, i)
    val = braiding._cache.get(key)
    if val is None:
        val = evaluate_poly(qbinom(m, i), braiding)
        braiding._cache[key] = val
    return val


def qint_value(braiding: Braiding2, m: int) -> FieldScalar:
    return evaluate_poly(qint(m), braiding)


def _U_term(braiding: Braiding2, k: int, i: int) -> FreeElement:
    """(-q21)^i uhat_i uhat_{k-i}."""
    key = ("Uterm", k, i)
    val = braiding._cache.get(key)
    if val is None:
        val = mul(uhat(braiding, i), uhat(braiding, k - i)).scale((-braiding.q21) ** i)
        braiding._cache[key] = val
    return val


def P(braiding: Braiding2, k: int) -> FreeElement:
    """P_k = sum_i (-q21)^i q^{i(i-1)/2} uhat_i uhat_{k-i}."""
    require_normalizer(braiding, k, "P ")
    q = braiding.q
    out = FreeElement.zero(braiding, (k, 2))
    for i in range(k + 1):
        out = out + _U_term(braiding, k, i).scale(q ** (i * (i - 1) // 2))
    return out


def S(braiding: Braiding2, k: int, t: int) -> FreeElement:
    """S(k, t) = sum_{i=t}^k (-q21)^i q^{(i-t)(i-t-1)/2} binom(i, t)_q uhat_i uhat_{k-i}."""
    if t < 0 or t > k:
        raise DomainError(f"S(k, t) needs 0 <= t <= k, got k={k}, t={t}")
    require_normalizer(braiding, k, "S ")
    q = braiding.q
    out = FreeElement.zero(braiding, (k, 2))
    for i in range(t, k + 1):
        c = q ** ((i - t) * (i - t - 1) // 2) * qbinom_value(braiding, i, t)
        out = out + _U_term(braiding, k, i).scale(c)
    return out


def U_basis(braiding: Braiding2, k: int) -> List[FreeElement]:
    """The spanning family (-q21)^i uhat_i uhat_{k-i}, i = 0..k, of U_k."""
    require_normalizer(braiding, k, "U_basis ")
    return [_U_term(braiding, k, i) for i in range(k + 1)]


def expand_in(x: FreeElement, family: Sequence[FreeElement]) -> Optional[List[FieldScalar]]:
    """Coefficients c with x = sum c_j family[j], or None when x is not in the span."""
    deg = x.degree
    for f in family:
        if f and f.degree != deg:
            raise DomainError("family and target have different degrees")
    ncols = len(word_basis(*deg)[0]) if min(deg) >= 0 else 0
    one = x.braiding.field.one
    return linalg.express([f.to_row() for f in family], x.to_row(), ncols, one)


def expand_U_basis(x: FreeElement, k: int) -> Optional[List[FieldScalar]]:
    """lambda with x = sum lambda_i (-q21)^i uhat_i uhat_{k-i}, or None if x is not in U_k."""
    if x.coeffs and x.degree != (k, 2):
        raise DomainError(f"expected degree {(k, 2)}, got {x.degree}")
    x = x if x.coeffs else FreeElement.zero(x.braiding, (k, 2))
    return expand_in(x, U_basis(x.braiding, k))


def adpi_coefficients(braiding: Braiding2, n: int, i: int, mprime: int, k: int):
    """(lambda_(n,k), beta_(i,m',k)) for the expansion of (ad x1)^m P_k.

    lambda_(n,k) = prod_{j=1}^n (1 - q^{k-1+j} r)(k+j)_q and
    beta_(i,m',k) = prod_{j=1}^i (q^{m'+2k-j} r - r^{-1}).
    """
    q, r = braiding.q, braiding.r
    lam = braiding.field.one
    for j in range(1, n + 1):
        lam = lam * (1 - q ** (k - 1 + j) * r) * qint_value(braiding, k + j)
    beta = braiding.field.one
    rinv = r.inverse()
    for j in range(1, i + 1):
        beta = beta * (q ** (mprime + 2 * k - j) * r - rinv)
    return lam, beta
