"""Roots of degree m*alpha1 + 2*alpha2: J-set, multiplicities, root vectors, reflections.

Most functions take the braiding as first argument.  The J-set and the
multiplicity formula only need monomial tests ``q^a r^b s^c == +-1``, so they
also accept :class:`GenericParameters`, which models transcendental,
algebraically independent q, r, s.
"""
from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional

from . import linalg
from .braidwords import Word
from .cyclofield import FieldSpec, mult_order, qint_value
from .errors import DomainError, PreconditionError
from .freealg import (Braiding2, FreeElement, ad_x1_power, mul, normalizer,
                      P, u_vec)
from .nichols import hilbert_table, quotient_for


class GenericParameters:
    """q, r, s algebraically independent: q^a r^b s^c = +-1 only for a = b = c = 0, sign +1."""

    def monomial_is(self, a: int, b: int, c: int, sign: int) -> bool:
        return sign == 1 and a == b == c == 0

    def __str__(self):
        return "generic(q, r, s)"


GENERIC = GenericParameters()


def _normalizer_nonzero(params, m: int) -> bool:
    if isinstance(params, GenericParameters):
        return True
    return not normalizer(params, m).is_zero()


def _monomial_text(a: int, b: int, c: int) -> str:
    parts = [f"{name}^{e}" if e != 1 else name for name, e in (("q", a), ("r", b), ("s", c)) if e]
    return "*".join(parts) or "1"


# ---------------------------------------------------------------- scalar criteria

def rosso_vanishing(braiding: Braiding2, k: int) -> bool:
    """True iff u_{k+1} = [x1^{k+1} x2] vanishes in the Nichols algebra."""
    if k < 0:
        raise DomainError("rosso_vanishing requires k >= 0")
    return normalizer(braiding, k + 1).is_zero()


def u_square_zero(braiding: Braiding2, m: int) -> bool:
    """Decide u_m^2 = 0 via q^{m^2} r^m s = -1 and u_{m+1} = 0."""
    if m < 1:
        raise DomainError("u_square_zero requires m >= 1")
    if rosso_vanishing(braiding, m - 1):
        raise DomainError(f"u_{m} = 0 in the Nichols algebra")
    return braiding.monomial_is(m * m, m, 1, -1) and rosso_vanishing(braiding, m)


def p_k_zero(braiding: Braiding2, k: int) -> bool:
    """Decide P_k = 0 via q^{k(k-1)/2} (-r)^k s = -1."""
    if not _normalizer_nonzero(braiding, k):
        raise PreconditionError(f"p_k_zero requires (k)_q! b_k != 0 at k={k}")
    return braiding.monomial_is(k * (k - 1) // 2, k, 1, (-1) ** (k + 1))


# ---------------------------------------------------------------- candidates, J-set

@dataclass(frozen=True)
class Candidate:
    """Root vector candidate [x1^k1 x2 x1^k2 x2] (exponent 1) or [x1^k x2]^2 (exponent 2)."""

    k1: int
    k2: int
    word: Word
    exponent: int

    def __str__(self):
        return f"[{self.word}]" if self.exponent == 1 else f"[{self.word}]^{self.exponent}"


def candidates_m2(params, m: int) -> List[Candidate]:
    """Root vector candidates of degree m*alpha1 + 2*alpha2, lexicographically ascending."""
    if m < 0:
        raise DomainError("candidates_m2 requires m >= 0")
    out = []
    for k1 in range(m, -1, -1):
        k2 = m - k1
        if k1 > k2:
            out.append(Candidate(k1, k2, Word((1,) * k1 + (2,) + (1,) * k2 + (2,)), 1))
    if m % 2 == 0 and params.monomial_is(m * m // 4, m // 2, 1, -1):
        h = m // 2
        out.append(Candidate(h, h, Word((1,) * h + (2,)), 2))
    return out


@dataclass
class JWitness:
    j: int
    equality: str
    inequalities: List[Dict]


@dataclass
class JSetResult:
    bound: int
    members: List[int]
    witnesses: List[JWitness] = field(default_factory=list)

    def count(self, upto: Optional[int] = None) -> int:
        upto = self.bound if upto is None else upto
        return sum(1 for j in self.members if j <= upto)


def jset(params, m: int) -> JSetResult:
    """Scan j = 0..m; j joins when q^{j(j-1)/2}(-r)^j s = -1 and q^{j+n-1} r^2 != 1 for earlier members n."""
    if m < 0:
        raise DomainError("jset requires m >= 0")
    members: List[int] = []
    witnesses: List[JWitness] = []
    for j in range(m + 1):
        a = j * (j - 1) // 2
        if not params.monomial_is(a, j, 1, (-1) ** (j + 1)):
            continue
        checks = []
        ok = True
        for n in members:
            is_one = params.monomial_is(j + n - 1, 2, 0, 1)
            checks.append({"n": n, "monomial": _monomial_text(j + n - 1, 2, 0), "equals_one": is_one})
            if is_one:
                ok = False
                break
        if ok:
            members.append(j)
            witnesses.append(JWitness(j, f"q^{a}*(-r)^{j}*s = -1", checks))
    return JSetResult(m, members, witnesses)


# ---------------------------------------------------------------- multiplicities

@dataclass
class MultiplicityReport:
    m: int
    m_prime: Optional[int]
    jcount: Optional[int]
    multiplicity: Optional[int]
    precondition_ok: bool
    method: str  # "direct", "reflected" or "inapplicable"
    j_set: List[int] = field(default_factory=list)
    witnesses: List[JWitness] = field(default_factory=list)
    reflection: Optional[Dict] = None

    def to_dict(self) -> Dict:
        d = {
            "degree": [self.m, 2],
            "m_prime": self.m_prime,
            "j_set": list(self.j_set),
            "j_count": self.jcount,
            "multiplicity": self.multiplicity,
            "method": self.method,
            "witnesses": [asdict(w) for w in self.witnesses],
            "preconditions": {"factorial_b_nonzero": self.precondition_ok},
        }
        if self.reflection is not None:
            d["reflection"] = self.reflection
        return d


def m_prime(params, m: int) -> int:
    """Number of root vector candidates of degree m*alpha1 + 2*alpha2."""
    if m % 2:
        return (m + 1) // 2
    return m // 2 + (1 if params.monomial_is(m * m // 4, m // 2, 1, -1) else 0)


def multiplicity_m2(params, m: int) -> MultiplicityReport:
    """m' - |J ∩ [0, m]| when (m)_q! b_m != 0; otherwise an inapplicable report."""
    if m < 0:
        raise DomainError("multiplicity_m2 requires m >= 0")
    if not _normalizer_nonzero(params, m):
        return MultiplicityReport(m, None, None, None, False, "inapplicable")
    js = jset(params, m)
    mp = m_prime(params, m)
    return MultiplicityReport(m, mp, len(js.members), mp - len(js.members), True, "direct",
                              js.members, js.witnesses)


def is_root_vector_kl(braiding, k: int, l: int) -> bool:
    """Is [x1^k x2 x1^l x2] (or [x1^k x2]^2 when k = l) a root vector?"""
    _check_candidate(braiding, k, l)
    return jset(braiding, k + l).count() <= l


def _check_candidate(braiding, k: int, l: int) -> None:
    if l < 0 or k < l:
        raise DomainError(f"need k >= l >= 0, got k={k}, l={l}")
    if not _normalizer_nonzero(braiding, k + l):
        raise PreconditionError(f"(k+l)_q! b_(k+l) = 0 for k+l={k + l}")
    if k == l and not braiding.monomial_is(k * k, k, 1, -1):
        raise PreconditionError(f"q^(k^2) r^k s != -1 for k=l={k}: [x1^k x2]^2 is not a candidate")


def brute_force_is_root_vector(braiding: Braiding2, k: int, l: int) -> bool:
    """Decide the same question by searching for a relation in the Nichols algebra.

    Looks for lambda_l..lambda_k with lambda_k = 1, lambda_l = -chi(k a1 + a2, l a1 + a2)
    and sum lambda_i u_i u_{k+l-i} = 0 there; the candidate is a root vector iff none exists.
    """
    _check_candidate(braiding, k, l)
    nq = quotient_for(braiding)
    n = k + l
    if k == l:
        return not nq.is_zero(mul(u_vec(braiding, k), u_vec(braiding, k)))
    data = nq.kernel_basis(n, 2)
    vec = {i: data.coords(mul(u_vec(braiding, i), u_vec(braiding, n - i)).to_row())
           for i in range(l, k + 1)}
    lam_l = -braiding.chi((k, 1), (l, 1))
    target = {}
    for c, v in vec[k].items():
        target[c] = -v
    for c, v in vec[l].items():
        w = target.get(c, braiding.field.zero) - lam_l * v
        if w:
            target[c] = w
        else:
            target.pop(c, None)
    free = [vec[i] for i in range(l + 1, k)]
    solution = linalg.express(free, target, data.dim_quotient, braiding.field.one)
    return solution is None


def brute_force_multiplicity(braiding: Braiding2, m: int) -> int:
    """#candidates minus #candidates that the relation search shows are not root vectors."""
    cands = candidates_m2(braiding, m)
    return sum(1 for c in cands if brute_force_is_root_vector(braiding, c.k1, c.k2))


def hilbert_multiplicities(braiding: Braiding2, mmax: int) -> List[int]:
    """Multiplicities of m*alpha1 + 2*alpha2, m <= mmax, read off the Hilbert series.

    Uses only graded dimensions of the Nichols algebra and the PBW factorization
    of its Hilbert series: each root beta contributes
    ((1 - t^{h beta}) / (1 - t^beta))^mult with h the order of chi(beta, beta)
    (h = infinity when that order is 1 or infinite).  Roots of x2-degree <= 1
    are alpha1 and the (a, 1) with u_a != 0.
    """
    dims = hilbert_table(braiding, mmax, 2)

    def height(beta):
        o = mult_order(braiding.chi(beta, beta))
        return math.inf if o == 1 else o

    series = {(0, 0): 1}

    def multiply(beta, h, times):
        nonlocal series
        for _ in range(times):
            out = dict(series)
            for (a, b), c in series.items():
                j = 1
                while j < h:
                    deg = (a + j * beta[0], b + j * beta[1])
                    if deg[0] > mmax or deg[1] > 2:
                        break
                    out[deg] = out.get(deg, 0) + c
                    j += 1
            series = out

    multiply((1, 0), height((1, 0)), 1)
    for a in range(mmax + 1):
        if not normalizer(braiding, a).is_zero():
            multiply((a, 1), height((a, 1)), 1)
    mults = []
    for m in range(mmax + 1):
        mult = dims[(m, 2)] - series.get((m, 2), 0)
        if mult < 0:
            raise AssertionError(f"negative multiplicity {mult} at m={m}")
        mults.append(mult)
        multiply((m, 2), height((m, 2)), mult)
    return mults


# ---------------------------------------------------------------- reflections

def cartan_c(braiding: Braiding2, i: int, j: int, bound: int = 64) -> Optional[int]:
    """Generalized Cartan entry c_ij; None when no k <= bound qualifies."""
    if i not in (1, 2) or j not in (1, 2):
        raise DomainError("indices must be 1 or 2")
    if i == j:
        return 2
    qii = braiding.entry(i, i)
    prod = braiding.entry(i, j) * braiding.entry(j, i)
    for k in range(bound + 1):
        if (qint_value(k + 1, qii) * (1 - qii ** k * prod)).is_zero():
            return -k
    return None


def reflect(braiding: Braiding2, i: int = 1, bound: int = 64) -> Braiding2:
    """Braiding matrix of the reflection R_i(V)."""
    c = {j: cartan_c(braiding, i, j, bound) for j in (1, 2)}
    if any(v is None for v in c.values()):
        raise DomainError(f"Cartan entry c_{i}j undefined within bound {bound}")
    qii = braiding.entry(i, i)
    new = []
    for j in (1, 2):
        for k in (1, 2):
            new.append(braiding.entry(j, k) * braiding.entry(i, k) ** (-c[j])
                       * braiding.entry(j, i) ** (-c[k]) * qii ** (c[j] * c[k]))
    return Braiding2(*new)


def reflection_index(braiding: Braiding2, m: int) -> Optional[int]:
    """Least k <= m with (k)_q! b_k != 0 and (k+1)_q (1 - q^k r) = 0."""
    q, r = braiding.q, braiding.r
    for k in range(m + 1):
        if normalizer(braiding, k).is_zero():
            return None
        if (qint_value(k + 1, q) * (1 - q ** k * r)).is_zero():
            return k
    return None


def multiplicity_extended(braiding: Braiding2, m: int) -> MultiplicityReport:
    """Multiplicity of m*alpha1 + 2*alpha2, reflecting at vertex 1 when the formula does not apply."""
    rep = multiplicity_m2(braiding, m)
    if rep.method == "direct":
        return rep
    k = reflection_index(braiding, m)
    if k is None:
        return MultiplicityReport(m, None, None, None, False, "inapplicable")
    refl = reflect(braiding, 1)
    target = 2 * k - m
    info = {"k": k, "reflected_degree": [target, 2],
            "reflected_braiding": [str(x) for x in (refl.q11, refl.q12, refl.q21, refl.q22)]}
    if target < 0:
        return MultiplicityReport(m, 0, 0, 0, False, "reflected", reflection=info)
    inner = multiplicity_m2(refl, target)
    if inner.method != "direct":
        return MultiplicityReport(m, None, None, None, False, "inapplicable", reflection=info)
    return MultiplicityReport(m, inner.m_prime, inner.jcount, inner.multiplicity, False,
                              "reflected", inner.j_set, inner.witnesses, info)


# ---------------------------------------------------------------- kernel basis check, non-root conditions

@dataclass
class TheoremReport:
    m: int
    j_members: List[int]
    in_kernel: List[bool]
    independent: bool
    spans: bool
    family_dim: int
    kernel_dim: int

    @property
    def passed(self) -> bool:
        return all(self.in_kernel) and self.independent and self.spans \
            and self.family_dim == self.kernel_dim == len(self.j_members)


def theorem_family(braiding: Braiding2, m: int) -> List[FreeElement]:
    """(ad x1)^{m-j} (P_j) for j in J ∩ [0, m]."""
    return [ad_x1_power(P(braiding, j), m - j) for j in jset(braiding, m).members]


def verify_theorem_main(braiding: Braiding2, m: int) -> TheoremReport:
    """Check that the (ad x1)^{m-j} P_j, j in J ∩ [0, m], form a basis of ker(pi) ∩ U_m."""
    if not _normalizer_nonzero(braiding, m):
        raise PreconditionError(f"verify_theorem_main requires (m)_q! b_m != 0 at m={m}")
    nq = quotient_for(braiding)
    members = jset(braiding, m).members
    family = theorem_family(braiding, m)
    kernel = nq.ker_intersect_Um(m)
    in_kernel = [nq.is_zero(v) for v in family]
    rows = [v.to_row() for v in family]
    independent = linalg.rank(rows) == len(rows)
    krows = [v.to_row() for v in kernel]
    spans = linalg.rank(rows + krows) == len(krows) == linalg.rank(rows)
    return TheoremReport(m, members, in_kernel, independent, spans, linalg.rank(rows), len(kernel))


def _q3(x) -> bool:
    """(3)_x == 0."""
    return (1 + x + x * x).is_zero()


NONROOT_CONDITIONS = {
    1: "(1+s)(1-rs)=0",
    2: "(1+s)(1-rs)(1+qr^2s)=0",
    3: "s=-1, (3)_{-qr}=0",
    4: "s=-1, (3)_{-qr}=0 or s=-1, q^3r^2=-1 or rs=1, (3)_{-q^2r}=0",
    6: "q=1, s=-1, (3)_{-r}=0",
}


def nonroot_condition(braiding: Braiding2, m: int) -> bool:
    """Evaluate the tabulated non-root condition for m in {1, 2, 3, 4, 6}."""
    if m not in NONROOT_CONDITIONS:
        raise DomainError(f"no tabulated non-root condition for m={m}")
    if not _normalizer_nonzero(braiding, m):
        raise PreconditionError(f"nonroot_condition requires (m)_q! b_m != 0 at m={m}")
    q, r, s = braiding.q, braiding.r, braiding.s
    if m == 1:
        return ((1 + s) * (1 - r * s)).is_zero()
    if m == 2:
        return ((1 + s) * (1 - r * s) * (1 + q * r * r * s)).is_zero()
    if m == 3:
        return s == -1 and _q3(-q * r)
    if m == 4:
        return (s == -1 and _q3(-q * r)) or (s == -1 and q ** 3 * r ** 2 == -1) \
            or (r * s == 1 and _q3(-q * q * r))
    return q == 1 and s == -1 and _q3(-r)


# ---------------------------------------------------------------- reference braidings

def default_suite() -> Dict[str, Braiding2]:
    """Reference braidings written as (q, r, s) with q12 = r and q21 = 1 (fresh caches)."""
    z6 = FieldSpec(6).zeta()
    return {
        "S1": Braiding2.from_qrs(2, 3, -1),
        "S2": Braiding2.from_qrs(2, 3, 5),
        "S3": Braiding2.from_qrs(1, z6, -1),
        "S4": Braiding2.from_qrs(-1, 3, Fraction(1, 3)),
        "S6": Braiding2.from_qrs(2, 3, Fraction(-1, 6)),
    }
