"""Graded components of the Nichols algebra as quotients of T(V).

A homogeneous element of nonzero degree vanishes in the Nichols algebra iff
both skew derivations send it to zero there.  So ker(pi) in degree (a, b) is
the left null space of the matrix whose row for a word w holds the normal
forms of d1(w) in degree (a-1, b) and of d2(w) in degree (a, b-1).  Degrees
are processed in increasing order and memoized per braiding, so each degree
only ever consults strictly smaller ones.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Tuple

from . import linalg
from .braidwords import Word
from .cyclofield import ModularImage
from .freealg import (Braiding2, FreeElement, U_basis, skew_derivation,
                      word_basis)

Row = Dict[int, object]


@dataclass
class DegreeData:
    """ker(pi) in one degree, in reduced echelon form over the word basis.

    ``rows`` are the echelon rows (pivot entry 1, pivot = first nonzero word
    index); ``quotient_words`` are the non-pivot word indices, which index the
    coordinates of the quotient; ``normal_form[j]`` expresses word j in those
    coordinates.
    """

    degree: Tuple[int, int]
    words: Tuple[Word, ...]
    rows: List[Row]
    pivots: List[int]
    quotient_words: List[int]
    normal_form: List[Row] = field(repr=False)

    @property
    def dim_kernel(self) -> int:
        return len(self.rows)

    @property
    def dim_quotient(self) -> int:
        return len(self.quotient_words)

    def coords(self, row: Row) -> Row:
        """Quotient coordinates of a vector given over the word basis."""
        out: Row = {}
        nf = self.normal_form
        for j, c in row.items():
            for k, v in nf[j].items():
                w = out.get(k)
                if w is None:
                    out[k] = c * v
                else:
                    w = w + c * v
                    if w:
                        out[k] = w
                    else:
                        del out[k]
        return out

    def reduce(self, row: Row) -> Row:
        """Normal form over the word basis (supported on non-pivot words)."""
        return {self.quotient_words[k]: v for k, v in self.coords(row).items()}


def _build_normal_forms(n_words: int, rows: List[Row], one) -> Tuple[List[int], List[int], List[Row]]:
    pivots = [min(r) for r in rows]
    pivot_set = set(pivots)
    quotient_words = [j for j in range(n_words) if j not in pivot_set]
    qindex = {j: k for k, j in enumerate(quotient_words)}
    normal_form: List[Row] = [None] * n_words
    for j in quotient_words:
        normal_form[j] = {qindex[j]: one}
    for p, r in zip(pivots, rows):
        normal_form[p] = {qindex[c]: -v for c, v in r.items() if c != p}
    return pivots, quotient_words, normal_form


class NicholsQuotient:
    """Degree-wise description of the Nichols algebra of one braiding.

    The cache is not locked: share an instance across threads only after it
    has been warmed for the degrees in use.
    """

    def __init__(self, braiding: Braiding2):
        self.braiding = braiding
        self._data: Dict[Tuple[int, int], DegreeData] = {}
        self._modular = None

    def kernel_basis(self, a: int, b: int) -> DegreeData:
        if a < 0 or b < 0:
            raise ValueError(f"degree {(a, b)} has negative entries")
        for bb in range(b + 1):
            for aa in range(a + 1):
                if (aa, bb) not in self._data:
                    self._data[(aa, bb)] = self._compute(aa, bb)
        return self._data[(a, b)]

    def _compute(self, a: int, b: int) -> DegreeData:
        words, _ = word_basis(a, b)
        one = self.braiding.field.one
        if a + b <= 1:
            rows: List[Row] = []
        else:
            matrix, ncols = self._derivation_matrix(a, b, words)
            if self._injective_mod_p(matrix):
                rows = []
            else:
                rows = linalg.left_nullspace(matrix, ncols, one)
        pivots, qwords, nf = _build_normal_forms(len(words), rows, one)
        return DegreeData((a, b), words, rows, pivots, qwords, nf)

    def _injective_mod_p(self, matrix) -> bool:
        """Cheap proof that the kernel is zero: the rows stay independent modulo a prime.

        A rank drop modulo p proves nothing, and the caller then falls back
        to exact elimination.
        """
        if self._modular is None:
            self._modular = ModularImage(self.braiding.field)
        image = self._modular
        reduced = []
        for row in matrix:
            r = {}
            for c, v in row.items():
                w = image(v)
                if w is None:
                    return False
                r[c] = w
            reduced.append(r)
        return linalg.rank_mod_p(reduced, image.p) == len(matrix)

    def _derivation_matrix(self, a: int, b: int, words):
        br = self.braiding
        parts = []
        offset = 0
        for i, deg in ((1, (a - 1, b)), (2, (a, b - 1))):
            if min(deg) < 0:
                parts.append((None, offset))
                continue
            data = self._data[deg]
            parts.append((data, offset))
            offset += data.dim_quotient
        matrix = []
        for w in words:
            x = FreeElement._raw(br, (a, b), {w: br.field.one})
            row: Row = {}
            for i, (data, off) in zip((1, 2), parts):
                if data is None:
                    continue
                for k, v in data.coords(skew_derivation(i, x).to_row()).items():
                    row[off + k] = v
            matrix.append(row)
        return matrix, offset

    def reduce(self, x: FreeElement) -> FreeElement:
        if not x.coeffs:
            return x
        data = self.kernel_basis(*x.degree)
        return FreeElement.from_row(self.braiding, x.degree, data.reduce(x.to_row()))

    def is_zero(self, x: FreeElement) -> bool:
        if not x.coeffs:
            return True
        data = self.kernel_basis(*x.degree)
        return not data.coords(x.to_row())

    def dim(self, a: int, b: int) -> int:
        if a < 0 or b < 0:
            return 0
        return self.kernel_basis(a, b).dim_quotient

    def kernel_elements(self, a: int, b: int) -> List[FreeElement]:
        data = self.kernel_basis(a, b)
        return [FreeElement.from_row(self.braiding, (a, b), r) for r in data.rows]

    def ker_intersect_Um_coords(self, m: int) -> List[Row]:
        """ker(pi) ∩ U_m as echelon coordinate rows w.r.t. :func:`U_basis`."""
        family = U_basis(self.braiding, m)
        data = self.kernel_basis(m, 2)
        vecs = [data.coords(f.to_row()) for f in family]
        return linalg.left_nullspace(vecs, data.dim_quotient, self.braiding.field.one)

    def ker_intersect_Um(self, m: int) -> List[FreeElement]:
        family = U_basis(self.braiding, m)
        out = []
        for lam in self.ker_intersect_Um_coords(m):
            v = FreeElement.zero(self.braiding, (m, 2))
            for i, c in lam.items():
                v = v + family[i].scale(c)
            out.append(v)
        return out


def quotient_for(braiding: Braiding2) -> NicholsQuotient:
    """The memoized :class:`NicholsQuotient` attached to a braiding instance."""
    nq = braiding._cache.get("nichols")
    if nq is None:
        nq = NicholsQuotient(braiding)
        braiding._cache["nichols"] = nq
    return nq


def kernel_basis(braiding: Braiding2, a: int, b: int) -> DegreeData:
    return quotient_for(braiding).kernel_basis(a, b)


def is_zero_in_nichols(x: FreeElement) -> bool:
    return quotient_for(x.braiding).is_zero(x)


def nichols_dim(braiding: Braiding2, a: int, b: int) -> int:
    return quotient_for(braiding).dim(a, b)


def ker_intersect_Um(braiding: Braiding2, m: int) -> List[FreeElement]:
    return quotient_for(braiding).ker_intersect_Um(m)


def hilbert_table(braiding: Braiding2, amax: int, bmax: int) -> Dict[Tuple[int, int], int]:
    """Graded dimensions dim B(V)_(a,b) for 0 <= a <= amax, 0 <= b <= bmax."""
    nq = quotient_for(braiding)
    nq.kernel_basis(amax, bmax)
    return {(a, b): nq.dim(a, b) for b in range(bmax + 1) for a in range(amax + 1)}


def word_count(a: int, b: int) -> int:
    return comb(a + b, b)
