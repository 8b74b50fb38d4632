"""Sparse exact Gaussian elimination over an arbitrary exact field.

Rows are dicts ``{column: value}`` with integer column keys and no stored
zeros.  Values only need ``+``, ``-``, ``*``, ``1 / x`` and truthiness, so both
:class:`fractions.Fraction` and field scalars work.  Pivoting is always on the
smallest nonzero column, which makes every result a deterministic function of
the input and the column order.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence

Row = Dict[int, object]


def _axpy(row: Row, factor, other: Row) -> None:
    """row -= factor * other, in place."""
    for c, v in other.items():
        w = row.get(c)
        if w is None:
            row[c] = -(factor * v)
        else:
            w = w - factor * v
            if w:
                row[c] = w
            else:
                del row[c]


class Echelon:
    """Incrementally maintained reduced row echelon form.

    ``rows`` maps each pivot column to its row; every row has a 1 at its pivot
    and zeros in all other pivot columns.
    """

    def __init__(self):
        self.rows: Dict[int, Row] = {}

    def __len__(self):
        return len(self.rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def reduce(self, vec: Row) -> Row:
        """Remainder of ``vec`` modulo the row space (a fresh dict)."""
        out = dict(vec)
        for p in [c for c in out if c in self.rows]:
            f = out.get(p)
            if f:
                _axpy(out, f, self.rows[p])
        return out

    def add(self, vec: Row) -> Optional[int]:
        """Insert a vector; returns its new pivot, or None if it was dependent."""
        r = self.reduce(vec)
        if not r:
            return None
        p = min(r)
        inv = 1 / r[p]
        r = {c: v * inv for c, v in r.items()}
        for other in self.rows.values():
            f = other.get(p)
            if f:
                _axpy(other, f, r)
        self.rows[p] = r
        return p

    def sorted_rows(self) -> List[Row]:
        return [self.rows[p] for p in sorted(self.rows)]


def rref(rows: Iterable[Row]) -> List[Row]:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.sorted_rows()


def rank(rows: Iterable[Row]) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return len(ech)


def nullspace(rows: Iterable[Row], ncols: int, one) -> List[Row]:
    """Basis of {x : row . x = 0 for all rows}, one vector per free column."""
    ech = Echelon()
    for r in rows:
        ech.add(r)
    pivots = set(ech.rows)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        vec = {f: one}
        for p, r in ech.rows.items():
            v = r.get(f)
            if v:
                vec[p] = -v
        basis.append(vec)
    return basis


def left_nullspace(rows: Sequence[Row], ncols: int, one) -> List[Row]:
    """Basis of {y : sum_i y_i rows[i] = 0}, returned in reduced echelon form.

    The i-th row is tagged with the unit vector at column ``ncols + i``; after
    elimination the rows whose untagged part vanished carry the relations.
    """
    ech = Echelon()
    for i, r in enumerate(rows):
        aug = dict(r)
        aug[ncols + i] = one
        ech.add(aug)
    out = []
    for p in sorted(ech.rows):
        if p >= ncols:
            out.append({c - ncols: v for c, v in ech.rows[p].items()})
    return out


def express(vectors: Sequence[Row], target: Row, ncols: int, one) -> Optional[List]:
    """Coefficients x with sum_j x_j vectors[j] == target, or None if impossible."""
    ech = Echelon()
    for j, v in enumerate(vectors):
        aug = dict(v)
        aug[ncols + j] = one
        ech.add(aug)
    res = dict(target)
    for p in [c for c in res if c in ech.rows]:
        f = res.get(p)
        if f:
            _axpy(res, f, ech.rows[p])
    if any(c < ncols for c in res):
        return None
    zero = one - one
    return [-res[ncols + j] if (ncols + j) in res else zero for j in range(len(vectors))]


def span_contains(basis: Sequence[Row], vec: Row) -> bool:
    ech = Echelon()
    for b in basis:
        ech.add(b)
    return not ech.reduce(vec)


def same_span(a: Sequence[Row], b: Sequence[Row]) -> bool:
    return rref(a) == rref(b)


def as_dense(row: Row, ncols: int, zero) -> List:
    return [row.get(c, zero) for c in range(ncols)]


def rank_mod_p(rows: Iterable[Dict[int, int]], p: int) -> int:
    """Rank of an integer matrix over Z/p (rows as sparse dicts)."""
    pivots: Dict[int, Dict[int, int]] = {}
    for vec in rows:
        r = {c: v % p for c, v in vec.items() if v % p}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(r[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in r.items()}
                break
            f = r[c]
            for k, v in piv.items():
                w = (r.get(k, 0) - f * v) % p
                if w:
                    r[k] = w
                else:
                    r.pop(k, None)
    return len(pivots)
