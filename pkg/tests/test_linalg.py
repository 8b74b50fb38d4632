from fractions import Fraction

from hypothesis import given, strategies as st

from nichols_roots import linalg

entries = st.integers(-3, 3).map(Fraction)
matrices = st.lists(st.lists(entries, min_size=4, max_size=4), min_size=1, max_size=5)


def sparse(rows):
    return [{c: v for c, v in enumerate(r) if v} for r in rows]


def apply_left(y, rows, ncols):
    out = [Fraction(0)] * ncols
    for i, c in y.items():
        for j, v in rows[i].items():
            out[j] += c * v
    return out


@given(matrices)
def test_left_nullspace(m):
    rows = sparse(m)
    ker = linalg.left_nullspace(rows, 4, Fraction(1))
    assert len(ker) == len(rows) - linalg.rank(rows)
    for y in ker:
        assert not any(apply_left(y, rows, 4))
    assert linalg.rref(ker) == ker


@given(matrices)
def test_nullspace(m):
    rows = sparse(m)
    null = linalg.nullspace(rows, 4, Fraction(1))
    assert len(null) == 4 - linalg.rank(rows)
    for x in null:
        for r in rows:
            assert sum(v * x.get(c, 0) for c, v in r.items()) == 0


@given(matrices, st.lists(entries, min_size=5, max_size=5))
def test_express(m, coeffs):
    rows = sparse(m)
    target = {}
    for c, row in zip(coeffs, rows):
        for j, v in row.items():
            target[j] = target.get(j, 0) + c * v
    target = {j: v for j, v in target.items() if v}
    sol = linalg.express(rows, target, 4, Fraction(1))
    assert sol is not None
    assert {j: v for j, v in enumerate(apply_left(dict(enumerate(sol)), rows, 4)) if v} == target


def test_express_infeasible():
    assert linalg.express([{0: Fraction(1)}], {1: Fraction(1)}, 2, Fraction(1)) is None


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_mod_p_matches_exact_for_large_p(m):
    rows = sparse([[Fraction(v) for v in r] for r in m])
    int_rows = [{c: int(v) for c, v in r.items()} for r in rows]
    assert linalg.rank_mod_p(int_rows, 1_000_003) == linalg.rank(rows)
