from math import comb

import pytest
from hypothesis import given, settings

from nichols_roots import linalg
from nichols_roots.cyclofield import FieldSpec
from nichols_roots.freealg import (Braiding2, FreeElement, P, U_basis, expand_U_basis, generator,
                                   mul, normalizer, skew_derivation, u_vec, word_basis)
from nichols_roots.nichols import (NicholsQuotient, hilbert_table, is_zero_in_nichols,
                                   ker_intersect_Um, kernel_basis, nichols_dim, quotient_for)
from nichols_roots.roots import ad_x1_power, default_suite

from conftest import braidings, qrs
from oracles import symmetrizer_rows

SUITE = default_suite()


class TestExamples:
    def test_kernel_basis(self, s1):
        d = kernel_basis(s1, 0, 0)
        assert (d.dim_kernel, d.dim_quotient) == (0, 1)
        assert kernel_basis(qrs(2, 3, -1), 0, 2).dim_kernel == 1
        assert kernel_basis(s1, 1, 1).dim_kernel == 0

    def test_is_zero(self, s1):
        assert is_zero_in_nichols(P(s1, 0))
        assert not is_zero_in_nichols(u_vec(s1, 2))
        assert not is_zero_in_nichols(generator(s1, 1))

    def test_dimensions(self, s1):
        assert nichols_dim(s1, 0, 0) == 1
        assert nichols_dim(Braiding2.of(2, 1, 1, 3), 1, 1) == 1
        # x2^2 = 0 kills x1^2 x2^2, x1 x2^2 x1 and x2^2 x1^2, so 6 - 3 = 3.
        assert nichols_dim(s1, 2, 2) == 3
        assert nichols_dim(qrs(2, 3, 5), 2, 2) == 6

    def test_frozen_hilbert_table(self, s1):
        table = hilbert_table(s1, 5, 2)
        assert [table[(a, 2)] for a in range(6)] == [0, 1, 3, 6, 10, 15]
        assert [table[(a, 1)] for a in range(6)] == [1, 2, 3, 4, 5, 6]

    def test_ker_intersect_Um(self, s1, s2):
        k0 = ker_intersect_Um(s1, 0)
        assert len(k0) == 1
        assert linalg.same_span([k0[0].to_row()], [P(s1, 0).to_row()])
        for m in range(7):
            assert ker_intersect_Um(s2, m) == []
        k2 = ker_intersect_Um(s1, 2)
        assert len(k2) == 1
        assert linalg.same_span([k2[0].to_row()], [ad_x1_power(P(s1, 0), 2).to_row()])


@pytest.mark.parametrize("label", sorted(SUITE))
def test_kernel_matches_symmetrizer(label):
    br = SUITE[label]
    nq = quotient_for(br)
    for a in range(5):
        for b in range(3):
            if 2 <= a + b <= 6:
                n_words = len(word_basis(a, b)[0])
                ref = linalg.left_nullspace(symmetrizer_rows(br, a, b), n_words, br.field.one)
                assert nq.kernel_basis(a, b).rows == ref


@settings(max_examples=15)
@given(braidings())
def test_kernel_matches_symmetrizer_random(br):
    nq = NicholsQuotient(br)
    for a, b in [(2, 1), (1, 2), (3, 1), (2, 2), (1, 3), (3, 2)]:
        n_words = len(word_basis(a, b)[0])
        ref = linalg.left_nullspace(symmetrizer_rows(br, a, b), n_words, br.field.one)
        assert nq.kernel_basis(a, b).rows == ref


@pytest.mark.parametrize("label", sorted(SUITE))
def test_degree_data_invariants(label):
    br = SUITE[label]
    nq = quotient_for(br)
    for a in range(7):
        for b in range(3):
            d = nq.kernel_basis(a, b)
            assert d.dim_kernel + d.dim_quotient == comb(a + b, b)
            for row in d.rows:
                assert not d.coords(row)
            x = FreeElement.word(br, d.words[0]) + FreeElement.word(br, d.words[-1], 3)
            once = nq.reduce(x)
            assert nq.reduce(once) == once
            assert is_zero_in_nichols(x - once)


@pytest.mark.parametrize("label", sorted(SUITE))
def test_kernel_is_an_ideal(label):
    br = SUITE[label]
    nq = quotient_for(br)
    gens = [generator(br, 1), generator(br, 2)]
    for a in range(9):
        for b in range(4):
            for v in nq.kernel_elements(a, b):
                for g, (da, db) in zip(gens, [(1, 0), (0, 1)]):
                    if a + da > 8 or b + db > 3:
                        continue
                    assert nq.is_zero(mul(g, v))
                    assert nq.is_zero(mul(v, g))


def test_kernel_is_closed_under_derivations(s1):
    nq = quotient_for(s1)
    for a in range(1, 7):
        for b in range(1, 3):
            for v in nq.kernel_elements(a, b):
                assert nq.is_zero(skew_derivation(1, v))
                assert nq.is_zero(skew_derivation(2, v))


@pytest.mark.parametrize("label", sorted(SUITE))
def test_memoization_is_sound(label):
    br = SUITE[label]
    cached = quotient_for(br)
    cached.kernel_basis(5, 2)
    fresh = NicholsQuotient(br)
    for a in range(6):
        for b in range(3):
            assert fresh.kernel_basis(a, b).rows == cached.kernel_basis(a, b).rows
    # Querying in a different order does not change anything either.
    other = NicholsQuotient(br)
    assert other.kernel_basis(5, 2).rows == cached.kernel_basis(5, 2).rows


LINSYS_CASES = dict(SUITE, I4=qrs(1, FieldSpec(4).zeta(), -1))


@pytest.mark.parametrize("label", sorted(LINSYS_CASES))
def test_derivative_coefficients_of_kernel_vectors_sum_to_zero(label):
    """For v in ker(pi) ∩ U'_k, d1(v) = sum mu_i (-q21)^i uhat_i uhat_{k-1-i} has sum q^{-i(i+1)/2} mu_i = 0."""
    br = LINSYS_CASES[label]
    nq = quotient_for(br)
    q = br.q
    checked = 0
    for k in range(1, 9):
        if normalizer(br, k).is_zero():
            break
        family = U_basis(br, k)[:k]
        data = nq.kernel_basis(k, 2)
        rel = linalg.left_nullspace([data.coords(f.to_row()) for f in family],
                                    data.dim_quotient, br.field.one)
        for lam in rel:
            v = FreeElement.zero(br, (k, 2))
            for i, c in lam.items():
                v = v + family[i].scale(c)
            mu = expand_U_basis(skew_derivation(1, v), k - 1)
            assert mu is not None
            total = sum((q ** (-(i * (i + 1) // 2)) * m for i, m in enumerate(mu)), br.field.zero)
            assert total.is_zero()
            checked += 1
    if label in ("S3", "I4"):
        assert checked > 0
