import warnings
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from domain.exceptions import DomainError, InvalidArgumentError
from domain.services.arith import (
    divisors, is_squarefree, legendre, loglog, mobius, sigma, sigma1_table, sqrt_mod,
    square_roots_mod
)


class TestLegendre:
    def test_residues_mod_13(self):
        assert [legendre(n, 13) for n in (1, 3, 4, 9, 10, 12)] == [1] * 6
        assert legendre(2, 13) == -1
        assert legendre(26, 13) == 0

    def test_negative_argument_is_reduced(self):
        assert legendre(-1, 5) == 1
        assert legendre(-2, 7) == -1

    def test_composite_modulus_rejected(self):
        with pytest.raises(InvalidArgumentError):
            legendre(3, 15)

    @pytest.mark.parametrize("p", [5, 13, 17, 29])
    def test_multiplicative(self, p):
        for a in range(1, 101):
            for b in range(1, 101):
                assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)

    def test_no_deprecation_warning(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            assert legendre(3, 13) == 1
            assert type(legendre(2, 13)) is int


class TestSigma:
    def test_small_values(self):
        assert sigma(1, 12) == 28
        assert sigma(0, 12) == 6
        assert sigma(1, 1) == 1

    def test_non_integers_and_non_positive_are_zero(self):
        assert sigma(1, Fraction(3, 4)) == 0
        assert sigma(0, 0) == 0
        assert sigma(1, -5) == 0

    def test_integral_fraction_is_accepted(self):
        assert sigma(1, Fraction(12, 4)) == 4

    def test_unsupported_order(self):
        with pytest.raises(InvalidArgumentError):
            sigma(2, 6)

    def test_table_matches_pointwise(self):
        table = sigma1_table(500)
        assert table[0] == 0
        assert all(table[n] == sigma(1, n) for n in range(1, 501))

    def test_exceeds_n_plus_one(self):
        assert all(sigma(1, n) >= n + 1 for n in range(2, 2001))


class TestSqrtMod:
    def test_roots_square_back(self):
        for p in (5, 13, 17, 10_007):
            for a in range(0, 40):
                for root in sqrt_mod(a, p):
                    assert root * root % p == a % p

    def test_non_residue_has_no_root(self):
        assert sqrt_mod(2, 13) == frozenset()

    def test_zero(self):
        assert sqrt_mod(13, 13) == frozenset({0})

    def test_example(self):
        assert sqrt_mod(10, 13) == frozenset({6, 7})

    def test_matches_exhaustive_search(self):
        for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97):
            for a in range(p):
                assert sqrt_mod(a, p) == frozenset(x for x in range(p) if x * x % p == a)

    @pytest.mark.parametrize("a,modulus", [(5, 20), (13, 12), (17, 8), (5, 16), (193, 4 * 57), (29, 4 * 35)])
    def test_composite_modulus(self, a, modulus):
        assert square_roots_mod(a, modulus) == frozenset(x for x in range(modulus) if (x * x - a) % modulus == 0)

    @given(st.integers(min_value=1, max_value=10 ** 6))
    def test_large_prime_agrees_with_legendre(self, a):
        p = 10_009
        roots = sqrt_mod(a, p)
        if a % p == 0:
            assert roots == frozenset({0})
        else:
            assert (len(roots) == 2) == (legendre(a, p) == 1)


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    with pytest.raises(InvalidArgumentError):
        divisors(0)


def test_loglog_values():
    assert loglog(3) == pytest.approx(0.0940478, abs=1e-6)
    assert loglog(36) == pytest.approx(1.276345, abs=1e-6)


def test_loglog_domain():
    assert loglog(16) > 1 > loglog(15)
    with pytest.raises(DomainError):
        loglog(1)


def test_squarefree_and_mobius():
    assert is_squarefree(30) and not is_squarefree(12)
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
