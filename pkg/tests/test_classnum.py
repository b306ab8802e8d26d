from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from domain.exceptions import InvalidArgumentError, InvalidDiscriminantError
from domain.services.classnum import (
    ClassNumberService, class_number, count_forms_brute_force, enumerate_class_number,
    h_prime, hurwitz_H, reduced_form_sieve
)
from domain.value_objects.discriminant import Discriminant
from tests.oracles import class_number_by_forms


class TestDiscriminant:
    @pytest.mark.parametrize("value", [-3, -4, -7, -8, -23, -52])
    def test_valid(self, value):
        assert Discriminant(value).absolute == -value

    @pytest.mark.parametrize("value", [0, 1, 5, -1, -2, -5, -6])
    def test_invalid(self, value):
        with pytest.raises(InvalidDiscriminantError):
            Discriminant(value)

    def test_compares_with_int(self):
        assert Discriminant(-23) == -23
        assert hash(Discriminant(-23)) == hash(-23)


class TestClassNumber:
    @pytest.mark.parametrize("d,expected", [
        (-3, 1), (-4, 1), (-20, 2), (-23, 3), (-52, 2), (-163, 1), (-47, 5), (-56, 4),
    ])
    def test_known_values(self, d, expected):
        assert class_number(d) == expected

    def test_invalid_discriminant(self):
        with pytest.raises(InvalidDiscriminantError):
            class_number(-6)
        with pytest.raises(InvalidDiscriminantError):
            class_number(23)

    def test_enumeration_matches_brute_force_up_to_10000(self):
        for n in range(3, 10_001):
            if Discriminant.is_valid(-n):
                assert enumerate_class_number(-n) == count_forms_brute_force(-n), n

    def test_enumeration_matches_independent_oracle(self):
        for n in range(3, 1_500):
            if Discriminant.is_valid(-n):
                assert enumerate_class_number(-n) == class_number_by_forms(-n), n

    def test_sieve_matches_enumeration(self, sieved_classes):
        for n in range(3, 20_001, 7):
            if Discriminant.is_valid(-n):
                assert sieved_classes.class_number(-n) == enumerate_class_number(-n), n

    def test_reduced_counts_include_imprimitive_forms(self):
        counts = reduced_form_sieve(100)
        # -12: (1,0,3) and the imprimitive (2,2,2)
        assert counts[12] == 2
        assert counts[3] == 1
        assert counts[1] == counts[2] == 0


class TestHPrimeAndHurwitz:
    def test_h_prime_weights(self):
        assert h_prime(-3) == Fraction(1, 3)
        assert h_prime(-4) == Fraction(1, 2)
        assert h_prime(-20) == 2

    def test_h_prime_is_class_number_below_minus_seven(self):
        for n in range(7, 400):
            if Discriminant.is_valid(-n):
                assert h_prime(-n) == class_number(-n)

    @pytest.mark.parametrize("n,expected", [
        (0, Fraction(-1, 12)), (3, Fraction(1, 3)), (4, Fraction(1, 2)), (2, 0), (1, 0),
        (7, 1), (8, 1), (11, 1), (12, Fraction(4, 3)), (15, 2), (16, Fraction(3, 2)),
    ])
    def test_values(self, n, expected):
        assert hurwitz_H(n) == expected

    def test_negative_argument(self):
        with pytest.raises(InvalidArgumentError):
            hurwitz_H(-1)

    def test_integrality_and_positivity_up_to_10000(self, sieved_classes):
        for n in range(1, 10_001):
            twelve = sieved_classes.twelve_hurwitz(n)
            assert 12 * sieved_classes.hurwitz_H(n) == twelve
            if n % 4 in (1, 2):
                assert twelve == 0
            else:
                assert twelve > 0

    def test_sieve_agrees_with_divisor_sum(self, sieved_classes):
        plain = ClassNumberService()
        for n in range(0, 3_000):
            assert sieved_classes.hurwitz_H(n) == plain.hurwitz_H(n), n

    def test_oracle_table(self, sieved_classes, hurwitz_table):
        for n in range(0, 5_000, 3):
            assert sieved_classes.hurwitz_H(n) == hurwitz_table.H(n), n

    @given(st.integers(min_value=3, max_value=20_000))
    def test_repository_is_consulted_first(self, n):
        class Stub:
            def __init__(self):
                self.added = {}

            def get(self, d):
                return 99 if d == -3 else self.added.get(d)

            def add(self, d, h):
                self.added[d] = h

        stub = Stub()
        service = ClassNumberService(stub)
        assert service.class_number(-3) == 99
        if Discriminant.is_valid(-n) and n > 3:
            value = service.class_number(-n)
            assert stub.added[-n] == value
