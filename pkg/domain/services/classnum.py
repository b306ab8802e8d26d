"""Class numbers of positive definite binary quadratic forms.

h(D) counts reduced primitive forms (a, b, c) with b^2 - 4ac = D,
|b| <= a <= c and b >= 0 whenever |b| = a or a = c. H(n) is the weighted
sum over d^2 | n of h'(-n/d^2), with H(0) = -1/12.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Optional

import numpy as np

from domain.exceptions import InvalidArgumentError
from domain.repositories.class_number_repository import ClassNumberRepository
from domain.services.arith import mobius
from domain.value_objects.discriminant import Discriminant


logger = logging.getLogger(__name__)


def _as_discriminant(d) -> Discriminant:
    return d if isinstance(d, Discriminant) else Discriminant(d)


def _count_reduced_forms(n: int, primitive: bool = True) -> int:
    """Reduced forms of discriminant -n, walking b first and factoring ac"""
    count = 0
    b = n % 2
    while 3 * b * b <= n:
        m = (b * b + n) // 4
        a = max(b, 1)
        while a * a <= m:
            if m % a == 0:
                c = m // a
                if not primitive or gcd(gcd(a, b), c) == 1:
                    # -b is a separate reduced form unless a boundary case forces b >= 0
                    count += 1 if (b == 0 or a == b or a == c) else 2
            a += 1
        b += 2
    return count


@lru_cache(maxsize=65536)
def enumerate_class_number(d: int) -> int:
    return _count_reduced_forms(_as_discriminant(d).absolute)


def count_forms_brute_force(d) -> int:
    """Independent count over every (a, b) with 0 < a <= sqrt(|d|/3)"""
    n = _as_discriminant(d).absolute
    count = 0
    for a in range(1, isqrt(n // 3) + 1):
        for b in range(-a, a + 1):
            numerator = b * b + n
            if numerator % (4 * a):
                continue
            c = numerator // (4 * a)
            if c < a:
                continue
            if b < 0 and (-b == a or a == c):
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            count += 1
    return count


def reduced_form_sieve(limit: int) -> np.ndarray:
    """r(n) for 0 <= n <= limit: all reduced forms of discriminant -n, primitive or not"""
    counts = np.zeros(limit + 1, dtype=np.int32)
    for a in range(1, isqrt(limit // 3) + 1):
        step = 4 * a
        for b in range(-a + 1, a + 1):
            c_low = a if b >= 0 else a + 1
            start = 4 * a * c_low - b * b
            if start <= limit:
                counts[start::step] += 1
    return counts


def _square_root_if_square(n: int) -> Optional[int]:
    r = isqrt(n)
    return r if r * r == n else None


def twelve_hurwitz_from_reduced_count(n: int, reduced_count: int) -> int:
    """12*H(n) from r(n); only the classes of -3 and -4 carry fractional weight"""
    value = 12 * reduced_count
    if n % 3 == 0 and _square_root_if_square(n // 3) is not None:
        value -= 8
    if n % 4 == 0 and _square_root_if_square(n // 4) is not None:
        value -= 6
    return value


class ClassNumberService:
    """Class numbers backed by an optional persistent cache and an optional sieve table.

    After warm_up() the instance is only read, so it can be shared by scan workers.
    """

    def __init__(self, repository: Optional[ClassNumberRepository] = None):
        self.repository = repository
        self._reduced_counts: Optional[np.ndarray] = None

    @property
    def sieve_limit(self) -> int:
        return -1 if self._reduced_counts is None else len(self._reduced_counts) - 1

    def warm_up(self, limit: int) -> None:
        if limit <= self.sieve_limit:
            return
        logger.info("Sieving reduced forms for |D| <= %d", limit)
        self._reduced_counts = reduced_form_sieve(limit)

    def class_number(self, d) -> int:
        disc = _as_discriminant(d)
        if self.repository is not None:
            cached = self.repository.get(disc.value)
            if cached is not None:
                return cached
        if disc.absolute <= self.sieve_limit:
            value = self._class_number_from_sieve(disc.absolute)
        else:
            value = enumerate_class_number(disc.value)
        if self.repository is not None:
            self.repository.add(disc.value, value)
        return value

    def _class_number_from_sieve(self, n: int) -> int:
        # Moebius inversion of r(n) = sum over g^2 | n of h(-n/g^2)
        total = 0
        for g in range(1, isqrt(n) + 1):
            if n % (g * g) == 0:
                mu = mobius(g)
                if mu:
                    total += mu * int(self._reduced_counts[n // (g * g)])
        return total

    def h_prime(self, d) -> Fraction:
        disc = _as_discriminant(d)
        if disc.value == -3:
            return Fraction(1, 3)
        if disc.value == -4:
            return Fraction(1, 2)
        return Fraction(self.class_number(disc))

    def twelve_hurwitz(self, n: int) -> int:
        """12*H(n), always an integer"""
        if n < 0:
            raise InvalidArgumentError(f"H(n) needs n >= 0, got {n}")
        if n == 0:
            return -1
        if n % 4 in (1, 2):
            return 0
        if n <= self.sieve_limit:
            return twelve_hurwitz_from_reduced_count(n, int(self._reduced_counts[n]))
        total = Fraction(0)
        for d in range(1, isqrt(n) + 1):
            if n % (d * d) == 0 and Discriminant.is_valid(-(n // (d * d))):
                total += self.h_prime(-(n // (d * d)))
        return int(12 * total)

    def hurwitz_H(self, n: int) -> Fraction:
        return Fraction(self.twelve_hurwitz(n), 12)


default_service = ClassNumberService()


def class_number(d) -> int:
    return default_service.class_number(d)


def h_prime(d) -> Fraction:
    return default_service.h_prime(d)


def hurwitz_H(n: int) -> Fraction:
    return default_service.hurwitz_H(n)

