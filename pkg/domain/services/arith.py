"""Integer and real primitives shared by the formula modules.

All functions are pure. Integer results are exact; real-valued helpers run
in double precision.
"""
import math
from fractions import Fraction
from functools import lru_cache
from typing import FrozenSet, List, Union

import numpy as np
from sympy import divisor_sigma, divisors as sympy_divisors, factorint, isprime, legendre_symbol
from sympy.ntheory.residue_ntheory import sqrt_mod as sympy_sqrt_mod

from domain.exceptions import DomainError, InvalidArgumentError


Rational = Fraction

# below this modulus square roots are found by scanning all residues
SQRT_MOD_ENUMERATION_LIMIT = 10_000


@lru_cache(maxsize=None)
def _require_odd_prime(p: int) -> None:
    if p < 3 or not isprime(p):
        raise InvalidArgumentError(f"{p} is not an odd prime")


def legendre(n: int, p: int) -> int:
    _require_odd_prime(p)
    return int(legendre_symbol(n % p, p))


def sigma(order: int, x: Union[int, Fraction]) -> int:
    """Divisor power sum; zero unless x is a positive integer"""
    if order not in (0, 1):
        raise InvalidArgumentError(f"sigma order must be 0 or 1, got {order}")
    x = Fraction(x)
    if x.denominator != 1 or x <= 0:
        return 0
    return int(divisor_sigma(x.numerator, order))


@lru_cache(maxsize=4096)
def sqrt_mod(a: int, p: int) -> FrozenSet[int]:
    _require_odd_prime(p)
    a %= p
    if p < SQRT_MOD_ENUMERATION_LIMIT:
        return frozenset(x for x in range(p) if x * x % p == a)
    roots = sympy_sqrt_mod(a, p, all_roots=True)
    return frozenset(roots or ())


@lru_cache(maxsize=4096)
def square_roots_mod(a: int, modulus: int) -> FrozenSet[int]:
    """All x mod modulus with x^2 = a; the modulus may be composite"""
    if modulus < 1:
        raise InvalidArgumentError(f"modulus must be positive, got {modulus}")
    roots = sympy_sqrt_mod(a % modulus, modulus, all_roots=True)
    return frozenset(int(x) for x in roots or ())


def divisors(n: int) -> List[int]:
    if n < 1:
        raise InvalidArgumentError(f"divisors needs n >= 1, got {n}")
    return [int(d) for d in sympy_divisors(n)]


def loglog(x: float) -> float:
    if x <= 1:
        raise DomainError(f"loglog undefined for x = {x} (needs x > 1)")
    return math.log(math.log(x))


def is_squarefree(n: int) -> bool:
    if n < 1:
        raise InvalidArgumentError(f"squarefree test needs n >= 1, got {n}")
    return all(e == 1 for e in factorint(n).values())


def mobius(n: int) -> int:
    exponents = factorint(n).values()
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


def sigma1_table(limit: int) -> np.ndarray:
    """sigma_1(n) for 0 <= n <= limit (entry 0 is 0)"""
    table = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        table[d::d] += d
    return table
