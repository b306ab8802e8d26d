"""Self-intersection numbers of Hirzebruch-Zagier cycles T_N.

T_N^2 = 1/2 * sum_{n | N} n * (H_p(N^2/n^2) + I_p(N^2/n^2)) * (chi_p(n) + chi_p(NA/n))

H_p and H_p^0 are exact rationals. I_p is an infinite sum over unit orbits
and is returned as a float with a certified absolute error.
"""
import logging
import math
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import List, Optional, Union

from sympy import primerange

from domain.entities.fundamental_unit import FundamentalUnit
from domain.exceptions import EligibilityError, InvalidArgumentError
from domain.services.arith import divisors, is_squarefree, legendre, sigma, sqrt_mod, square_roots_mod
from domain.services.classnum import ClassNumberService, default_service
from domain.value_objects.hz_params import HzParams, require_prime_one_mod_four
from domain.value_objects.quad_element import QuadElement


logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-10


@lru_cache(maxsize=None)
def fundamental_unit(p: int) -> FundamentalUnit:
    """Fundamental unit of Z[(1 + sqrt(p))/2] from the period of a reduced continued fraction.

    xi = (P0 + sqrt(p)) / 2 with P0 the largest odd integer below sqrt(p) is
    reduced, so its expansion is purely periodic; with period l and
    denominators B_k the unit is B_{l-1} * xi + B_{l-2}.
    """
    require_prime_one_mod_four(p)
    root = isqrt(p)
    p0 = root if root % 2 else root - 1
    q0 = 2
    P, Q = p0, q0
    b_prev, b_curr = 1, 0  # B_{-2}, B_{-1}
    period = 0
    while True:
        a = (P + root) // Q
        b_prev, b_curr = b_curr, a * b_curr + b_prev
        period += 1
        P = a * Q - P
        Q = (p - P * P) // Q
        if (P, Q) == (p0, q0):
            break
    # epsilon = B_{l-1} * (p0 + sqrt(p)) / 2 + B_{l-2}
    epsilon = QuadElement(
        Fraction(b_curr * p0 + 2 * b_prev, 2),
        Fraction(b_curr, 2),
        p
    )
    return FundamentalUnit.create(epsilon, period)


def _resolve(classes: Optional[ClassNumberService]) -> ClassNumberService:
    return default_service if classes is None else classes


def _twelve_hp(p: int, n: int, strict: bool, classes: ClassNumberService) -> int:
    four_n = 4 * n
    bound = isqrt(four_n)
    total = 0
    for r in sqrt_mod(four_n, p):
        x = -bound + (r + bound) % p
        while x <= bound:
            square = x * x
            if not (strict and square == four_n):
                total += classes.twelve_hurwitz((four_n - square) // p)
            x += p
    return total


def H_p_sum(params: HzParams, n: int, classes: Optional[ClassNumberService] = None) -> Fraction:
    """Sum of H((4n - x^2)/p) over x^2 <= 4n, x^2 = 4n mod p"""
    if n < 1:
        raise InvalidArgumentError(f"H_p needs n >= 1, got {n}")
    return Fraction(_twelve_hp(params.p, n, False, _resolve(classes)), 12)


def H_p0(params: HzParams, n: int, classes: Optional[ClassNumberService] = None) -> Fraction:
    """H_p restricted to x^2 < 4n; every summand is nonnegative"""
    if n < 1:
        raise InvalidArgumentError(f"H_p0 needs n >= 1, got {n}")
    return Fraction(_twelve_hp(params.p, n, True, _resolve(classes)), 12)


def _principal_generator(p: int, m: int, b: int) -> Optional[QuadElement]:
    """Generator of norm +-m of the ideal [m, (b + sqrt(p))/2], or None if it is not principal.

    Expands xi = (b + sqrt(p)) / 2m; with convergents A_k / B_k the element
    (2m A_k - b B_k - B_k sqrt(p)) / 2 has norm +-m * Q_{k+1} / 2, so the
    ideal is principal exactly when some |Q_{k+1}| = 2 turns up before the
    expansion cycles.
    """
    if m == 1:
        return QuadElement(1, 0, p)
    root = isqrt(p)
    P, Q = b, 2 * m
    a_prev, a_curr = 0, 1  # A_{-2}, A_{-1}
    b_prev, b_curr = 1, 0  # B_{-2}, B_{-1}
    seen = set()
    while (P, Q) not in seen:
        seen.add((P, Q))
        a = (P + root) // Q if Q > 0 else -((P + root) // -Q) - 1
        a_prev, a_curr = a_curr, a * a_curr + a_prev
        b_prev, b_curr = b_curr, a * b_curr + b_prev
        P = a * Q - P
        Q = (p - P * P) // Q
        if abs(Q) == 2:
            return QuadElement.from_half_integers(2 * m * a_curr - b * b_curr, -b_curr, p)
    return None


def _into_window(lam: QuadElement, eps_plus: QuadElement, log_eps: float) -> QuadElement:
    # lambda/lambda' >= 1 iff b >= 0; lambda/lambda' < eps^2 iff (lambda/eps) has b < 0
    eps_inverse = eps_plus.conjugate()
    log_ratio = 2 * lam.log() - math.log(lam.norm())
    lam = lam * eps_plus ** -math.floor(log_ratio / (2 * log_eps))
    while lam.b < 0:
        lam = lam * eps_plus
    while (lam * eps_inverse).b >= 0:
        lam = lam * eps_inverse
    return lam


def orbit_representatives(p: int, n: int) -> List[QuadElement]:
    """Totally positive lambda = (u + v sqrt(p))/2 of norm n with lambda/lambda' in [1, eps_plus^2).

    One element per orbit under multiplication by eps_plus. Every such
    lambda is g * mu with g^2 | n and (mu) a primitive ideal of norm n/g^2,
    and the primitive ideals of norm m are [m, (b + sqrt(p))/2] for b mod 2m
    with b^2 = p mod 4m.
    """
    if n < 1:
        raise InvalidArgumentError(f"norm must be positive, got {n}")
    unit = fundamental_unit(p)
    eps_plus = unit.epsilon_plus
    log_eps = eps_plus.log()
    representatives = []
    for g in range(1, isqrt(n) + 1):
        if n % (g * g):
            continue
        m = n // (g * g)
        for b in sorted({r % (2 * m) for r in square_roots_mod(p, 4 * m)}):
            mu = _principal_generator(p, m, b)
            if mu is None:
                continue
            if mu.norm() < 0:
                if unit.norm == 1:
                    # only norm -m generators: no totally positive one
                    continue
                mu = mu * unit.epsilon
            if not mu.is_positive():
                mu = -mu
            representatives.append(_into_window(g * mu, eps_plus, log_eps))
    return sorted(representatives, key=lambda lam: (lam.b, lam.a))


def _geometric_sum(log_first: float, log_ratio: float, tol: float) -> float:
    # terms t, t q, t q^2, ... with q = 1/ratio; after adding t the remainder is t q/(1 - q)
    q = math.exp(-log_ratio)
    total = 0.0
    term = math.exp(log_first)
    while True:
        total += term
        if term * q / (1 - q) <= tol:
            return total
        term *= q


def I_p(params: HzParams, n: int, tol: float = DEFAULT_TOLERANCE) -> float:
    """(1/sqrt p) * sum of min(lambda, lambda') over totally positive lambda with norm n"""
    if tol <= 0:
        raise InvalidArgumentError(f"tolerance must be positive, got {tol}")
    if n < 1:
        raise InvalidArgumentError(f"I_p needs n >= 1, got {n}")
    p = params.p
    representatives = orbit_representatives(p, n)
    if not representatives:
        return 0.0
    log_eps = fundamental_unit(p).epsilon_plus.log()
    share = tol * math.sqrt(p) / (2 * len(representatives))
    total = 0.0
    for lam in representatives:
        log_big = lam.log()
        log_small = math.log(n) - log_big
        # k >= 0 contributes lambda' eps^-k, k <= -1 contributes lambda eps^k
        total += _geometric_sum(log_small, log_eps, share)
        total += _geometric_sum(log_big - log_eps, log_eps, share)
    return total / math.sqrt(p)


def I_p_closed_form(params: HzParams, n: int) -> float:
    """Orbit sums in closed form: lambda' eps/(eps - 1) + lambda/(eps - 1) per representative"""
    p = params.p
    log_eps = fundamental_unit(p).epsilon_plus.log()
    # log(eps - 1)
    log_eps_less_one = log_eps + math.log1p(-math.exp(-log_eps))
    total = 0.0
    for lam in orbit_representatives(p, n):
        log_big = lam.log()
        log_small = math.log(n) - log_big
        total += math.exp(log_small + log_eps - log_eps_less_one)
        total += math.exp(log_big - log_eps_less_one)
    return total / math.sqrt(p)


def is_eligible(params: HzParams, N: int) -> bool:
    if N < 1:
        raise InvalidArgumentError(f"N must be positive, got {N}")
    return legendre(N * params.A, params.p) != -1


def t_n_squared(
    params: HzParams,
    N: int,
    include_ip: bool = False,
    tol: float = DEFAULT_TOLERANCE,
    allow_non_squarefree: bool = False,
    classes: Optional[ClassNumberService] = None
) -> Union[Fraction, float]:
    """T_N^2 by the class number formula; exact unless include_ip"""
    if not is_eligible(params, N):
        raise EligibilityError(f"T_{N} is empty for {params}: chi_p(N*A) = -1")
    if not allow_non_squarefree and not is_squarefree(N):
        raise InvalidArgumentError(f"N = {N} is not squarefree")
    classes = _resolve(classes)
    p, A = params.p, params.A
    twelve_total = 0
    ip_total = 0.0
    term_tol = tol / sigma(1, N)
    for n in divisors(N):
        chi = legendre(n, p) + legendre(N * A // n, p)
        if chi == 0:
            continue
        m = (N // n) ** 2
        twelve_total += n * chi * _twelve_hp(p, m, False, classes)
        if include_ip:
            ip_total += n * chi * I_p(params, m, term_tol)
    exact = Fraction(twelve_total, 24)
    if include_ip:
        return float(exact) + ip_total / 2
    return exact


def split_prime_products(p: int, n_max: int, include_one: bool = False) -> List[int]:
    """Squarefree N <= n_max whose prime factors q all have chi_p(q) = 1"""
    require_prime_one_mod_four(p)
    if n_max < 1:
        raise InvalidArgumentError(f"n_max must be positive, got {n_max}")
    primes = [q for q in primerange(2, n_max + 1) if legendre(q, p) == 1]
    products = [1] if include_one else []

    def extend(start: int, product: int) -> None:
        for i in range(start, len(primes)):
            candidate = product * primes[i]
            if candidate > n_max:
                break
            products.append(candidate)
            extend(i + 1, candidate)

    extend(0, 1)
    return sorted(products)
