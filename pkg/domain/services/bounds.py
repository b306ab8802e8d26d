"""Analytic estimates: Paley and Robin bounds, the Lemma 1 chain, the Lemma 2
lower bound in both printed variants and the minimum analysis of t(N).

Every function here is real valued and evaluated in double precision.
"""
import math
from math import isqrt
from typing import Optional

from domain.entities.bound_results import Lemma1Result, RobinBound
from domain.exceptions import DomainError, InvalidArgumentError
from domain.services.arith import loglog
from domain.value_objects.bound_constants import EXP_GAMMA, BoundConstants
from domain.value_objects.hz_params import require_prime_one_mod_four
from domain.value_objects.lemma_variant import Lemma2Variant


PALEY_COEFFICIENT = math.pi / (24 * EXP_GAMMA)
LEMMA1_COEFFICIENT = math.pi / (12 * EXP_GAMMA)


def _constants(constants: Optional[BoundConstants]) -> BoundConstants:
    return BoundConstants() if constants is None else constants


def paley_lower(d: float) -> float:
    """Surrogate for h(-d): pi/(24 e^gamma) * sqrt(d) / loglog(d)"""
    if d < 3:
        raise DomainError(f"Paley bound needs d >= 3, got {d}")
    return PALEY_COEFFICIENT * math.sqrt(d) / loglog(d)


def robin_upper(N: int, constants: Optional[BoundConstants] = None) -> RobinBound:
    """Upper bounds for sigma_1(N): the two-term form and the merged form"""
    if N < 3:
        raise DomainError(f"Robin bound needs N >= 3, got {N}")
    robin = _constants(constants).robin_constant
    ll = loglog(N)
    return RobinBound(
        two_term=EXP_GAMMA * N * ll + robin * N / ll,
        merged=(EXP_GAMMA + robin) * N * ll
    )


def h_prime_tilde(n: int) -> float:
    """Paley surrogate of H'(n), one term per d with d^2 | n"""
    if n < 1:
        raise InvalidArgumentError(f"H' surrogate needs n >= 1, got {n}")
    total = 0.0
    for d in range(1, isqrt(n) + 1):
        if n % (d * d):
            continue
        argument = n // (d * d)
        if argument < 3:
            raise DomainError(f"H' surrogate term d={d} has argument {argument} < 3")
        total += paley_lower(argument)
    return total


def lemma1_chain(p: int, n: int) -> Lemma1Result:
    """The three successive lower bounds for H_p^0(n^2)"""
    require_prime_one_mod_four(p)
    if n < 1:
        raise InvalidArgumentError(f"n must be positive, got {n}")
    terms = 2 * n // p
    half = (p - 1) // 2
    coefficient = LEMMA1_COEFFICIENT * n / (math.sqrt(p) * loglog(4 * n * n))
    rhs1 = 0.0
    partial = 0.0
    for k in range(terms):
        x = half + k * p
        numerator = 4 * n * n - x * x
        try:
            if numerator % p == 0:
                rhs1 += h_prime_tilde(numerator // p)
            else:
                rhs1 += paley_lower(numerator / p)
        except DomainError as e:
            raise DomainError(f"Lemma 1 term k={k}: {e}") from e
        partial += 1 - x * x / (2 * n * n)
    rhs3 = coefficient * (2 * n / (3 * p) - 1 + 1 / p)
    return Lemma1Result(rhs1=rhs1, rhs2=coefficient * partial, rhs3=rhs3, term_count=terms)


def lemma2_lower(
    p: int,
    N: int,
    variant: Lemma2Variant = Lemma2Variant.STATEMENT,
    constants: Optional[BoundConstants] = None
) -> float:
    require_prime_one_mod_four(p)
    if N < 3:
        raise DomainError(f"Lemma 2 needs N >= 3, got {N}")
    constants = _constants(constants)
    coefficient = N * constants.delta / (math.sqrt(p) * loglog(4 * N * N))
    if variant is Lemma2Variant.PROOF:
        coefficient /= 6
    divisor_term = -constants.c * N * loglog(N) / 6
    return divisor_term + coefficient * (2 * N / (3 * p) - 1 + 1 / p)


def epsilon_of(p: int) -> float:
    """logloglog(p) / log(p), defined once loglog(p) > 1"""
    ll = loglog(p)
    if ll <= 1:
        raise DomainError(f"epsilon needs loglog(p) > 1, got p = {p}")
    return math.log(ll) / math.log(p)


def k_threshold(eps: float, variant: Lemma2Variant = Lemma2Variant.STATEMENT) -> float:
    if variant is Lemma2Variant.PROOF:
        if eps >= 1 / 3:
            raise DomainError(f"proof threshold needs eps < 1/3, got {eps}")
        return 3 / (2 * (1 - 3 * eps))
    if eps >= 1:
        raise DomainError(f"statement threshold needs eps < 1, got {eps}")
    return 3 / (2 * (1 - eps))


def _scales(p: int, k_eps: float):
    require_prime_one_mod_four(p)
    return p ** k_eps, math.sqrt(p)


def t_bound(p: int, N: float, k_eps: float = 0.0, constants: Optional[BoundConstants] = None) -> float:
    """t(N) = -(1/6) c N p^{k eps} + N delta / (sqrt(p) p^{2k eps}) * (2N/(3p) - 1 + 1/p)"""
    if N <= 0:
        raise InvalidArgumentError(f"N must be positive, got {N}")
    constants = _constants(constants)
    power, root = _scales(p, k_eps)
    quadratic = N * constants.delta / (root * power * power)
    return -constants.c * N * power / 6 + quadratic * (2 * N / (3 * p) - 1 + 1 / p)


def t_bound_deriv(p: int, N: float, k_eps: float = 0.0, constants: Optional[BoundConstants] = None) -> float:
    constants = _constants(constants)
    power, root = _scales(p, k_eps)
    slope = constants.delta / (root * power * power)
    return -constants.c * power / 6 + slope * (4 * N / (3 * p) - 1 + 1 / p)


def t_bound_second_deriv(p: int, k_eps: float = 0.0, constants: Optional[BoundConstants] = None) -> float:
    constants = _constants(constants)
    power, root = _scales(p, k_eps)
    return 4 * constants.delta / (3 * p * root * power * power)


def _n_min_leading(p: int, k_eps: float, constants: BoundConstants) -> float:
    power, root = _scales(p, k_eps)
    return constants.c / (8 * constants.delta) * p * root * power ** 3


def n_min_analytic(p: int, k_eps: float = 0.0, constants: Optional[BoundConstants] = None) -> float:
    """Root of t'(N)"""
    return _n_min_leading(p, k_eps, _constants(constants)) + 0.75 * (p - 1)


def n_min_printed(p: int, k_eps: float = 0.0, constants: Optional[BoundConstants] = None) -> float:
    """The minimiser as displayed in print; it differs from the root by (3/2)(p - 1)"""
    return _n_min_leading(p, k_eps, _constants(constants)) - 0.75 * (p - 1)


def t_min_value(p: int, k_eps: float = 0.0, constants: Optional[BoundConstants] = None) -> float:
    return t_bound(p, n_min_analytic(p, k_eps, constants), k_eps, constants)


def theorem3_bound(
    p: int,
    constants: Optional[BoundConstants] = None,
    k_eps: float = 0.0,
    keep_p_power: bool = False
) -> float:
    """-(1/96)(c^2/delta) p^{3/2}; keep_p_power restores the p^{4k eps} factor"""
    constants = _constants(constants)
    power, root = _scales(p, k_eps)
    value = -constants.c ** 2 / (96 * constants.delta) * p * root
    if keep_p_power:
        value *= power ** 4
    return value
