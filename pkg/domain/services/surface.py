"""Surface-side estimates: the Miyaoka inequality for a curve, the chain of
lower bounds ending in C^2 >= -9 d_2, and the Chern number data of the
Hilbert modular surface of discriminant p.
"""
import logging
import math
from fractions import Fraction
from math import isqrt
from typing import Optional, Tuple

from domain.entities.surface import CurveData, QuotientSingularities, SurfaceData
from domain.exceptions import DegenerateQuadraticError, DomainError, InvalidArgumentError
from domain.services.arith import loglog, sigma
from domain.services.classnum import ClassNumberService, default_service
from domain.value_objects.bound_constants import EXP_GAMMA
from domain.value_objects.hz_params import require_prime_one_mod_four


logger = logging.getLogger(__name__)

SQRT13 = math.sqrt(13)
SQRT3 = math.sqrt(3)
# above this p the quotient singularity count is the weighted sum of a2, a3+, a3-
QUOTIENT_FORMULA_MIN_P = 500


def delta_of(curve: CurveData) -> float:
    """Arithmetic minus geometric genus"""
    return (curve.kc + curve.csq - 2 * curve.g + 2) / 2


def miyaoka_lhs(alpha: float, curve: CurveData, surface: SurfaceData) -> float:
    if not 0 <= alpha <= 1:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    quadratic = curve.csq + 3 * curve.kc - 6 * curve.g + 6
    linear = curve.kc - 3 * curve.g + 3
    return alpha * alpha / 2 * quadratic - 2 * alpha * linear + surface.d2


def p_alpha(alpha: float, delta: float, csq: float, sc: float, rho: float, d2: float) -> float:
    return alpha * alpha * (3 * delta - csq) + alpha * (csq - sc - rho - 2 * delta) + d2


def alpha0(delta: float, csq: float, sc: float, rho: float) -> float:
    """Vertex of P(alpha)"""
    leading = 3 * delta - csq
    if leading <= 0:
        raise DegenerateQuadraticError(f"3*delta - C^2 = {leading} is not positive")
    return (2 * delta + sc + rho - csq) / (2 * leading)


def proportionality_residual(curve: CurveData, delta: float) -> float:
    return curve.kc + curve.sc + 2 * curve.csq + curve.rho - 4 * delta


def sqrt_deficit(x: float, d2: float) -> float:
    """x - 2 sqrt(d2 x); minimal at x = d2 with value -d2"""
    return x - 2 * math.sqrt(d2 * x)


def c2_chain_lower(delta: float, sc: float, rho: float, d2: float) -> float:
    if min(delta, sc, rho) < 0:
        raise DomainError(f"delta, S.C and rho must be nonnegative, got {delta}, {sc}, {rho}")
    if d2 <= 0:
        raise DomainError(f"d2 must be positive, got {d2}")
    return (
        2 * delta - 2 * d2 - 2 * math.sqrt(d2 * d2 + delta * d2)
        + sqrt_deficit(sc, d2) + sqrt_deficit(rho, d2)
    )


def c2_minimised_lower(delta: float, d2: float) -> float:
    """c2_chain_lower after both S.C and rho terms are replaced by their minimum"""
    return 2 * delta - 4 * d2 - 2 * math.sqrt(d2 * d2 + delta * d2)


def nine_d2_constant() -> float:
    return 4 + 2 * math.sqrt((7 + SQRT13) / 2)


def c2_threshold_delta(d2: float) -> float:
    if d2 <= 0:
        raise DomainError(f"d2 must be positive, got {d2}")
    return (5 + SQRT13) / 2 * d2


def exact_c2_lower(d2: float) -> float:
    return -nine_d2_constant() * d2


def _x_range(p: int):
    root = isqrt(p)
    return range(-root, root + 1)


def sigma1_sum_exact(p: int) -> int:
    require_prime_one_mod_four(p)
    return sum(sigma(1, Fraction(p - x * x, 4)) for x in _x_range(p))


def sigma0_sum_exact(p: int) -> int:
    require_prime_one_mod_four(p)
    return sum(sigma(0, Fraction(p - x * x, 4)) for x in _x_range(p))


def zeta_k_minus1(p: int) -> Fraction:
    """Dedekind zeta of Q(sqrt p) at -1"""
    return Fraction(sigma1_sum_exact(p), 60)


def volume(p: int, index: int = 1) -> Fraction:
    if not isinstance(index, int) or index < 1:
        raise InvalidArgumentError(f"subgroup index must be a positive integer, got {index}")
    return index * 2 * zeta_k_minus1(p)


def _vdg_factor(p: int) -> float:
    log_p = math.log(p)
    return 3 / (2 * math.pi ** 2) * log_p ** 2 + 1.05 * log_p


def vdg_sigma0_upper(p: int) -> float:
    require_prime_one_mod_four(p)
    return math.sqrt(p) * _vdg_factor(p)


def sigma1_sum_upper(p: int) -> float:
    return p * vdg_sigma0_upper(p)


def cusp_curve_count(p: int) -> Fraction:
    """Curves in the cusp resolutions: half the sigma_0 sum"""
    return Fraction(sigma0_sum_exact(p), 2)


def cusp_curve_upper(p: int) -> float:
    return vdg_sigma0_upper(p) / 2


def _paley_quotient_lowers(p: int) -> Tuple[float, float, float]:
    require_prime_one_mod_four(p)
    root = math.sqrt(p)
    return (
        math.pi / (12 * EXP_GAMMA) * root / loglog(4 * p),
        SQRT3 * math.pi / (6 * EXP_GAMMA) * root / loglog(3 * p),
        SQRT3 * math.pi / (48 * EXP_GAMMA) * root / loglog(3 * p)
    )


def quotient_contribution_lower(p: int) -> float:
    a2_lower, a3p_lower, a3m_lower = _paley_quotient_lowers(p)
    return 1.5 * a2_lower + 5 / 3 * a3p_lower + 8 / 3 * a3m_lower


def quotient_sing_lowers(p: int, classes: Optional[ClassNumberService] = None) -> QuotientSingularities:
    classes = default_service if classes is None else classes
    a2_lower, a3p_lower, a3m_lower = _paley_quotient_lowers(p)
    warning = None
    if p <= QUOTIENT_FORMULA_MIN_P:
        warning = f"quotient singularity formula is stated for p > {QUOTIENT_FORMULA_MIN_P}"
        logger.warning("p = %d: %s", p, warning)
    return QuotientSingularities(
        p=p,
        a2_exact=classes.class_number(-4 * p),
        a2_lower=a2_lower,
        a3p_lower=a3p_lower,
        a3m_lower=a3m_lower,
        a3m_class_lower=Fraction(classes.class_number(-3 * p), 2),
        contribution_lower=quotient_contribution_lower(p),
        warning=warning
    )


def explicit_c2_terms(p: int) -> Tuple[float, float, float, float, float]:
    """The five positive terms of the explicit bound, in display order"""
    require_prime_one_mod_four(p)
    root = math.sqrt(p)
    factor = _vdg_factor(p)
    return (
        0.9 * p * root * factor,
        13.5 * root * factor,
        27 * math.pi / (8 * EXP_GAMMA) * root / loglog(4 * p),
        15 * SQRT3 * math.pi / (2 * EXP_GAMMA) * root / loglog(3 * p),
        3 * SQRT3 * math.pi / (2 * EXP_GAMMA) * root / loglog(3 * p)
    )


def explicit_c2_bound(p: int) -> float:
    return -sum(explicit_c2_terms(p))


def display_vs_contribution(p: int) -> Tuple[float, float]:
    """(sum of the quotient terms of the explicit bound, 9 * contribution_lower)

    The displayed prefactors equal 27 * contribution_lower: the extra 3 is the
    c_2 coefficient of d_2.
    """
    _, _, *quotient_terms = explicit_c2_terms(p)
    return sum(quotient_terms), 9 * quotient_contribution_lower(p)


def c2_estimate(p: int, include_cusps: bool = True, index: int = 1) -> float:
    """Volume plus, when include_cusps, the cusp curve bound and quotient contribution"""
    estimate = float(volume(p, index))
    if include_cusps:
        estimate += cusp_curve_upper(p) + quotient_contribution_lower(p)
    return estimate


def c2_derived_bound(p: int, include_cusps: bool = True, index: int = 1) -> float:
    """-9 d_2 with d_2 <= 3 c_2"""
    return -27 * c2_estimate(p, include_cusps, index)
