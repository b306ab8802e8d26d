from dataclasses import dataclass
from fractions import Fraction

from domain.entities.surface import QuotientSingularities


@dataclass(frozen=True)
class ChernReport:
    p: int
    zeta_minus1: Fraction
    volume: Fraction
    sigma0_exact: int
    sigma0_upper: float
    sigma1_exact: int
    sigma1_upper: float
    cusp_curve_count: Fraction
    cusp_curve_upper: float
    quotient: QuotientSingularities
    explicit_c2_bound: float
    c2_estimate_open: float
    c2_estimate_compact: float
    display_terms_sum: float
    nine_contribution: float
