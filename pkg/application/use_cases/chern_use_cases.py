import logging
from typing import List, Optional

from application.services.formatting import format_cell
from domain.entities.chern_report import ChernReport
from domain.services import surface
from domain.services.classnum import ClassNumberService, default_service
from domain.value_objects.hz_params import require_prime_one_mod_four


logger = logging.getLogger(__name__)


class ChernUseCases:
    def __init__(self, classes: Optional[ClassNumberService] = None):
        self.classes = default_service if classes is None else classes

    def report(self, p: int) -> ChernReport:
        require_prime_one_mod_four(p)
        quotient = surface.quotient_sing_lowers(p, self.classes)
        display_terms, nine_contribution = surface.display_vs_contribution(p)
        return ChernReport(
            p=p,
            zeta_minus1=surface.zeta_k_minus1(p),
            volume=surface.volume(p),
            sigma0_exact=surface.sigma0_sum_exact(p),
            sigma0_upper=surface.vdg_sigma0_upper(p),
            sigma1_exact=surface.sigma1_sum_exact(p),
            sigma1_upper=surface.sigma1_sum_upper(p),
            cusp_curve_count=surface.cusp_curve_count(p),
            cusp_curve_upper=surface.cusp_curve_upper(p),
            quotient=quotient,
            explicit_c2_bound=surface.explicit_c2_bound(p),
            c2_estimate_open=surface.c2_estimate(p, include_cusps=False),
            c2_estimate_compact=surface.c2_estimate(p, include_cusps=True),
            display_terms_sum=display_terms,
            nine_contribution=nine_contribution
        )

    def report_lines(self, report: ChernReport) -> List[str]:
        quotient = report.quotient
        lines = [
            f"p = {report.p}",
            f"zeta_K(-1) = {format_cell(report.zeta_minus1)}",
            f"volume = {format_cell(report.volume)}",
            f"sigma0 sum = {report.sigma0_exact} <= {format_cell(report.sigma0_upper)}",
            f"sigma1 sum = {report.sigma1_exact} <= {format_cell(report.sigma1_upper)}",
            f"cusp curves = {format_cell(report.cusp_curve_count)} <= {format_cell(report.cusp_curve_upper)}",
            f"a2 = h(-4p) = {quotient.a2_exact} >= {format_cell(quotient.a2_lower)}",
            f"a3+ >= {format_cell(quotient.a3p_lower)}",
            f"a3- >= {format_cell(quotient.a3m_lower)} (h(-3p)/2 = {format_cell(quotient.a3m_class_lower)})",
            f"quotient contribution >= {format_cell(quotient.contribution_lower)}",
            f"c2 estimate = {format_cell(report.c2_estimate_open)} (volume), "
            f"{format_cell(report.c2_estimate_compact)} (with cusps)",
            f"displayed quotient terms = {format_cell(report.display_terms_sum)}, "
            f"9 * contribution = {format_cell(report.nine_contribution)}",
            f"explicit C^2 bound = {format_cell(report.explicit_c2_bound)}",
        ]
        if quotient.warning:
            lines.append(f"warning: {quotient.warning}")
        return lines
