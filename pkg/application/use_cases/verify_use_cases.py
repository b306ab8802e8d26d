import logging
from fractions import Fraction
from typing import List, Optional

import numpy as np

from application.dto.scan_dto import ScanRecordDTO
from application.dto.verify_dto import ClaimStatus, ClaimStatusDTO
from application.services.formatting import format_cell, format_real
from application.use_cases.scan_use_cases import REMARK_EXPONENT, ScanUseCases
from domain.exceptions import DomainError, InvalidArgumentError
from domain.services import bounds, hz
from domain.services.arith import sigma1_table
from domain.services.classnum import ClassNumberService, default_service
from domain.value_objects.bound_constants import EXP_GAMMA, BoundConstants
from domain.value_objects.discriminant import Discriminant
from domain.value_objects.hz_params import HzParams


logger = logging.getLogger(__name__)

ROBIN_N_LIMIT = 10 ** 6
BOUNDARY_M_LIMIT = 200
LEMMA1_N_LIMIT = 500


def _status(failures: List) -> ClaimStatus:
    return ClaimStatus.FAIL if failures else ClaimStatus.PASS


def _first(witnesses: List) -> str:
    return format_cell(witnesses[0]) if witnesses else ""


class VerifyUseCases:
    """Evaluates every printed claim against exact data; failures are reported, not raised"""

    def __init__(
        self,
        classes: Optional[ClassNumberService] = None,
        scans: Optional[ScanUseCases] = None,
        constants: Optional[BoundConstants] = None,
        max_listed_exceptions: int = 20
    ):
        self.classes = default_service if classes is None else classes
        self.constants = BoundConstants() if constants is None else constants
        self.scans = ScanUseCases(self.classes, constants=self.constants) if scans is None else scans
        self.max_listed_exceptions = max_listed_exceptions

    def verify(self, params: HzParams, n_max: int, d_max: int) -> List[ClaimStatusDTO]:
        if n_max < 3:
            raise InvalidArgumentError(f"n_max must be at least 3, got {n_max}")
        if d_max < 4:
            raise InvalidArgumentError(f"d_max must be at least 4, got {d_max}")
        p = params.p
        records = [record for record in self.scans.scan(params, n_max) if record.tn2 is not None]
        claims = [
            self.check_robin(n_max),
            self.check_paley(d_max),
            self.check_boundary_identity(params, n_max),
            self.check_lemma1_chain(p, n_max),
            self.check_lemma1_outer(params, n_max),
            *self.check_lemma2(p, n_max, records),
            self.check_theorem3(p, n_max, records, self.constants, "g-theorem3"),
            self.check_theorem3(p, n_max, records, BoundConstants.riemann_hypothesis(), "g-theorem3-rh"),
            self.check_remark(p, n_max, records),
            self.check_n_min(p),
            self.check_robin_merged(n_max),
        ]
        for claim in claims:
            logger.info("Claim %s: %s %s", claim.claim_id, claim.status.value, claim.witness)
        return claims

    def _exception_list(self, values: List) -> str:
        listed = ";".join(format_cell(v) for v in values[:self.max_listed_exceptions])
        if len(values) > self.max_listed_exceptions:
            listed += f";...({len(values)} total)"
        return listed

    def check_robin(self, n_max: int) -> ClaimStatusDTO:
        limit = min(n_max, ROBIN_N_LIMIT)
        robin = self.constants.robin_constant
        parameters = f"3<=N<={limit};robin_constant={robin}"
        n = np.arange(3, limit + 1, dtype=np.float64)
        ll = np.log(np.log(n))
        two_term = EXP_GAMMA * n * ll + robin * n / ll
        sigmas = sigma1_table(limit)[3:]
        exceptions = [int(N) for N in np.nonzero(sigmas >= two_term)[0] + 3]
        return ClaimStatusDTO(
            claim_id="a-robin",
            parameters=parameters,
            status=_status(exceptions),
            witness=self._exception_list(exceptions)
        )

    def check_paley(self, d_max: int) -> ClaimStatusDTO:
        self.classes.warm_up(d_max)
        exceptions = [
            d for d in range(3, d_max + 1)
            if Discriminant.is_valid(-d) and bounds.paley_lower(d) > self.classes.class_number(-d)
        ]
        return ClaimStatusDTO(
            claim_id="b-paley",
            parameters=f"3<=d<={d_max}",
            status=_status(exceptions),
            witness=self._exception_list(exceptions)
        )

    def check_boundary_identity(self, params: HzParams, n_max: int) -> ClaimStatusDTO:
        limit = min(n_max, BOUNDARY_M_LIMIT)
        failures = [
            m for m in range(1, limit + 1)
            if hz.H_p_sum(params, m * m, self.classes) != hz.H_p0(params, m * m, self.classes) - Fraction(1, 6)
        ]
        return ClaimStatusDTO(
            claim_id="c-boundary",
            parameters=f"p={params.p};1<=m<={limit}",
            status=_status(failures),
            witness=_first(failures)
        )

    def _lemma1_results(self, p: int, n_max: int):
        for n in range(1, min(n_max, LEMMA1_N_LIMIT) + 1):
            try:
                result = bounds.lemma1_chain(p, n)
            except DomainError as e:
                logger.debug("Lemma 1 chain skipped at n=%d: %s", n, e)
                continue
            if not result.is_empty:
                yield n, result

    def check_lemma1_chain(self, p: int, n_max: int) -> ClaimStatusDTO:
        failures = [n for n, result in self._lemma1_results(p, n_max) if not result.is_ordered()]
        return ClaimStatusDTO(
            claim_id="d-lemma1-chain",
            parameters=f"p={p};1<=n<={min(n_max, LEMMA1_N_LIMIT)}",
            status=_status(failures),
            witness=_first(failures)
        )

    def check_lemma1_outer(self, params: HzParams, n_max: int) -> ClaimStatusDTO:
        failures = [
            n for n, result in self._lemma1_results(params.p, n_max)
            if hz.H_p0(params, n * n, self.classes) < result.rhs1
        ]
        return ClaimStatusDTO(
            claim_id="e-lemma1-outer",
            parameters=f"p={params.p};1<=n<={min(n_max, LEMMA1_N_LIMIT)}",
            status=_status(failures),
            witness=_first(failures)
        )

    def check_lemma2(self, p: int, n_max: int, records: List[ScanRecordDTO]) -> List[ClaimStatusDTO]:
        checked = [record for record in records if record.lemma2_statement is not None]
        claims = []
        for claim_id, violated in (
            ("f-lemma2-statement", lambda record: record.viol_statement),
            ("f-lemma2-proof", lambda record: record.viol_proof),
        ):
            if not checked:
                claims.append(ClaimStatusDTO(claim_id=claim_id, parameters=f"p={p};N<={n_max}", status=ClaimStatus.SKIPPED))
                continue
            failures = [record.N for record in checked if violated(record)]
            claims.append(ClaimStatusDTO(
                claim_id=claim_id,
                parameters=f"p={p};N<={n_max};rows={len(checked)}",
                status=_status(failures),
                witness=_first(failures)
            ))
        return claims

    def check_theorem3(
        self,
        p: int,
        n_max: int,
        records: List[ScanRecordDTO],
        constants: BoundConstants,
        claim_id: str
    ) -> ClaimStatusDTO:
        bound = bounds.theorem3_bound(p, constants)
        parameters = f"p={p};N<={n_max};bound={format_real(bound)}"
        if not records:
            return ClaimStatusDTO(claim_id=claim_id, parameters=parameters, status=ClaimStatus.SKIPPED)
        minimum = min(records, key=lambda record: (record.tn2, record.N))
        failed = minimum.tn2 < bound
        return ClaimStatusDTO(
            claim_id=claim_id,
            parameters=f"{parameters};min={format_cell(minimum.tn2)}",
            status=ClaimStatus.FAIL if failed else ClaimStatus.PASS,
            witness=format_cell(minimum.N) if failed else ""
        )

    def check_remark(self, p: int, n_max: int, records: List[ScanRecordDTO]) -> ClaimStatusDTO:
        threshold = p ** REMARK_EXPONENT
        parameters = f"p={p};{format_real(threshold)}<N<={n_max}"
        tail = [record for record in records if record.N > threshold]
        if not tail:
            return ClaimStatusDTO(claim_id="h-remark-15-7", parameters=parameters, status=ClaimStatus.SKIPPED)
        failures = [record.N for record in tail if record.tn2 < 0]
        return ClaimStatusDTO(
            claim_id="h-remark-15-7",
            parameters=parameters,
            status=_status(failures),
            witness=_first(failures)
        )

    def check_n_min(self, p: int) -> ClaimStatusDTO:
        analytic = bounds.n_min_analytic(p, 0.0, self.constants)
        printed = bounds.n_min_printed(p, 0.0, self.constants)
        agree = abs(analytic - printed) <= 1e-9 * abs(analytic)
        return ClaimStatusDTO(
            claim_id="i-nmin",
            parameters=f"p={p};k_eps=0",
            status=ClaimStatus.PASS if agree else ClaimStatus.FAIL,
            witness="" if agree else f"analytic={format_real(analytic)};printed={format_real(printed)}"
        )

    def check_robin_merged(self, n_max: int) -> ClaimStatusDTO:
        limit = min(n_max, ROBIN_N_LIMIT)
        failures = []
        # the merged form is below the two-term form exactly when loglog N < 1
        for N in range(3, min(limit, 16) + 1):
            robin = bounds.robin_upper(N, self.constants)
            if robin.merged < robin.two_term:
                failures.append(N)
        return ClaimStatusDTO(
            claim_id="j-robin-merged",
            parameters=f"3<=N<={limit}",
            status=_status(failures),
            witness=_first(failures)
        )
