import logging
from fractions import Fraction
from multiprocessing import Pool
from typing import Dict, List, Optional, Tuple

from application.dto.scan_dto import ScanRecordDTO, ScanSummaryDTO
from domain.exceptions import InvalidArgumentError
from domain.repositories.snapshot_class_number_repository import SnapshotClassNumberRepository
from domain.services import bounds, hz
from domain.services.arith import sigma
from domain.services.classnum import ClassNumberService, default_service
from domain.value_objects.bound_constants import BoundConstants
from domain.value_objects.hz_params import HzParams
from domain.value_objects.lemma_variant import Lemma2Variant


logger = logging.getLogger(__name__)

REMARK_EXPONENT = 15 / 7

# set in each pool worker by _init_worker
_worker_classes: Optional[ClassNumberService] = None


def sieve_limit(p: int, n_max: int) -> int:
    """Largest H argument (4m - x^2)/p reached for m <= n_max^2"""
    return 4 * n_max * n_max // p + 1


def _init_worker(limit: int, cached: Optional[Dict[int, int]]) -> None:
    global _worker_classes
    # workers read the parent's cache but never write it
    repository = None if cached is None else SnapshotClassNumberRepository(cached)
    _worker_classes = ClassNumberService(repository)
    _worker_classes.warm_up(limit)


def scan_record(
    params: HzParams,
    N: int,
    include_ip: bool,
    tol: float,
    any_n: bool,
    classes: ClassNumberService,
    constants: Optional[BoundConstants] = None
) -> ScanRecordDTO:
    if not hz.is_eligible(params, N):
        return ScanRecordDTO(N=N, eligible=False)
    tn2 = hz.t_n_squared(
        params, N,
        include_ip=include_ip,
        tol=tol,
        allow_non_squarefree=any_n,
        classes=classes
    )
    record = {"N": N, "eligible": True, "tn2": tn2, "sigma_floor": Fraction(-sigma(1, N), 6)}
    if N >= 3:
        statement = bounds.lemma2_lower(params.p, N, Lemma2Variant.STATEMENT, constants)
        proof = bounds.lemma2_lower(params.p, N, Lemma2Variant.PROOF, constants)
        record.update(
            lemma2_statement=statement,
            lemma2_proof=proof,
            viol_statement=tn2 < statement,
            viol_proof=tn2 < proof
        )
    return ScanRecordDTO(**record)


def _scan_task(task: Tuple[int, int, int, bool, float, bool, BoundConstants]) -> ScanRecordDTO:
    p, A, N, include_ip, tol, any_n, constants = task
    return scan_record(HzParams(p, A), N, include_ip, tol, any_n, _worker_classes, constants)


class ScanUseCases:
    def __init__(
        self,
        classes: Optional[ClassNumberService] = None,
        workers: int = 1,
        constants: Optional[BoundConstants] = None
    ):
        self.classes = default_service if classes is None else classes
        self.workers = workers
        self.constants = BoundConstants() if constants is None else constants

    def scan_indices(self, params: HzParams, n_max: int, any_n: bool = False) -> List[int]:
        if n_max < 1:
            raise InvalidArgumentError(f"n_max must be positive, got {n_max}")
        if any_n:
            return list(range(1, n_max + 1))
        return hz.split_prime_products(params.p, n_max)

    def scan(
        self,
        params: HzParams,
        n_max: int,
        include_ip: bool = False,
        tol: float = hz.DEFAULT_TOLERANCE,
        any_n: bool = False
    ) -> List[ScanRecordDTO]:
        """One record per scanned N, in increasing N whatever the worker count"""
        indices = self.scan_indices(params, n_max, any_n)
        if not indices:
            logger.info("No N to scan for %s up to %d", params, n_max)
            return []
        limit = sieve_limit(params.p, n_max)
        logger.info("Scanning %d values of N for %s with %d worker(s)", len(indices), params, self.workers)
        if self.workers <= 1:
            self.classes.warm_up(limit)
            return [
                scan_record(params, N, include_ip, tol, any_n, self.classes, self.constants)
                for N in indices
            ]
        tasks = [(params.p, params.A, N, include_ip, tol, any_n, self.constants) for N in indices]
        repository = self.classes.repository
        cached = None if repository is None else repository.all()
        with Pool(processes=self.workers, initializer=_init_worker, initargs=(limit, cached)) as pool:
            return pool.map(_scan_task, tasks, chunksize=max(1, len(tasks) // (4 * self.workers)))

    def summarize(self, params: HzParams, n_max: int, records: List[ScanRecordDTO]) -> ScanSummaryDTO:
        scored = [record for record in records if record.tn2 is not None]
        minimum = min(scored, key=lambda record: (record.tn2, record.N), default=None)
        return ScanSummaryDTO(
            p=params.p,
            n_max=n_max,
            row_count=len(records),
            min_tn2=None if minimum is None else minimum.tn2,
            argmin=None if minimum is None else minimum.N,
            theorem3_bound=bounds.theorem3_bound(params.p, self.constants),
            remark_threshold=params.p ** REMARK_EXPONENT
        )
