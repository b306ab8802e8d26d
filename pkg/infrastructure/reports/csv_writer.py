import csv
import logging
from typing import Iterable, List, Sequence


logger = logging.getLogger(__name__)


def write_csv(path: str, header: Sequence[str], rows: Iterable[List[str]]) -> int:
    """Write rows under a header with LF line endings; returns the row count"""
    count = 0
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(row)
            count += 1
    logger.info("Wrote %d rows to %s", count, path)
    return count
