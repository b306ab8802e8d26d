import logging
import os
from typing import Dict, Optional

from domain.exceptions import CacheFormatError
from domain.repositories.class_number_repository import ClassNumberRepository
from domain.value_objects.discriminant import Discriminant


logger = logging.getLogger(__name__)


def _parse_line(line: str, line_number: int):
    fields = line.split("\t")
    if len(fields) != 2:
        raise CacheFormatError(f"expected '<discriminant>\\t<class number>', got {line!r}", line_number)
    try:
        discriminant, class_number = int(fields[0]), int(fields[1])
    except ValueError:
        raise CacheFormatError(f"non-integer field in {line!r}", line_number) from None
    if not Discriminant.is_valid(discriminant):
        raise CacheFormatError(f"{discriminant} is not a negative discriminant", line_number)
    if class_number < 1:
        raise CacheFormatError(f"class number must be positive, got {class_number}", line_number)
    return discriminant, class_number


def cache_load(path: str) -> Dict[int, int]:
    """Read a tab separated class number table; OSError propagates"""
    with open(path, "r", encoding="utf-8", newline="") as handle:
        content = handle.read()
    table: Dict[int, int] = {}
    lines = content.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for line_number, line in enumerate(lines, start=1):
        discriminant, class_number = _parse_line(line, line_number)
        if discriminant in table:
            raise CacheFormatError(f"duplicate discriminant {discriminant}", line_number)
        table[discriminant] = class_number
    return table


def cache_store(table: Dict[int, int], path: str) -> None:
    rows = sorted(table.items(), key=lambda item: -item[0])
    directory = os.path.dirname(os.path.abspath(path))
    tmp_path = os.path.join(directory, f".{os.path.basename(path)}.tmp")
    with open(tmp_path, "w", encoding="ascii", newline="") as handle:
        for discriminant, class_number in rows:
            handle.write(f"{discriminant}\t{class_number}\n")
    os.replace(tmp_path, path)


class TsvClassNumberRepository(ClassNumberRepository):
    def __init__(self, path: str):
        self.path = path
        self._table: Optional[Dict[int, int]] = None
        self._dirty = False
    
    def _entries(self) -> Dict[int, int]:
        if self._table is None:
            if os.path.exists(self.path):
                self._table = cache_load(self.path)
                logger.debug("Loaded %d class numbers from %s", len(self._table), self.path)
            else:
                self._table = {}
        return self._table
    
    def get(self, discriminant: int) -> Optional[int]:
        return self._entries().get(discriminant)
    
    def add(self, discriminant: int, class_number: int) -> None:
        entries = self._entries()
        if entries.get(discriminant) != class_number:
            entries[discriminant] = class_number
            self._dirty = True
    
    def all(self) -> Dict[int, int]:
        return dict(self._entries())
    
    def flush(self) -> None:
        if not self._dirty:
            return
        cache_store(self._entries(), self.path)
        self._dirty = False
        logger.debug("Stored %d class numbers in %s", len(self._table), self.path)
