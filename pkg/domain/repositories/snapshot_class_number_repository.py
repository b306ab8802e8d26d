from typing import Dict, Optional

from domain.repositories.class_number_repository import ClassNumberRepository


class SnapshotClassNumberRepository(ClassNumberRepository):
    """In-memory copy of another repository's entries; nothing is ever written back"""
    
    def __init__(self, entries: Dict[int, int]):
        self._entries = dict(entries)
    
    def get(self, discriminant: int) -> Optional[int]:
        return self._entries.get(discriminant)
    
    def add(self, discriminant: int, class_number: int) -> None:
        self._entries[discriminant] = class_number
    
    def all(self) -> Dict[int, int]:
        return dict(self._entries)
    
    def flush(self) -> None:
        pass
