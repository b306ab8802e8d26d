from abc import ABC, abstractmethod
from typing import Dict, Optional


class ClassNumberRepository(ABC):
    
    @abstractmethod
    def get(self, discriminant: int) -> Optional[int]:
        """Get the stored class number of a discriminant"""
        pass
    
    @abstractmethod
    def add(self, discriminant: int, class_number: int) -> None:
        """Record a freshly computed class number"""
        pass
    
    @abstractmethod
    def all(self) -> Dict[int, int]:
        """All stored entries keyed by discriminant"""
        pass
    
    @abstractmethod
    def flush(self) -> None:
        """Persist pending entries"""
        pass
    
    def __contains__(self, discriminant: int) -> bool:
        return self.get(discriminant) is not None
