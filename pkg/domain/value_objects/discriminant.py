from dataclasses import dataclass
from typing import Union

from domain.exceptions import InvalidDiscriminantError


@dataclass(frozen=True)
class Discriminant:
    value: int
    
    def __post_init__(self):
        if not self._is_valid_discriminant(self.value):
            raise InvalidDiscriminantError(
                f"Invalid discriminant {self.value}: must be <= -3 and congruent to 0 or 1 mod 4"
            )
    
    @staticmethod
    def _is_valid_discriminant(value: int) -> bool:
        return value <= -3 and value % 4 in (0, 1)
    
    @classmethod
    def is_valid(cls, value: int) -> bool:
        return cls._is_valid_discriminant(value)
    
    @property
    def absolute(self) -> int:
        return -self.value
    
    def __int__(self) -> int:
        return self.value
    
    def __str__(self) -> str:
        return str(self.value)
    
    def __eq__(self, other: Union['Discriminant', int]) -> bool:
        if isinstance(other, Discriminant):
            return self.value == other.value
        elif isinstance(other, int):
            return self.value == other
        return False
    
    def __hash__(self) -> int:
        return hash(self.value)
