from dataclasses import dataclass

from domain.exceptions import InvalidArgumentError
from domain.value_objects.quad_element import QuadElement


@dataclass(frozen=True)
class FundamentalUnit:
    epsilon: QuadElement
    norm: int
    epsilon_plus: QuadElement
    period_length: int
    
    @classmethod
    def create(cls, epsilon: QuadElement, period_length: int) -> 'FundamentalUnit':
        norm = epsilon.norm()
        if norm not in (1, -1):
            raise InvalidArgumentError(f"{epsilon} is not a unit (norm {norm})")
        if not (epsilon - 1).is_positive():
            raise InvalidArgumentError(f"{epsilon} is not a unit greater than 1")
        epsilon_plus = epsilon if norm == 1 else epsilon * epsilon
        return cls(
            epsilon=epsilon,
            norm=int(norm),
            epsilon_plus=epsilon_plus,
            period_length=period_length
        )
    
    @property
    def p(self) -> int:
        return self.epsilon.p
