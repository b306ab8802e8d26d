from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from domain.exceptions import InvalidArgumentError


@dataclass(frozen=True)
class SurfaceData:
    c2: float
    ksq: float
    d2: float = field(init=False)
    
    def __post_init__(self):
        object.__setattr__(self, "d2", 3 * self.c2 - self.ksq)


@dataclass(frozen=True)
class CurveData:
    """Intersection data of a curve C: C^2, K.C, geometric genus, S.C and rho(C)"""
    csq: float
    kc: float
    g: int
    sc: float = 0.0
    rho: float = 0.0
    
    @classmethod
    def create(cls, csq: float, kc: float, g: int, sc: float = 0.0, rho: float = 0.0) -> 'CurveData':
        if not isinstance(g, int) or g < 0:
            raise InvalidArgumentError(f"genus must be a nonnegative integer, got {g}")
        if sc < 0:
            raise InvalidArgumentError(f"S.C must be nonnegative, got {sc}")
        if rho < 0:
            raise InvalidArgumentError(f"rho must be nonnegative, got {rho}")
        return cls(csq=csq, kc=kc, g=g, sc=sc, rho=rho)
    
    @classmethod
    def proportional(cls, csq: float, g: int, sc: float = 0.0, rho: float = 0.0) -> 'CurveData':
        """The curve whose K.C satisfies the proportionality relation for the given data"""
        delta = (csq + 2 * g - 2 + sc + rho) / 2
        return cls.create(csq=csq, kc=2 * delta - csq + 2 * g - 2, g=g, sc=sc, rho=rho)


@dataclass(frozen=True)
class QuotientSingularities:
    p: int
    a2_exact: int
    a2_lower: float
    a3p_lower: float
    a3m_lower: float
    a3m_class_lower: Fraction
    contribution_lower: float
    warning: Optional[str] = None
    
    @property
    def in_valid_range(self) -> bool:
        return self.warning is None
