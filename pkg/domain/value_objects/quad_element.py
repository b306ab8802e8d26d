import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from domain.exceptions import InvalidArgumentError


Scalar = Union[int, Fraction]


def _log_fraction(x: Fraction) -> float:
    return math.log(x.numerator) - math.log(x.denominator)


@dataclass(frozen=True)
class QuadElement:
    """Exact element a + b*sqrt(p) of the real quadratic field Q(sqrt(p))"""
    a: Fraction
    b: Fraction
    p: int
    
    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.p < 2:
            raise InvalidArgumentError(f"QuadElement needs a radicand >= 2, got {self.p}")
    
    @classmethod
    def from_half_integers(cls, u: int, v: int, p: int) -> 'QuadElement':
        """The element (u + v*sqrt(p)) / 2"""
        return cls(Fraction(u, 2), Fraction(v, 2), p)
    
    def _coerce(self, other: Union['QuadElement', Scalar]) -> 'QuadElement':
        if isinstance(other, QuadElement):
            if other.p != self.p:
                raise InvalidArgumentError(f"Mixed fields: sqrt({self.p}) and sqrt({other.p})")
            return other
        return QuadElement(Fraction(other), Fraction(0), self.p)
    
    def __add__(self, other: Union['QuadElement', Scalar]) -> 'QuadElement':
        o = self._coerce(other)
        return QuadElement(self.a + o.a, self.b + o.b, self.p)
    
    __radd__ = __add__
    
    def __sub__(self, other: Union['QuadElement', Scalar]) -> 'QuadElement':
        o = self._coerce(other)
        return QuadElement(self.a - o.a, self.b - o.b, self.p)
    
    def __neg__(self) -> 'QuadElement':
        return QuadElement(-self.a, -self.b, self.p)
    
    def __mul__(self, other: Union['QuadElement', Scalar]) -> 'QuadElement':
        o = self._coerce(other)
        return QuadElement(
            self.a * o.a + self.b * o.b * self.p,
            self.a * o.b + self.b * o.a,
            self.p
        )
    
    __rmul__ = __mul__
    
    def __pow__(self, exponent: int) -> 'QuadElement':
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadElement(Fraction(1), Fraction(0), self.p)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result
    
    def conjugate(self) -> 'QuadElement':
        return QuadElement(self.a, -self.b, self.p)
    
    def norm(self) -> Fraction:
        return self.a * self.a - self.p * self.b * self.b
    
    def inverse(self) -> 'QuadElement':
        n = self.norm()
        if n == 0:
            raise InvalidArgumentError("Zero has no inverse")
        c = self.conjugate()
        return QuadElement(c.a / n, c.b / n, self.p)
    
    def sign(self) -> int:
        """Exact sign of a + b*sqrt(p), decided by comparing a^2 with p*b^2"""
        a, b = self.a, self.b
        if a >= 0 and b >= 0:
            return 0 if a == 0 and b == 0 else 1
        if a <= 0 and b <= 0:
            return -1
        # opposite signs: the larger square wins
        a_sq, pb_sq = a * a, self.p * b * b
        if a_sq == pb_sq:
            return 0
        dominant = a if a_sq > pb_sq else b
        return 1 if dominant > 0 else -1
    
    def is_positive(self) -> bool:
        return self.sign() > 0
    
    def is_totally_positive(self) -> bool:
        return self.is_positive() and self.conjugate().is_positive()
    
    def is_algebraic_integer(self) -> bool:
        # Z[(1 + sqrt(p))/2] for p = 1 mod 4: 2a, 2b integers of equal parity
        u, v = 2 * self.a, 2 * self.b
        return u.denominator == 1 and v.denominator == 1 and (u - v) % 2 == 0
    
    def log(self) -> float:
        """Natural logarithm of a positive element, finite even when float(self) would overflow"""
        if not self.is_positive():
            raise InvalidArgumentError(f"log needs a positive element, got {self}")
        a, b = self.a, self.b
        if b == 0:
            return _log_fraction(a)
        if a == 0:
            return _log_fraction(b) + math.log(self.p) / 2
        if a > 0 and b > 0:
            return _log_fraction(b) + math.log(float(a / b) + math.sqrt(self.p))
        # opposite signs: self = norm / conjugate, and the conjugate has same-sign coordinates
        c = self.conjugate()
        if not c.is_positive():
            c = -c
        return _log_fraction(abs(self.norm())) - c.log()

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.p)
    
    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt({self.p})"
