from dataclasses import dataclass

from sympy import isprime

from domain.exceptions import InvalidArgumentError


PRIME_ONE_MOD_FOUR_MESSAGE = "p must be a prime ≡ 1 mod 4"


def require_prime_one_mod_four(p: int) -> None:
    if not isinstance(p, int) or p % 4 != 1 or not isprime(p):
        raise InvalidArgumentError(PRIME_ONE_MOD_FOUR_MESSAGE)


@dataclass(frozen=True)
class HzParams:
    """Ambient data of a Hilbert modular surface: the prime p and A = Norm(a)"""
    p: int
    A: int = 1
    
    def __post_init__(self):
        require_prime_one_mod_four(self.p)
        if not isinstance(self.A, int) or self.A < 1:
            raise InvalidArgumentError(f"A must be a positive integer, got {self.A}")
    
    def __str__(self) -> str:
        return f"p={self.p}, A={self.A}"
