import math
from dataclasses import dataclass, field


EULER_GAMMA = 0.5772156649015329
EXP_GAMMA = math.exp(EULER_GAMMA)

# Robin's two-term divisor bound as printed; the sharp constant is 0.648213...
PRINTED_ROBIN_CONSTANT = 0.6482
PUBLISHED_ROBIN_CONSTANT = 0.6483


@dataclass(frozen=True)
class BoundConstants:
    """delta and c of the Lemma 2 bound, unconditional or under RH"""
    rh_mode: bool = False
    robin_constant: float = PRINTED_ROBIN_CONSTANT
    delta: float = field(init=False)
    c: float = field(init=False)
    
    def __post_init__(self):
        if self.rh_mode:
            object.__setattr__(self, "delta", math.pi / (6 * EXP_GAMMA))
            object.__setattr__(self, "c", EXP_GAMMA)
        else:
            object.__setattr__(self, "delta", math.pi / (12 * EXP_GAMMA))
            object.__setattr__(self, "c", EXP_GAMMA + self.robin_constant)
    
    @classmethod
    def riemann_hypothesis(cls) -> 'BoundConstants':
        return cls(rh_mode=True)
