from dataclasses import dataclass


@dataclass(frozen=True)
class RobinBound:
    two_term: float
    merged: float
    
    @property
    def merged_dominates(self) -> bool:
        return self.merged >= self.two_term


@dataclass(frozen=True)
class Lemma1Result:
    rhs1: float
    rhs2: float
    rhs3: float
    term_count: int
    
    @property
    def is_empty(self) -> bool:
        return self.term_count == 0
    
    def is_ordered(self, rel_tol: float = 1e-9) -> bool:
        slack = rel_tol * max(1.0, abs(self.rhs1), abs(self.rhs2), abs(self.rhs3))
        return self.rhs1 + slack >= self.rhs2 and self.rhs2 + slack >= self.rhs3
