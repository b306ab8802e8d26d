from enum import Enum


class Lemma2Variant(str, Enum):
    """Which printed coefficient to use where a statement and its proof disagree"""
    STATEMENT = "statement"
    PROOF = "proof"
    
    def __str__(self) -> str:
        return self.value
