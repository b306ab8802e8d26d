from fractions import Fraction
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from application.services.formatting import format_cell, format_rational, format_real


SCAN_HEADER = [
    "N", "eligible", "tn2", "sigma_floor",
    "lemma2_statement", "lemma2_proof", "viol_statement", "viol_proof"
]


class ScanRecordDTO(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)
    
    N: int = Field(..., ge=1, description="Index of the curve T_N")
    eligible: bool = Field(..., description="Whether chi_p(N*A) != -1")
    tn2: Optional[Union[Fraction, float]] = Field(None, description="T_N^2, exact unless I_p is included")
    sigma_floor: Optional[Fraction] = Field(None, description="-sigma_1(N)/6")
    lemma2_statement: Optional[float] = Field(None, description="Lemma 2 bound, statement coefficient")
    lemma2_proof: Optional[float] = Field(None, description="Lemma 2 bound, proof coefficient")
    viol_statement: bool = Field(False, description="tn2 below the statement bound")
    viol_proof: bool = Field(False, description="tn2 below the proof bound")
    
    def csv_row(self) -> List[str]:
        return [format_cell(getattr(self, column)) for column in SCAN_HEADER]


class ScanSummaryDTO(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)
    
    p: int
    n_max: int
    row_count: int
    min_tn2: Optional[Union[Fraction, float]] = None
    argmin: Optional[int] = None
    theorem3_bound: float
    remark_threshold: float = Field(..., description="p^(15/7)")
    
    @property
    def argmin_below_remark(self) -> Optional[bool]:
        if self.argmin is None:
            return None
        return self.argmin <= self.remark_threshold
    
    def summary_line(self) -> str:
        if self.argmin is None:
            return f"p={self.p} n_max={self.n_max}: no eligible N"
        minimum = format_rational(self.min_tn2) if isinstance(self.min_tn2, Fraction) else format_real(self.min_tn2)
        return (
            f"p={self.p} n_max={self.n_max} rows={self.row_count} "
            f"min_tn2={minimum} argmin={self.argmin} "
            f"theorem3_bound={format_real(self.theorem3_bound)} "
            f"argmin_le_p^(15/7)={format_cell(self.argmin_below_remark)}"
        )
