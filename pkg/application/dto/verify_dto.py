from enum import Enum
from typing import List

from pydantic import BaseModel, Field, model_validator


VERIFY_SCHEMA_VERSION = "1"
VERIFY_HEADER = ["schema", "claim_id", "parameters", "status", "witness"]


class ClaimStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


class ClaimStatusDTO(BaseModel):
    claim_id: str = Field(..., min_length=1)
    parameters: str = Field("", description="Parameters the check ran with")
    status: ClaimStatus
    witness: str = Field("", description="Counterexample or reported value")
    
    @model_validator(mode="after")
    def failures_carry_a_witness(self) -> 'ClaimStatusDTO':
        if self.status is ClaimStatus.FAIL and not self.witness:
            raise ValueError(f"claim {self.claim_id} failed without a witness")
        return self
    
    def csv_row(self) -> List[str]:
        return [VERIFY_SCHEMA_VERSION, self.claim_id, self.parameters, self.status.value, self.witness]
