# application/stability/commands.py
from typing import Optional
from pydantic import BaseModel, Field, ConfigDict


class CheckPolynomialCommand(BaseModel):
    """Command to decide whether a polynomial is Hurwitz"""
    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "coeffs": "3+0i,3+1i",
                "mode": "exact",
            }
        }
    )

    coeffs: str = Field(..., min_length=1)
    leading: Optional[str] = None
    mode: str = Field(default="auto", pattern=r"^(auto|exact|float)$")
    tolerance: Optional[float] = Field(None, gt=0)
    xi: Optional[str] = None
    run_id: Optional[str] = None


class BuildTableCommand(BaseModel):
    """Command to build the full generalized table (no early exit)"""
    coeffs: str = Field(..., min_length=1)
    leading: Optional[str] = None
    mode: str = Field(default="auto", pattern=r"^(auto|exact|float)$")
    tolerance: Optional[float] = Field(None, gt=0)
    run_id: Optional[str] = None
