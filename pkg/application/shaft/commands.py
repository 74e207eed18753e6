# application/shaft/commands.py
from typing import Optional, Tuple, Union
from pydantic import BaseModel, Field, ConfigDict, field_validator


class ShaftParamsCommand(BaseModel):
    """Physical parameters shared by the shaft commands; numbers stay text until parsed"""
    k: str = Field(..., min_length=1)
    omega: str = Field(..., min_length=1)
    big_omega: str = Field(..., min_length=1)
    run_id: Optional[str] = None


class AnalyzeShaftCommand(ShaftParamsCommand):
    """Command to evaluate the stability conditions at one gain pair"""
    model_config = ConfigDict(
        json_schema_extra={
            "example": {"k": "1", "omega": "2", "big_omega": "2", "kp": "-10", "ki": "-1"}
        }
    )

    kp: str = Field(..., min_length=1)
    ki: str = Field(..., min_length=1)
    oracle: bool = False


class SweepGainsCommand(ShaftParamsCommand):
    """Command to sweep the (kI, kp) plane"""
    ki_range: Optional[str] = Field(None, pattern=r"^[^:]+:[^:]+$")
    kp_range: Optional[str] = Field(None, pattern=r"^[^:]+:[^:]+$")
    resolution: Optional[Tuple[int, int]] = None
    out: str = Field(..., min_length=1)
    svg: Optional[str] = None
    margin: Optional[float] = Field(None, ge=0)

    @field_validator("resolution", mode="before")
    @classmethod
    def parse_resolution(cls, value: Union[None, str, int, Tuple[int, int]]):
        if value is None:
            return None
        if isinstance(value, int):
            value = (value, value)
        if isinstance(value, str):
            parts = value.lower().split("x")
            if len(parts) == 1:
                parts = parts * 2
            if len(parts) != 2 or not all(p.strip().isdigit() for p in parts):
                raise ValueError(f"resolution must look like N or NxM, got {value!r}")
            value = (int(parts[0]), int(parts[1]))
        if min(value) < 2:
            raise ValueError("resolution must be at least 2 per axis")
        return value


class SimulateCommand(ShaftParamsCommand):
    """Command to integrate the closed loop in time"""
    kp: str = Field(..., min_length=1)
    ki: str = Field(..., min_length=1)
    x_ref: Optional[str] = None
    x0: str = "0"
    v0: str = "0"
    l0: str = "0"
    horizon: Optional[float] = Field(None, gt=0)
    dt: Optional[float] = Field(None, gt=0)
    sample_every: Optional[int] = Field(None, ge=1)
    out: Optional[str] = None
