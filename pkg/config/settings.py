# config/settings.py
import os
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Type

import yaml
from pydantic import Field
from pydantic.fields import FieldInfo
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
)


CONFIG_DIR = Path(__file__).resolve().parent


class StabilityConfig(BaseSettings):
    """Generalized Routh-Hurwitz engine configuration"""
    model_config = SettingsConfigDict(env_prefix="RH_")

    tolerance: float = Field(default=1e-9, gt=0)
    overflow_threshold: float = Field(default=1e100, gt=1)
    underflow_threshold: float = Field(default=1e-100, gt=0, lt=1)
    default_mode: str = Field(default="auto", pattern=r"^(auto|exact|float)$")


class OracleConfig(BaseSettings):
    """Aberth-Ehrlich root oracle configuration"""
    model_config = SettingsConfigDict(env_prefix="ORACLE_")

    tolerance: float = Field(default=1e-13, gt=0)
    max_iterations: int = Field(default=500, ge=1)
    margin: float = Field(default=1e-7, ge=0)
    residual_factor: float = Field(default=1e-8, gt=0)
    start_angle: float = Field(default=0.4)


class SweepConfig(BaseSettings):
    """Default gain-plane window"""
    model_config = SettingsConfigDict(env_prefix="SWEEP_")

    ki_range: Tuple[float, float] = Field(default=(-5.0, 0.0))
    kp_range: Tuple[float, float] = Field(default=(-20.0, 5.0))
    resolution: Tuple[int, int] = Field(default=(200, 200))
    margin: float = Field(default=1e-6, ge=0)


class SimulationConfig(BaseSettings):
    """Closed-loop RK4 simulation defaults"""
    model_config = SettingsConfigDict(env_prefix="SIM_")

    horizon: float = Field(default=60.0, gt=0)
    dt: float = Field(default=0.01, gt=0)
    sample_every: int = Field(default=10, ge=1)
    x_ref: str = Field(default="1")
    blowup_norm: float = Field(default=1e6, gt=0)


class EnvironmentYamlSource(PydanticBaseSettingsSource):
    """Values from config/environments/<environment>.yaml"""

    def __init__(self, settings_cls: Type[BaseSettings], environment: str):
        super().__init__(settings_cls)
        self.environment = environment
        self._data = self._load()

    def _load(self) -> Dict[str, Any]:
        config_path = CONFIG_DIR / "environments" / f"{self.environment}.yaml"
        if config_path.exists():
            with open(config_path, "r") as file:
                return yaml.safe_load(file) or {}
        return {}

    def get_field_value(self, field: FieldInfo, field_name: str) -> Tuple[Any, str, bool]:
        return self._data.get(field_name), field_name, False

    def __call__(self) -> Dict[str, Any]:
        return {
            name: value
            for name, value in self._data.items()
            if name in self.settings_cls.model_fields and value is not None
        }


class AppSettings(BaseSettings):
    """Main application settings"""
    model_config = SettingsConfigDict(env_file=".env", case_sensitive=False, extra="ignore")

    name: str = Field(default="Routh-Hurwitz Toolkit")
    version: str = Field(default="1.0.0")
    debug: bool = Field(default=False)
    log_level: str = Field(default="INFO")
    log_file: Optional[str] = Field(default=None)
    environment: str = Field(default="development")

    # Sub-configurations
    stability: StabilityConfig = Field(default_factory=StabilityConfig)
    oracle: OracleConfig = Field(default_factory=OracleConfig)
    sweep: SweepConfig = Field(default_factory=SweepConfig)
    simulation: SimulationConfig = Field(default_factory=SimulationConfig)

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        environment = (
            init_settings.init_kwargs.get("environment")
            or os.environ.get("ENVIRONMENT")
            or "development"
        )
        return (
            init_settings,
            env_settings,
            dotenv_settings,
            EnvironmentYamlSource(settings_cls, environment),
            file_secret_settings,
        )


def get_settings(**overrides: Any) -> AppSettings:
    """Get application settings instance"""
    return AppSettings(**{k: v for k, v in overrides.items() if v is not None})
