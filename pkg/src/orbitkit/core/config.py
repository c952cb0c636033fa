from __future__ import annotations

import logging
from functools import lru_cache

from pydantic import Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

_TOLERANCE_FIELDS = (
    "tolerance",
    "symplectic_tol",
    "reconstruction_tol",
    "classify_tol",
    "jordan_separation",
    "degeneracy_tol",
    "nondegenerate_tol",
    "theta_term_tol",
)


class Settings(BaseSettings):
    app_name: str = Field(default="orbitkit")
    app_version: str = Field(default="0.1.0")

    log_level: str = Field(default="WARNING")

    # Float comparison tolerances; exact kinds never consult these.
    tolerance: float = Field(default=1e-10)
    symplectic_tol: float = Field(default=1e-10)
    reconstruction_tol: float = Field(default=1e-9)
    classify_tol: float = Field(default=1e-9)
    jordan_separation: float = Field(default=1e-8)
    degeneracy_tol: float = Field(default=1e-12)
    nondegenerate_tol: float = Field(default=1e-10)

    theta_radius: int = Field(default=6, ge=1)
    theta_term_tol: float = Field(default=1e-15)
    fourier_grid: int = Field(default=64)
    rep_dimension_cap: int = Field(default=125, ge=1)
    max_workers: int = Field(default=4, ge=1)

    exact: bool = Field(default=False)

    model_config = SettingsConfigDict(
        env_prefix="ORBITKIT_",
        env_file=".env",
        case_sensitive=False,
    )

    @field_validator(*_TOLERANCE_FIELDS)
    @classmethod
    def positive_tolerance(cls, value: float) -> float:
        if value <= 0:
            raise ValueError("tolerances must be strictly positive")
        return value

    @field_validator("log_level", mode="before")
    @classmethod
    def known_log_level(cls, value: object) -> object:
        if isinstance(value, str):
            level = value.strip().upper()
            if level not in logging.getLevelNamesMapping():
                raise ValueError(f"unknown log level: {value!r}")
            return level
        return value

    @field_validator("fourier_grid")
    @classmethod
    def fourier_grid_range(cls, value: int) -> int:
        if not 64 <= value <= 256:
            raise ValueError("fourier_grid must lie in 64..256")
        return value

    @model_validator(mode="after")
    def validate_tolerance_ordering(self) -> "Settings":
        """The reconstruction tolerance may never be tighter than the base tolerance."""
        if self.tolerance > self.reconstruction_tol:
            raise ValueError("tolerance must not exceed reconstruction_tol")
        return self

    def with_overrides(self, *, tol: float | None = None, exact: bool | None = None) -> "Settings":
        """Return a copy with CLI overrides applied (``--tol`` / ``--exact``)."""
        update: dict[str, object] = {}
        if tol is not None:
            if tol <= 0:
                raise ValueError("--tol must be strictly positive")
            update["tolerance"] = tol
            update["reconstruction_tol"] = max(self.reconstruction_tol, tol)
        if exact is not None:
            update["exact"] = exact
        return self.model_copy(update=update) if update else self


@lru_cache
def get_settings() -> Settings:
    return Settings()
