"""
Configuração do Integrador
"""

import os
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator


class StartupMode(str, Enum):
    """Geração dos s valores iniciais"""

    EXACT = 'exact'
    CASCADE = 'cascade'


def _env_float(name: str, default: float) -> float:
    return float(os.getenv(name, default))


def _env_int(name: str, default: int) -> int:
    return int(os.getenv(name, default))


class IntegratorConfig(BaseModel):
    """
    Parâmetros de um run

    cascade_substeps=None usa 2^p sub-passos no arranque em cascata.
    """

    model_config = ConfigDict(frozen=True)

    dt: float = Field(gt=0.0)
    startup: StartupMode = StartupMode.CASCADE
    linear_tol: float = Field(default_factory=lambda: _env_float('SEMILM_LINEAR_TOL', 1e-10), gt=0.0, lt=1.0)
    linear_maxiter: int = Field(default_factory=lambda: _env_int('SEMILM_LINEAR_MAXITER', 2000), ge=1)
    cascade_substeps: Optional[int] = Field(default=None, ge=1)
    restart: int = Field(default=30, ge=1)
    check_finite: bool = True

    @field_validator('startup', mode='before')
    @classmethod
    def _normalize_startup(cls, value):
        if isinstance(value, str):
            return value.strip().lower()
        return value

    def substeps_for(self, order: int) -> int:
        """Número de sub-passos do arranque em cascata"""
        return self.cascade_substeps if self.cascade_substeps is not None else 2 ** max(order, 0)
