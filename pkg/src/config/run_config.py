"""
Configuração de Execução
Modelo pydantic validado de um run (esquema, problema, malha, regra de Δt)
"""

import math
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.exceptions import SchemeError
from src.integrator import IntegratorConfig, StartupMode
from src.schemes import canonical_name

ProblemName = Literal['test1', 'test2', 'test3', 'scalar']


def uniform_dt(span: float, target: float) -> float:
    """Maior Δt ≤ target que divide span em passos inteiros: span / ceil(span/target)"""
    return span / math.ceil(span / target - 1e-12)


class RunConfig(BaseModel):
    """
    Parâmetros de um run; Δt explícito (dt) ou pela regra Δt = λΔx (lam)
    """

    model_config = ConfigDict(frozen=True)

    scheme: str = 'SSP-BDF4'
    problem: ProblemName = 'test3'
    n: int = Field(default=200, ge=8)
    dt: Optional[float] = Field(default=None, gt=0.0)
    lam: Optional[float] = Field(default=0.5, gt=0.0)
    t0: float = 0.0
    t_final: float = 1.0
    startup: StartupMode = StartupMode.EXACT
    output_dir: str = 'output'
    frames: List[float] = Field(default_factory=list)
    linear_tol: float = Field(default=1e-10, gt=0.0, lt=1.0)
    linear_maxiter: int = Field(default=2000, ge=1)
    cascade_substeps: Optional[int] = Field(default=None, ge=1)

    @field_validator('scheme')
    @classmethod
    def _known_scheme(cls, value: str) -> str:
        try:
            return canonical_name(value)
        except SchemeError as e:
            raise ValueError(str(e)) from e

    @field_validator('problem', mode='before')
    @classmethod
    def _lower_problem(cls, value):
        return value.strip().lower() if isinstance(value, str) else value

    @field_validator('startup', mode='before')
    @classmethod
    def _lower_startup(cls, value):
        return value.strip().lower() if isinstance(value, str) else value

    @field_validator('frames', mode='before')
    @classmethod
    def _parse_frames(cls, value):
        if isinstance(value, str):
            return [float(x) for x in value.replace(';', ',').split(',') if x.strip()]
        return value

    @model_validator(mode='after')
    def _check_times(self) -> 'RunConfig':
        if not self.t_final > self.t0:
            raise ValueError(f"t_final={self.t_final} deve ser maior que t0={self.t0}")
        if self.dt is None and self.lam is None:
            raise ValueError("Informe dt ou lam")
        for t in self.frames:
            if t < self.t0 or t > self.t_final:
                raise ValueError(f"Quadro em t={t} fora de [{self.t0}, {self.t_final}]")
        return self

    def resolve_dt(self, dx: float) -> float:
        """Δt do run; com lam usa Δt = (T - t0)/ceil((T - t0)/(λΔx))"""
        if self.dt is not None:
            return self.dt
        return uniform_dt(self.t_final - self.t0, self.lam * dx)

    def integrator_config(self, dt: float) -> IntegratorConfig:
        return IntegratorConfig(
            dt=dt,
            startup=self.startup,
            linear_tol=self.linear_tol,
            linear_maxiter=self.linear_maxiter,
            cascade_substeps=self.cascade_substeps
        )
