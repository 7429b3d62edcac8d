"""
Problema de Referência
Agrupa o SplitProblem, a malha, o dado inicial e a solução exata (quando existe)
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, Optional

import numpy as np

from src.exceptions import ConfigError
from src.integrator import SplitProblem
from .grid import PeriodicGrid2D

StateFunction = Callable[[float], np.ndarray]


@dataclass
class BenchmarkProblem:
    """Discretização por linhas de um problema de teste"""

    name: str
    problem: SplitProblem
    ncomp: int
    initial: np.ndarray
    grid: Optional[PeriodicGrid2D] = None
    exact: Optional[StateFunction] = None
    exact_dt: Optional[StateFunction] = None
    t0: float = 0.0
    parameters: Dict[str, float] = field(default_factory=dict)

    @property
    def has_exact(self) -> bool:
        return self.exact is not None

    def residual(self, t: float) -> np.ndarray:
        """dω/dt - H(t, ω, ω) com a solução exata (erro de truncamento espacial)"""
        if self.exact is None or self.exact_dt is None:
            raise ConfigError(f"{self.name}: problema sem solução exata")
        w = self.exact(t)
        return self.exact_dt(t) - self.problem.eval_H(t, w, w)
