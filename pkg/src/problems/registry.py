"""
Registro de Problemas
Nome -> construtor com n nós por lado
"""

from typing import Callable, Dict, Tuple

import numpy as np

from src.exceptions import ConfigError
from .base import BenchmarkProblem
from .convection_diffusion import HALF_WIDTH, test3_problem
from .gray_scott import test2_grid, test2_problem
from .grid import PeriodicGrid2D
from .reaction_diffusion import test1_problem
from .scalar import scalar_problem

PROBLEM_NAMES: Tuple[str, ...] = ('test1', 'test2', 'test3', 'scalar')

# domínio [lo, hi) de cada problema espacial
DOMAINS: Dict[str, Tuple[float, float]] = {
    'test1': (0.0, 2.0 * np.pi),
    'test2': (-1.0, 1.0),
    'test3': (-HALF_WIDTH, HALF_WIDTH),
}


def grid_for(name: str, n: int) -> PeriodicGrid2D:
    """Malha quadrada n × n no domínio do problema"""
    if name not in DOMAINS:
        raise ConfigError(f"Problema {name!r} não tem malha espacial")
    if name == 'test2':
        return test2_grid(n)
    lo, hi = DOMAINS[name]
    return PeriodicGrid2D(n, n, hi - lo, hi - lo, lo, lo)


_BUILDERS: Dict[str, Callable[[PeriodicGrid2D], BenchmarkProblem]] = {
    'test1': test1_problem,
    'test2': test2_problem,
    'test3': test3_problem,
}


def build_problem(name: str, n: int = 64, **options) -> BenchmarkProblem:
    """
    Instancia um problema pelo nome

    Args:
        name: test1, test2, test3 ou scalar
        n: Nós por lado (ignorado no escalar)
        options: Parâmetros extras repassados ao construtor
    """
    key = name.strip().lower()
    if key == 'scalar':
        return scalar_problem(**options)
    if key not in _BUILDERS:
        raise ConfigError(f"Problema desconhecido: {name!r} (disponíveis: {', '.join(PROBLEM_NAMES)})")
    return _BUILDERS[key](grid_for(key, n), **options)
