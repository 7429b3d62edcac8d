"""
Módulo Integrator - semilm
Passo semi-implícito preditor-corretor, histórico, arranque e laço de integração
"""

from .config import IntegratorConfig, StartupMode
from .history import History, Slot
from .runner import IntegrationResult, Observer, integrate, step_count
from .semi_implicit import corrector_rhs, fixed_point_correct, predict, step
from .split_problem import InstrumentedProblem, LinearStructure, SplitProblem
from .startup import startup

__version__ = "1.0.0"

__all__ = [
    'IntegratorConfig',
    'StartupMode',
    'History',
    'Slot',
    'IntegrationResult',
    'Observer',
    'integrate',
    'step_count',
    'corrector_rhs',
    'fixed_point_correct',
    'predict',
    'step',
    'InstrumentedProblem',
    'LinearStructure',
    'SplitProblem',
    'startup',
]
