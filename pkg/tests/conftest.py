"""
Fixtures compartilhadas dos testes
"""

import numpy as np
import pytest

from src.integrator import LinearStructure, SplitProblem


@pytest.fixture(autouse=True)
def _no_log_file(monkeypatch):
    """Sem arquivo de log durante os testes"""
    monkeypatch.setenv('SEMILM_LOG_FILE', '')


@pytest.fixture
def decay_problem():
    """u' = -v em dimensão 1, linear em v"""
    return SplitProblem(
        dim=1,
        eval_H=lambda t, u, v: -v,
        linear=LinearStructure(eval_K=lambda t, u: np.zeros_like(u), apply_A=lambda t, u, w: -w),
        name='decay'
    )


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
