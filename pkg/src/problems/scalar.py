"""
Problema Escalar de Dahlquist Particionado
H(t, u, v) = iλu + μv, solução exata exp((iλ + μ)t)·u0
"""

import numpy as np

from src.integrator import LinearStructure, SplitProblem
from .base import BenchmarkProblem


def scalar_problem(lam: float = 1.0, mu: float = -2.0, u0: complex = 1.0) -> BenchmarkProblem:
    """Parte oscilatória explícita (iλ), parte dissipativa implícita (μ)"""
    rate = 1j * lam + mu
    u0 = np.array([u0], dtype=complex)

    def eval_K(t, u):
        return 1j * lam * u

    def apply_A(t, u, w):
        return mu * w

    def eval_H(t, u, v):
        return 1j * lam * u + mu * v

    def shifted_solve(t, u, g, rhs):
        return rhs / (1.0 - g * mu)

    def exact(t):
        return u0 * np.exp(rate * t)

    problem = SplitProblem(
        dim=1,
        eval_H=eval_H,
        linear=LinearStructure(eval_K=eval_K, apply_A=apply_A,
                               diagonal_A=lambda t, u: np.full(1, mu, dtype=complex),
                               shifted_solve=shifted_solve),
        dtype=complex,
        name='scalar'
    )
    return BenchmarkProblem(name='scalar', problem=problem, ncomp=1, initial=u0, exact=exact,
                            exact_dt=lambda t: rate * exact(t), parameters={'lam': lam, 'mu': mu})
