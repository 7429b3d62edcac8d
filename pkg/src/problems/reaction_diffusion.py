"""
Teste 1: Reação-Difusão com Solução Manufaturada
∂t ω1 = Δω1 - α(t)ω1² + 9/2 ω1 + ω2 + f(t), ∂t ω2 = Δω2 + 7/2 ω2 em [0, 2π)²
com α = 2e^{t/2}, f = -2e^{-t/2}
"""

import numpy as np

from src.exceptions import GridError
from src.integrator import LinearStructure, SplitProblem
from .base import BenchmarkProblem
from .grid import PeriodicGrid2D
from .stencils import laplacian, laplacian_diagonal

LAPLACIAN_ORDER = 6
OMEGA1_SHIFT = 4.5
# 7/2 é o valor que torna a solução exata compatível com a EDP
OMEGA2_SHIFT = 3.5


def alpha(t: float) -> float:
    return 2.0 * np.exp(t / 2.0)


def forcing(t: float) -> float:
    return -2.0 * np.exp(-t / 2.0)


def test1_grid(k: int) -> PeriodicGrid2D:
    """Malha 2^k × 2^k em [0, 2π)²"""
    n = 2 ** k
    return PeriodicGrid2D(n, n, 2.0 * np.pi, 2.0 * np.pi)


def test1_problem(grid: PeriodicGrid2D) -> BenchmarkProblem:
    """
    Sistema acoplado do Teste 1 com estrutura linear

    A(t, u) = [[Δ - α(t)diag(u1) + 9/2, I], [0, Δ + 7/2]], K(t, u) = (f(t); 0)
    """
    if not grid.is_square() or not grid.spans(0.0, 2.0 * np.pi):
        raise GridError("Teste 1 requer malha quadrada em [0, 2π)²")

    dx, dy = grid.dx, grid.dy
    lap_diag = laplacian_diagonal(dx, dy, LAPLACIAN_ORDER)

    def lap(w):
        return laplacian(w, dx, dy, LAPLACIAN_ORDER)

    def apply_A(t, u, w):
        U = grid.unpack(u, 2)
        W = grid.unpack(w, 2)
        out = np.empty_like(W, dtype=np.result_type(U, W))
        out[0] = lap(W[0]) - alpha(t) * U[0] * W[0] + OMEGA1_SHIFT * W[0] + W[1]
        out[1] = lap(W[1]) + OMEGA2_SHIFT * W[1]
        return grid.pack(out)

    def eval_K(t, u):
        out = np.zeros((2, grid.ny, grid.nx))
        out[0] = forcing(t)
        return grid.pack(out)

    def eval_H(t, u, v):
        return eval_K(t, u) + apply_A(t, u, v)

    def diagonal_A(t, u):
        U = grid.unpack(u, 2)
        diag = np.empty((2, grid.ny, grid.nx))
        diag[0] = lap_diag - alpha(t) * U[0] + OMEGA1_SHIFT
        diag[1] = lap_diag + OMEGA2_SHIFT
        return grid.pack(diag)

    X, _ = grid.mesh()

    def exact(t):
        decay = np.exp(-t / 2.0)
        return grid.pack(np.stack([decay * (1.0 + np.cos(X)), decay * np.cos(2.0 * X)]))

    def exact_dt(t):
        return -0.5 * exact(t)

    problem = SplitProblem(
        dim=2 * grid.size,
        eval_H=eval_H,
        linear=LinearStructure(eval_K=eval_K, apply_A=apply_A, diagonal_A=diagonal_A),
        name='test1'
    )
    return BenchmarkProblem(name='test1', problem=problem, ncomp=2, initial=exact(0.0), grid=grid,
                            exact=exact, exact_dt=exact_dt)
