"""
Teste 2: Gray-Scott
Difusão explícita, reações lineares implícitas e o termo não linear implícito
só na componente ω1; solve deslocado ponto a ponto em forma fechada
"""

import numpy as np

from src.exceptions import GridError
from src.integrator import LinearStructure, SplitProblem
from .base import BenchmarkProblem
from .grid import PeriodicGrid2D
from .stencils import laplacian

LAPLACIAN_ORDER = 4
SIGMA1 = 8e-5
SIGMA2 = 4e-5
GAMMA = 0.024
KAPPA = 0.06


def test2_grid(n: int = 200) -> PeriodicGrid2D:
    """Malha n × n em [-1, 1)²"""
    return PeriodicGrid2D(n, n, 2.0, 2.0, -1.0, -1.0)


def gray_scott_initial(grid: PeriodicGrid2D) -> np.ndarray:
    """ω2 = ¼ sin²(4πx) sin²(4πy) em [-¼, ¼]², zero fora; ω1 = 1 - 2ω2"""
    X, Y = grid.mesh()
    inside = (np.abs(X) <= 0.25) & (np.abs(Y) <= 0.25)
    w2 = np.where(inside, 0.25 * np.sin(4 * np.pi * X) ** 2 * np.sin(4 * np.pi * Y) ** 2, 0.0)
    return grid.pack(np.stack([1.0 - 2.0 * w2, w2]))


def test2_problem(grid: PeriodicGrid2D, sigma1: float = SIGMA1, sigma2: float = SIGMA2,
                  gamma: float = GAMMA, kappa: float = KAPPA) -> BenchmarkProblem:
    """
    H(t, u, v) = (σ1Δu1 - v1u2² + γ(1 - v1); σ2Δu2 + v1u2² - (γ+κ)v2)

    A(u) por nó: [[-u2² - γ, 0], [u2², -(γ+κ)]]; K(t, u) = (σ1Δu1 + γ; σ2Δu2)
    """
    if not grid.is_square() or not grid.spans(-1.0, 1.0):
        raise GridError("Teste 2 requer malha quadrada em [-1, 1)²")

    dx, dy = grid.dx, grid.dy

    def eval_K(t, u):
        U = grid.unpack(u, 2)
        return grid.pack(np.stack([
            sigma1 * laplacian(U[0], dx, dy, LAPLACIAN_ORDER) + gamma,
            sigma2 * laplacian(U[1], dx, dy, LAPLACIAN_ORDER),
        ]))

    def apply_A(t, u, w):
        U = grid.unpack(u, 2)
        W = grid.unpack(w, 2)
        u2sq = U[1] ** 2
        return grid.pack(np.stack([
            -(u2sq + gamma) * W[0],
            u2sq * W[0] - (gamma + kappa) * W[1],
        ]))

    def eval_H(t, u, v):
        return eval_K(t, u) + apply_A(t, u, v)

    def diagonal_A(t, u):
        U = grid.unpack(u, 2)
        return grid.pack(np.stack([-(U[1] ** 2 + gamma), np.full_like(U[1], -(gamma + kappa))]))

    def shifted_solve(t, u, g, rhs):
        # substituição direta no bloco 2x2 triangular inferior
        U = grid.unpack(u, 2)
        R = grid.unpack(rhs, 2)
        u2sq = U[1] ** 2
        x1 = R[0] / (1.0 + g * (u2sq + gamma))
        x2 = (R[1] + g * u2sq * x1) / (1.0 + g * (gamma + kappa))
        return grid.pack(np.stack([x1, x2]))

    problem = SplitProblem(
        dim=2 * grid.size,
        eval_H=eval_H,
        linear=LinearStructure(eval_K=eval_K, apply_A=apply_A, diagonal_A=diagonal_A,
                               shifted_solve=shifted_solve),
        name='test2'
    )
    return BenchmarkProblem(
        name='test2', problem=problem, ncomp=2, initial=gray_scott_initial(grid), grid=grid,
        parameters={'sigma1': sigma1, 'sigma2': sigma2, 'gamma': gamma, 'kappa': kappa}
    )
