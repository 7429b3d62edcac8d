"""
Teste 3: Convecção-Difusão Não Linear
∂t ω + (E - μ∇log ω)·∇ω = μΔω, truncado a [-10, 10)² com fechamento periódico

O sinal de μ∇log ω é o único que torna a solução gaussiana exata
compatível com a EDP (o resíduo da substituição é verificado nos testes).
"""

import numpy as np
from loguru import logger
from scipy import sparse
from scipy.sparse.linalg import spsolve

from src.exceptions import GridError, LinearSolveError
from src.integrator import LinearStructure, SplitProblem
from .base import BenchmarkProblem
from .grid import PeriodicGrid2D
from .stencils import gradient, grid_operators, laplacian, laplacian_diagonal

STENCIL_ORDER = 4
DRIFT = (1.0, 1.0)
MU = 0.5
U_FLOOR = 1e-300
# piso relativo ao pico: abaixo dele ∇log ω se anula
FLOOR_RATIO = 1e-12
DIRECT_RESIDUAL_TOL = 1e-9
HALF_WIDTH = 10.0


def test3_grid(dx: float = 0.1) -> PeriodicGrid2D:
    """Malha uniforme em [-10, 10)² com passo dx"""
    n = int(round(2 * HALF_WIDTH / dx))
    return PeriodicGrid2D(n, n, 2 * HALF_WIDTH, 2 * HALF_WIDTH, -HALF_WIDTH, -HALF_WIDTH)


def floored_log(U: np.ndarray, u_floor: float = U_FLOOR, floor_ratio: float = FLOOR_RATIO) -> np.ndarray:
    """log max(u, max(u_floor, floor_ratio·max u))"""
    floor = max(u_floor, floor_ratio * float(np.max(U)))
    return np.log(np.maximum(U, floor))


def test3_problem(grid: PeriodicGrid2D, drift=DRIFT, mu: float = MU, u_floor: float = U_FLOOR,
                  floor_ratio: float = FLOOR_RATIO) -> BenchmarkProblem:
    """
    Problema totalmente linear em v

    A(u)w = -(E - μG(u))·(D_x w, D_y w) + μΔw com G(u) = ∇_h floored_log(u); K ≡ 0.
    O solve deslocado monta I - γA(u) esparsa e fatora diretamente.
    """
    if not grid.is_square() or not grid.spans(-HALF_WIDTH, HALF_WIDTH):
        raise GridError("Teste 3 requer malha quadrada cobrindo [-10, 10)²")

    dx, dy = grid.dx, grid.dy
    ex, ey = drift
    lap_diag = laplacian_diagonal(dx, dy, STENCIL_ORDER)

    def velocity(u):
        U = grid.unpack(u, 1)[0]
        gx, gy = gradient(floored_log(U, u_floor, floor_ratio), dx, dy, STENCIL_ORDER)
        return ex - mu * gx, ey - mu * gy

    def _apply(vx, vy, w):
        W = grid.unpack(w, 1)[0]
        wx, wy = gradient(W, dx, dy, STENCIL_ORDER)
        return grid.pack(-(vx * wx + vy * wy) + mu * laplacian(W, dx, dy, STENCIL_ORDER))

    def apply_A(t, u, w):
        vx, vy = velocity(u)
        return _apply(vx, vy, w)

    def eval_K(t, u):
        return np.zeros(grid.size)

    def eval_H(t, u, v):
        return apply_A(t, u, v)

    def diagonal_A(t, u):
        # D_x tem peso central nulo
        return np.full(grid.size, mu * lap_diag)

    Dx, Dy, lap = grid_operators(grid.nx, grid.ny, dx, dy, STENCIL_ORDER)
    identity = sparse.identity(grid.size, format='csr')

    def shifted_solve(t, u, g, rhs):
        vx, vy = velocity(u)
        A = mu * lap - sparse.diags(np.ravel(vx)) @ Dx - sparse.diags(np.ravel(vy)) @ Dy
        matrix = (identity - g * A).tocsc()
        x = spsolve(matrix, rhs)
        rhs_norm = float(np.linalg.norm(rhs))
        residual = float(np.linalg.norm(rhs - matrix @ x)) / rhs_norm if rhs_norm > 0.0 else 0.0
        if not np.all(np.isfinite(x)) or not residual <= DIRECT_RESIDUAL_TOL:
            logger.error(f"❌ Fatoração esparsa do Teste 3 falhou: resíduo {residual:.3e}")
            raise LinearSolveError("Solve esparso direto falhou", residual, 1)
        return x

    X, Y = grid.mesh()

    def exact(t):
        s = 4.0 * mu * t + 1.0
        r2 = (X - ex * t) ** 2 + (Y - ey * t) ** 2
        return grid.pack(np.exp(-r2 / (2.0 * s)) / np.sqrt(s))

    def exact_dt(t):
        s = 4.0 * mu * t + 1.0
        rx, ry = X - ex * t, Y - ey * t
        r2 = rx ** 2 + ry ** 2
        rate = -2.0 * mu / s + (ex * rx + ey * ry) / s + 2.0 * mu * r2 / s ** 2
        return grid.pack(rate) * exact(t)

    problem = SplitProblem(
        dim=grid.size,
        eval_H=eval_H,
        linear=LinearStructure(eval_K=eval_K, apply_A=apply_A, diagonal_A=diagonal_A,
                               shifted_solve=shifted_solve),
        name='test3'
    )
    return BenchmarkProblem(
        name='test3', problem=problem, ncomp=1, initial=exact(0.0), grid=grid,
        exact=exact, exact_dt=exact_dt,
        parameters={'mu': mu, 'u_floor': u_floor, 'floor_ratio': floor_ratio, 'Ex': ex, 'Ey': ey}
    )
