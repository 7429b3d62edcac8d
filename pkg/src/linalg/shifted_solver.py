"""
Solver Linear Deslocado
Resolve (I - γA)x = rhs sem montar A: eliminação densa para dimensões
pequenas e GMRES(30) reiniciado com precondicionador diagonal opcional
"""

import math
from typing import Callable, Optional

import numpy as np
import scipy.linalg
from loguru import logger
from scipy.sparse.linalg import LinearOperator, aslinearoperator, gmres

from src.exceptions import LinearSolveError

DENSE_LIMIT = 64
GMRES_RESTART = 30


def make_operator(dim: int, apply: Callable[[np.ndarray], np.ndarray], dtype=float) -> LinearOperator:
    """
    Operador linear livre de matriz

    Args:
        dim: Dimensão do espaço
        apply: Função w -> A·w
        dtype: Tipo numérico das ações
    """
    return LinearOperator((dim, dim), matvec=apply, dtype=np.dtype(dtype))


def _relative_residual(shifted: LinearOperator, x: np.ndarray, rhs: np.ndarray, rhs_norm: float) -> float:
    return float(np.linalg.norm(rhs - shifted.matvec(x)) / rhs_norm)


def _dense_solve(A: LinearOperator, gamma: float, rhs: np.ndarray, dtype) -> np.ndarray:
    dim = rhs.shape[0]
    columns = np.empty((dim, dim), dtype=dtype)
    identity = np.eye(dim, dtype=dtype)
    for k in range(dim):
        columns[:, k] = A.matvec(identity[:, k])
    matrix = identity - gamma * columns
    try:
        return scipy.linalg.solve(matrix, rhs)
    except (scipy.linalg.LinAlgError, ValueError) as e:
        raise LinearSolveError(f"Sistema deslocado singular: {e}", float('inf'), 0) from e


def solve_shifted(A, gamma: float, rhs: np.ndarray, tol: float = 1e-10, maxiter: int = 2000,
                  diagonal: Optional[np.ndarray] = None, method: str = 'auto',
                  restart: int = GMRES_RESTART) -> np.ndarray:
    """
    Resolve (I - γA)x = rhs

    Args:
        A: LinearOperator (ou matriz) de dimensão m
        gamma: Deslocamento γ (Δt·b_{-1} no corretor)
        rhs: Lado direito de dimensão m
        tol: Resíduo relativo ‖rhs - (x - γAx)‖/‖rhs‖ exigido
        maxiter: Limite de iterações internas do GMRES
        diagonal: Diagonal de A para o precondicionador de Jacobi
        method: 'auto', 'dense' ou 'gmres'

    Returns:
        Solução x
    """
    A = aslinearoperator(A)
    rhs = np.asarray(rhs)
    dim = A.shape[0]
    if rhs.shape != (dim,):
        raise LinearSolveError(f"Dimensão do lado direito {rhs.shape} incompatível com {dim}", float('inf'), 0)

    dtype = np.result_type(A.dtype, rhs.dtype, np.float64)
    rhs = rhs.astype(dtype, copy=False)
    if gamma == 0.0:
        return rhs.copy()
    rhs_norm = float(np.linalg.norm(rhs))
    if rhs_norm == 0.0:
        return np.zeros(dim, dtype=dtype)

    if method == 'dense' or (method == 'auto' and dim <= DENSE_LIMIT):
        return _dense_solve(A, gamma, rhs, dtype)

    shifted = LinearOperator((dim, dim), matvec=lambda w: w - gamma * A.matvec(w), dtype=dtype)
    preconditioner = None
    if diagonal is not None:
        shifted_diag = 1.0 - gamma * np.asarray(diagonal)
        inverse = np.where(shifted_diag != 0.0, 1.0 / np.where(shifted_diag != 0.0, shifted_diag, 1.0), 1.0)
        preconditioner = LinearOperator((dim, dim), matvec=lambda w: inverse * w, dtype=dtype)

    counter = {'iterations': 0}

    def _count(_):
        counter['iterations'] += 1

    x = None
    residual = float('inf')
    # Ciclos extras só são usados se o teste interno do GMRES parar antes do resíduo verdadeiro
    while counter['iterations'] < maxiter:
        remaining = maxiter - counter['iterations']
        x, info = gmres(shifted, rhs, x0=x, rtol=tol, atol=0.0, restart=restart,
                        maxiter=max(1, math.ceil(remaining / restart)), M=preconditioner,
                        callback=_count, callback_type='pr_norm')
        residual = _relative_residual(shifted, x, rhs, rhs_norm)
        if residual <= tol or info < 0:
            break

    if not residual <= tol:
        logger.error(f"❌ GMRES não convergiu: resíduo {residual:.3e} após {counter['iterations']} iterações")
        raise LinearSolveError("GMRES não convergiu", residual, counter['iterations'])

    logger.debug(f"🔧 GMRES: {counter['iterations']} iterações, resíduo {residual:.2e}")
    return x
