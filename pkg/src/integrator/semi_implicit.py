"""
Passo Semi-Implícito Preditor-Corretor
Preditor explícito com avaliações em cache e corretor implícito apenas no
argumento rígido; um solve linear quando H é linear em v, ponto fixo caso contrário
"""

from typing import Optional

import numpy as np
from loguru import logger

from src.exceptions import ConvergenceError
from src.linalg import make_operator, solve_shifted
from src.schemes import SchemeCoefficients
from .config import IntegratorConfig
from .history import History, Slot
from .split_problem import SplitProblem


def _weighted_history(c: SchemeCoefficients, hist: History, dt: float,
                      a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """-Σ a_j u^{n-j} + Δt Σ b_j h^{n-j}"""
    acc = np.zeros_like(hist[0].u, dtype=np.result_type(hist[0].u, hist[0].h))
    for j in range(c.s):
        slot = hist[j]
        if a[j] != 0.0:
            acc -= a[j] * slot.u
        if b[j] != 0.0:
            acc += (dt * b[j]) * slot.h
    return acc


def predict(c: SchemeCoefficients, hist: History, dt: float) -> np.ndarray:
    """Preditor û^{n+1} com as avaliações do histórico"""
    return _weighted_history(c, hist, dt, c.tilde_a_array, c.tilde_b_array)


def corrector_rhs(c: SchemeCoefficients, hist: History, dt: float) -> np.ndarray:
    """Parte explícita do corretor (sem o termo Δt b_{-1} H^{n+1})"""
    return _weighted_history(c, hist, dt, c.a_array, c.b_array)


def _linear_correct(prob: SplitProblem, t_new: float, u_hat: np.ndarray, rhs: np.ndarray,
                    gamma: float, cfg: IntegratorConfig) -> np.ndarray:
    linear = prob.linear
    rhs = rhs + gamma * linear.eval_K(t_new, u_hat)
    if linear.shifted_solve is not None:
        return linear.shifted_solve(t_new, u_hat, gamma, rhs)

    dtype = np.result_type(prob.dtype, u_hat.dtype, rhs.dtype)
    operator = make_operator(prob.dim, lambda w: linear.apply_A(t_new, u_hat, w), dtype=dtype)
    diagonal = linear.diagonal_A(t_new, u_hat) if linear.diagonal_A is not None else None
    return solve_shifted(operator, gamma, rhs, tol=cfg.linear_tol, maxiter=cfg.linear_maxiter,
                         diagonal=diagonal, restart=cfg.restart)


def fixed_point_correct(c: SchemeCoefficients, prob: SplitProblem, hist: History, u_hat: np.ndarray,
                        cfg: IntegratorConfig, t_new: Optional[float] = None,
                        rhs: Optional[np.ndarray] = None) -> np.ndarray:
    """
    Corretor por iteração de ponto fixo

    v^{k+1} = rhs + Δt b_{-1} H(t^{n+1}, û, v^k) a partir de v^0 = û, até a
    atualização relativa ficar abaixo de linear_tol. Converge quando
    Δt b_{-1}·Lip_v(H) < 1.
    """
    dt = cfg.dt
    t_new = hist.newest.t + dt if t_new is None else t_new
    rhs = corrector_rhs(c, hist, dt) if rhs is None else rhs
    gamma = dt * c.b_m1_float

    v = u_hat
    update = float('inf')
    for iteration in range(1, cfg.linear_maxiter + 1):
        v_next = rhs + gamma * prob.eval_H(t_new, u_hat, v)
        if not np.all(np.isfinite(v_next)):
            raise ConvergenceError("Ponto fixo divergiu (valores não finitos)", float('inf'), iteration)
        scale = max(float(np.linalg.norm(v_next)), np.finfo(float).tiny)
        update = float(np.linalg.norm(v_next - v)) / scale
        v = v_next
        if update < cfg.linear_tol:
            logger.debug(f"🔁 Ponto fixo convergiu em {iteration} iterações")
            return v

    logger.error(f"❌ Ponto fixo sem convergência: atualização relativa {update:.3e}")
    raise ConvergenceError("Ponto fixo não convergiu", update, cfg.linear_maxiter)


def step(c: SchemeCoefficients, prob: SplitProblem, hist: History, cfg: IntegratorConfig,
         t_new: Optional[float] = None) -> np.ndarray:
    """
    Avança um passo e roda o histórico

    Args:
        c: Esquema semi-implícito
        prob: Problema particionado
        hist: Histórico com pelo menos s níveis uniformes (mais novo em 0)
        cfg: Configuração (dt, tolerâncias do solve)
        t_new: Tempo do novo nível; padrão t^n + Δt

    Returns:
        u^{n+1} (também inserido em hist com H(t^{n+1}, u^{n+1}, u^{n+1}))
    """
    dt = cfg.dt
    hist.check_uniform(dt, c.s)
    t_new = hist.newest.t + dt if t_new is None else t_new

    u_hat = predict(c, hist, dt)
    rhs = corrector_rhs(c, hist, dt)
    gamma = dt * c.b_m1_float
    if prob.linear is not None:
        u_new = _linear_correct(prob, t_new, u_hat, rhs, gamma, cfg)
    else:
        u_new = fixed_point_correct(c, prob, hist, u_hat, cfg, t_new=t_new, rhs=rhs)

    hist.push(Slot(t_new, u_new, prob.eval_H(t_new, u_new, u_new)))
    return u_new
