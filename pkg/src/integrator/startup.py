"""
Arranque do Histórico
Gera os s níveis iniciais pela solução exata ou pela cadeia de esquemas com
menos passos (FE-BE1 -> FE-BDF2 -> AB-BDF3 -> ...) em sub-passos Δt/M
"""

from typing import Callable, Optional

import numpy as np
from loguru import logger

from src.exceptions import StartupError
from src.schemes import STARTUP_CHAIN, SchemeCoefficients, builtin
from .config import IntegratorConfig, StartupMode
from .history import History, Slot
from .semi_implicit import step
from .split_problem import SplitProblem


def _exact_slots(prob: SplitProblem, hist: History, s: int, dt: float, t0: float,
                 exact: Callable[[float], np.ndarray]):
    for j in range(1, s):
        t = t0 + j * dt
        u = np.asarray(exact(t))
        if u.shape != hist.newest.u.shape:
            raise StartupError(f"Solução exata com forma {u.shape}, esperado {hist.newest.u.shape}")
        hist.push(Slot(t, u, prob.eval_H(t, u, u)))


def _cascade_slots(c: SchemeCoefficients, prob: SplitProblem, hist: History, cfg: IntegratorConfig, t0: float):
    substeps = cfg.substeps_for(c.p)
    h = cfg.dt / substeps
    fine_cfg = cfg.model_copy(update={'dt': h})
    chain = [builtin(name) for name in STARTUP_CHAIN]
    fine = History(len(chain), [hist.newest])

    for n in range(1, (c.s - 1) * substeps + 1):
        scheme = chain[len(fine) - 1]
        u = step(scheme, prob, fine, fine_cfg, t_new=t0 + n * h)
        if not np.all(np.isfinite(u)):
            raise StartupError(f"Estado não finito no arranque em cascata (sub-passo {n}, {scheme.name})")
        if n % substeps == 0:
            newest = fine.newest
            hist.push(Slot(t0 + (n // substeps) * cfg.dt, newest.u, newest.h))


def startup(c: SchemeCoefficients, prob: SplitProblem, u0: np.ndarray, cfg: IntegratorConfig,
            exact: Optional[Callable[[float], np.ndarray]] = None, t0: float = 0.0) -> History:
    """
    Monta o histórico inicial com s níveis em t0, t0+Δt, ..., t0+(s-1)Δt

    Args:
        c: Esquema que vai usar o histórico
        prob: Problema particionado
        u0: Estado em t0
        cfg: Configuração (modo de arranque, sub-passos)
        exact: Solução exata t -> estado (obrigatória no modo EXACT)
        t0: Tempo inicial
    """
    u0 = np.asarray(u0)
    if u0.shape != (prob.dim,):
        raise StartupError(f"Estado inicial com forma {u0.shape}, esperado ({prob.dim},)")

    hist = History(c.s)
    hist.push(Slot(t0, u0, prob.eval_H(t0, u0, u0)))
    if c.s == 1:
        return hist

    if cfg.startup == StartupMode.EXACT:
        if exact is None:
            raise StartupError("Arranque EXACT requer a solução exata")
        _exact_slots(prob, hist, c.s, cfg.dt, t0, exact)
    else:
        _cascade_slots(c, prob, hist, cfg, t0)

    logger.debug(f"🏁 Arranque {cfg.startup.value} de {c.name}: {len(hist)} níveis")
    return hist
