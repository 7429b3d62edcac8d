"""
Laço de Integração
Passo uniforme de t0 a T com observador por nível de tempo
"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from loguru import logger

from src.exceptions import IntegrationError, NonFiniteStateError, StartupError
from src.schemes import SchemeCoefficients
from .config import IntegratorConfig
from .history import History
from .semi_implicit import step
from .split_problem import SplitProblem
from .startup import startup

# (índice do nível, tempo, estado somente leitura)
Observer = Callable[[int, float, np.ndarray], None]


@dataclass
class IntegrationResult:
    """Estado final de integrate"""

    u: np.ndarray
    t: float
    steps: int
    scheme_steps: int
    history: History


def _read_only(u: np.ndarray) -> np.ndarray:
    view = u.view()
    view.flags.writeable = False
    return view


def step_count(t0: float, T: float, dt: float) -> int:
    """Número inteiro de passos de t0 a T (passo final parcial é rejeitado)"""
    if T < t0:
        raise IntegrationError(f"Tempo final {T} anterior ao inicial {t0}")
    ratio = (T - t0) / dt
    n = int(round(ratio))
    if abs(ratio - n) > 1e-9 * max(1.0, ratio):
        raise IntegrationError(f"(T - t0)/Δt = {ratio} não é inteiro")
    return n


def integrate(c: SchemeCoefficients, prob: SplitProblem, t0: float, T: float, cfg: IntegratorConfig,
              observer: Optional[Observer] = None, u0: Optional[np.ndarray] = None,
              exact: Optional[Callable[[float], np.ndarray]] = None,
              history: Optional[History] = None) -> IntegrationResult:
    """
    Integra de t0 a T com passo uniforme

    O observador recebe também os níveis de arranque (índices 0..s-1).
    Um histórico já montado pode ser passado em `history` para pular o arranque.
    """
    n_total = step_count(t0, T, cfg.dt)
    if history is None:
        if u0 is None:
            if exact is None:
                raise StartupError("integrate precisa de u0 ou da solução exata")
            u0 = exact(t0)
        history = startup(c, prob, np.asarray(u0), cfg, exact=exact, t0=t0)

    initial = history.chronological()
    first_index = int(round((initial[0].t - t0) / cfg.dt))
    for offset, slot in enumerate(initial):
        index = first_index + offset
        if index > n_total:
            break
        if cfg.check_finite and not np.all(np.isfinite(slot.u)):
            raise NonFiniteStateError("Estado não finito no arranque", max(index - 1, 0), slot.t)
        if observer is not None:
            observer(index, slot.t, _read_only(slot.u))

    if n_total < first_index:
        raise IntegrationError(f"Histórico começa depois de T (nível {first_index} > {n_total})")
    last_index = first_index + len(initial) - 1
    if n_total <= last_index:
        slot = initial[n_total - first_index]
        return IntegrationResult(u=slot.u, t=slot.t, steps=n_total, scheme_steps=0, history=history)

    logger.info(f"🚀 {c.name}: {n_total - last_index} passos, Δt={cfg.dt:.6g}, T={T:.6g}")
    u = history.newest.u
    for n in range(last_index, n_total):
        t_new = t0 + (n + 1) * cfg.dt
        u = step(c, prob, history, cfg, t_new=t_new)
        if cfg.check_finite and not np.all(np.isfinite(u)):
            logger.error(f"❌ Estado não finito em t={t_new:.6g} (último nível válido: {n})")
            raise NonFiniteStateError("Estado não finito", n, t_new)
        if observer is not None:
            observer(n + 1, t_new, _read_only(u))

    logger.info(f"✅ {c.name}: integração concluída em t={history.newest.t:.6g}")
    return IntegrationResult(u=u, t=history.newest.t, steps=n_total,
                             scheme_steps=n_total - last_index, history=history)
