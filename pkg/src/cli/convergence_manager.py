"""
Convergence Manager - semilm
Estudos de convergência: integra cada (esquema, k) contra a solução exata e
calcula as ordens observadas log2(e_k / e_{k+1})
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np
from loguru import logger

from src.config import uniform_dt
from src.exceptions import ConfigError, SemiLMError
from src.integrator import IntegratorConfig, StartupMode, integrate
from src.problems import build_problem, l1_component_error, l1_error
from src.schemes import builtin
from .csv_io import ConvergenceRow

CONVERGENCE_PROBLEMS = ('test1', 'test3', 'scalar')

# T padrão por problema
DEFAULT_FINAL_TIME = {'test1': 2.0, 'test3': 1.0, 'scalar': 1.0}


@dataclass(frozen=True)
class ConvergenceTask:
    """Um run do estudo (picklável para o pool de processos)"""

    problem: str
    scheme: str
    k: int
    lam: float
    t_final: float
    linear_tol: float = 1e-10
    linear_maxiter: int = 2000


def task_dt(task: ConvergenceTask) -> float:
    """
    Δt do run: malhas 2^k usam Δt = λΔx; o escalar usa Δt = λ·2^{-k}
    (ambos ajustados para cair exatamente em T)
    """
    if task.problem == 'scalar':
        spacing = 2.0 ** (-task.k)
    else:
        domain = 2.0 * math.pi if task.problem == 'test1' else 20.0
        spacing = domain / 2 ** task.k
    return uniform_dt(task.t_final, task.lam * spacing)


def run_case(task: ConvergenceTask) -> ConvergenceRow:
    """Integra um caso e devolve a linha com erros (ordens ficam para depois)"""
    nx = 0 if task.problem == 'scalar' else 2 ** task.k
    dt = task_dt(task)
    row = ConvergenceRow(scheme=task.scheme, k=task.k, Nx=nx, dt=dt)
    try:
        scheme = builtin(task.scheme)
        bench = build_problem(task.problem, n=max(nx, 8))
        cfg = IntegratorConfig(dt=dt, startup=StartupMode.EXACT,
                               linear_tol=task.linear_tol, linear_maxiter=task.linear_maxiter)
        result = integrate(scheme, bench.problem, 0.0, task.t_final, cfg, exact=bench.exact)
        reference = bench.exact(task.t_final)
        if bench.grid is None:
            row.l1_full = float(np.sum(np.abs(result.u - reference)))
        else:
            row.l1_full = l1_error(result.u, reference, bench.grid)
            if bench.ncomp == 2:
                row.l1_w2 = l1_component_error(result.u, reference, bench.grid, 2, 1)
    except SemiLMError as e:
        logger.warning(f"⚠️ {task.scheme} k={task.k}: falha na integração ({e}); linha registrada sem erro")
    return row


def observed_order(coarse: Optional[float], fine: Optional[float]) -> Optional[float]:
    if coarse is None or fine is None or coarse <= 0.0 or fine <= 0.0:
        return None
    return math.log2(coarse / fine)


class ConvergenceManager:
    """Gerenciador dos estudos de convergência"""

    def __init__(self, workers: int = 1):
        self.workers = max(1, int(workers))
        logger.info(f"📈 Convergence Manager inicializado ({self.workers} workers)")

    def build_tasks(self, problem: str, schemes: Sequence[str], k_values: Sequence[int], lam: float,
                    t_final: Optional[float] = None, linear_tol: float = 1e-10,
                    linear_maxiter: int = 2000) -> List[ConvergenceTask]:
        problem = problem.strip().lower()
        if problem not in CONVERGENCE_PROBLEMS:
            raise ConfigError(f"Estudo de convergência requer solução exata: {', '.join(CONVERGENCE_PROBLEMS)}")
        t_final = DEFAULT_FINAL_TIME[problem] if t_final is None else t_final
        names = [builtin(name).name for name in schemes]
        return [ConvergenceTask(problem, name, k, lam, t_final, linear_tol, linear_maxiter)
                for name in names for k in k_values]

    def run_study(self, problem: str, schemes: Sequence[str], k_values: Sequence[int], lam: float = 0.5,
                  t_final: Optional[float] = None, linear_tol: float = 1e-10,
                  linear_maxiter: int = 2000) -> List[ConvergenceRow]:
        """
        Tabela esquema × k na ordem (esquema, k crescente)

        Falhas de integração viram linhas sem erro e o estudo continua.
        """
        tasks = self.build_tasks(problem, schemes, k_values, lam, t_final, linear_tol, linear_maxiter)
        logger.info(f"🚀 Estudo {problem}: {len(tasks)} runs")

        if self.workers > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                rows = list(executor.map(run_case, tasks))
        else:
            rows = [run_case(task) for task in tasks]

        by_scheme: Dict[str, List[ConvergenceRow]] = {}
        for row in rows:
            by_scheme.setdefault(row.scheme, []).append(row)
        for scheme_rows in by_scheme.values():
            for coarse, fine in zip(scheme_rows, scheme_rows[1:]):
                fine.order_full = observed_order(coarse.l1_full, fine.l1_full)
                fine.order_w2 = observed_order(coarse.l1_w2, fine.l1_w2)

        logger.info(f"✅ Estudo {problem} concluído")
        return rows

    @staticmethod
    def format_table(rows: Sequence[ConvergenceRow]) -> str:
        """Tabela alinhada para o terminal"""
        def _f(x, fmt):
            return '-' if x is None else format(x, fmt)

        lines = [f"{'scheme':<10} {'k':>3} {'Nx':>5} {'dt':>12} {'l1_full':>12} {'order':>7} {'l1_w2':>12} {'order_w2':>8}"]
        for r in rows:
            lines.append(f"{r.scheme:<10} {r.k:>3} {r.Nx:>5} {r.dt:>12.5e} {_f(r.l1_full, '12.4e'):>12} "
                         f"{_f(r.order_full, '7.3f'):>7} {_f(r.l1_w2, '12.4e'):>12} {_f(r.order_w2, '8.3f'):>8}")
        return '\n'.join(lines)
