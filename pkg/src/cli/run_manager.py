"""
Run Manager - semilm
Executa um run de simulação a partir de um RunConfig, exporta quadros e
resume min/max/ℓ1
"""

import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np
from loguru import logger

from src.config import RunConfig
from src.exceptions import ConfigError
from src.integrator import StartupMode, integrate
from src.problems import BenchmarkProblem, build_problem, export_frame, l1_error, write_manifest
from src.schemes import builtin

FRAME_TOL = 1e-9


@dataclass
class RunSummary:
    """Resumo de um run"""

    scheme: str
    problem: str
    dt: float
    steps: int
    t_final: float
    minima: List[float]
    maxima: List[float]
    l1_exact: Optional[float] = None
    frames: List[Tuple[int, float, str]] = field(default_factory=list)
    manifest: Optional[str] = None

    def format(self) -> str:
        lines = [
            f"scheme      {self.scheme}",
            f"problem     {self.problem}",
            f"dt          {self.dt:.10g}",
            f"steps       {self.steps}",
            f"t_final     {self.t_final:.10g}",
        ]
        for k, (lo, hi) in enumerate(zip(self.minima, self.maxima)):
            lines.append(f"w{k + 1}          min={lo:.6e} max={hi:.6e}")
        if self.l1_exact is not None:
            lines.append(f"l1_exact    {self.l1_exact:.6e}")
        lines.append(f"frames      {len(self.frames)}")
        return '\n'.join(lines)


class RunManager:
    """Gerenciador de runs de simulação"""

    def __init__(self, config: RunConfig):
        self.config = config
        self.bench: BenchmarkProblem = build_problem(config.problem, n=config.n)
        logger.info(f"🧪 Run Manager: {config.scheme} em {config.problem} (n={config.n})")

    @property
    def dx(self) -> float:
        # o escalar não tem malha: Δt = λ
        return self.bench.grid.dx if self.bench.grid is not None else 1.0

    def _frame_indices(self, dt: float) -> Dict[int, float]:
        """
        Índice do passo de cada tempo de quadro pedido

        Raises:
            ConfigError: Tempo fora da grade t0 + nΔt ou dois tempos no mesmo passo
        """
        if self.config.frames and self.bench.grid is None:
            logger.warning(f"⚠️ {self.bench.name} não tem malha: {len(self.config.frames)} quadros ignorados")
            return {}
        wanted: Dict[int, float] = {}
        for t in self.config.frames:
            position = (t - self.config.t0) / dt
            index = int(round(position))
            if abs(position - index) > FRAME_TOL * max(1.0, abs(position)):
                raise ConfigError(f"Quadro em t={t} fora da grade de passos (Δt={dt:.10g})")
            if index in wanted:
                raise ConfigError(f"Quadros em t={wanted[index]} e t={t} caem no mesmo passo {index}")
            wanted[index] = t
        return wanted

    def _prepare_output(self) -> str:
        directory = self.config.output_dir
        try:
            os.makedirs(directory, exist_ok=True)
        except OSError as e:
            raise ConfigError(f"Diretório de saída não gravável: {directory} ({e})") from e
        if not os.access(directory, os.W_OK):
            raise ConfigError(f"Diretório de saída não gravável: {directory}")
        return directory

    def execute(self) -> RunSummary:
        """Integra até t_final; NonFiniteStateError propaga com o último passo válido"""
        cfg = self.config
        dt = cfg.resolve_dt(self.dx)
        scheme = builtin(cfg.scheme)
        icfg = cfg.integrator_config(dt)
        bench = self.bench
        if icfg.startup == StartupMode.EXACT and bench.exact is None:
            logger.warning(f"⚠️ {bench.name} não tem solução exata: arranque em cascata")
            icfg = icfg.model_copy(update={"startup": StartupMode.CASCADE})

        wanted = self._frame_indices(dt)
        frames: List[Tuple[int, float, str]] = []
        directory = self._prepare_output() if wanted else cfg.output_dir

        def observer(index: int, t: float, u: np.ndarray):
            if index in wanted:
                path = export_frame(directory, len(frames), t, u, bench.grid, bench.ncomp)
                frames.append((len(frames), t, path))

        start = bench.exact(cfg.t0) if bench.exact is not None else bench.initial
        result = integrate(scheme, bench.problem, cfg.t0, cfg.t_final, icfg, observer=observer,
                           u0=start, exact=bench.exact)

        if bench.grid is not None:
            components = bench.grid.unpack(result.u, bench.ncomp)
        else:
            components = np.abs(result.u).reshape(1, -1)
        summary = RunSummary(
            scheme=scheme.name,
            problem=bench.name,
            dt=dt,
            steps=result.steps,
            t_final=result.t,
            minima=[float(np.min(np.real(c))) for c in components],
            maxima=[float(np.max(np.real(c))) for c in components],
            frames=frames
        )
        if bench.exact is not None:
            reference = bench.exact(result.t)
            summary.l1_exact = (l1_error(result.u, reference, bench.grid) if bench.grid is not None
                                else float(np.sum(np.abs(result.u - reference))))
        if frames:
            summary.manifest = write_manifest(directory, frames)

        logger.info(f"✅ Run concluído: {result.steps} passos, {len(frames)} quadros")
        return summary
