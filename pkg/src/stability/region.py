"""
Regiões de Estabilidade
Varredura do plano (z_R, z_I) pelo critério das raízes do polinômio
característico
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from src.exceptions import ConfigError, RootFindingError
from src.linalg import ComplexPolynomial, poly_roots
from src.schemes import SchemeCoefficients
from .characteristic import char_poly_coefficients


class StabilityTolerances(BaseModel):
    """Tolerâncias do critério das raízes"""

    model_config = ConfigDict(frozen=True)

    root_tol: float = Field(default=1e-9, ge=0.0)
    mult_tol: float = Field(default=1e-8, ge=0.0)
    sep_tol: float = Field(default=1e-6, ge=0.0)
    poly_tol: float = Field(default=1e-12, gt=0.0)
    maxiter: int = Field(default=500, ge=1)


@dataclass(frozen=True)
class StabilityPoint:
    """Veredito em um nó; failed indica falha do Aberth (nó marcado instável)"""

    z_R: float
    z_I_mag: float
    max_root_modulus: float
    stable: bool
    failed: bool = False


@dataclass
class StabilityGrid:
    """Matriz de pontos indexada [i_R][i_I]"""

    scheme: str
    z_R: np.ndarray
    z_I_mag: np.ndarray
    points: List[List[StabilityPoint]]

    def rows(self) -> Iterator[StabilityPoint]:
        """Pontos em ordem row-major (z_R externo, z_I interno)"""
        for row in self.points:
            yield from row

    @property
    def max_modulus(self) -> np.ndarray:
        return np.array([[p.max_root_modulus for p in row] for row in self.points])

    @property
    def stable_mask(self) -> np.ndarray:
        return np.array([[p.stable for p in row] for row in self.points], dtype=bool)

    @property
    def failures(self) -> int:
        return sum(p.failed for p in self.rows())


def classify_roots(roots: Sequence[complex], tols: StabilityTolerances) -> bool:
    """
    Estável quando todas as raízes têm módulo ≤ 1 + root_tol e as de módulo
    próximo de 1 são simples (vizinha mais próxima além de sep_tol)
    """
    roots = np.asarray(roots, dtype=complex)
    if roots.size == 0:
        return True
    moduli = np.abs(roots)
    if moduli.max() > 1.0 + tols.root_tol:
        return False
    for i in np.flatnonzero(moduli >= 1.0 - tols.mult_tol):
        others = np.delete(roots, i)
        if others.size and np.min(np.abs(others - roots[i])) <= tols.sep_tol:
            return False
    return True


def _point(c: SchemeCoefficients, z_R: float, z_I_mag: float, coefficients: np.ndarray,
           tols: StabilityTolerances) -> StabilityPoint:
    try:
        result = poly_roots(ComplexPolynomial(coefficients), tol=tols.poly_tol, maxiter=tols.maxiter)
    except RootFindingError as e:
        logger.warning(f"⚠️ {c.name}: raízes não convergiram em ({z_R:.6g}, {z_I_mag:.6g}): {e}")
        return StabilityPoint(z_R, z_I_mag, float('nan'), False, failed=True)
    modulus = float(np.max(np.abs(result.roots))) if len(result) else 0.0
    return StabilityPoint(z_R, z_I_mag, modulus, classify_roots(result.roots, tols))


def evaluate_point(c: SchemeCoefficients, z_R: float, z_I_mag: float,
                   tols: Optional[StabilityTolerances] = None) -> StabilityPoint:
    """Critério das raízes em um único nó"""
    tols = tols or StabilityTolerances()
    return _point(c, float(z_R), float(z_I_mag), char_poly_coefficients(c, z_R, z_I_mag), tols)


def _samples(lo: float, hi: float, n: int, label: str) -> np.ndarray:
    if n < 2:
        raise ConfigError(f"{label}: são necessárias ao menos 2 amostras (recebido {n})")
    if not hi > lo:
        raise ConfigError(f"{label}: intervalo [{lo}, {hi}] não é crescente")
    return np.linspace(lo, hi, n)


def scan_region(c: SchemeCoefficients, zR_min: float, zR_max: float, n_R: int, zI_max: float, n_I: int,
                tols: Optional[StabilityTolerances] = None, workers: int = 1) -> StabilityGrid:
    """
    Mapa de estabilidade em z_R ∈ [zR_min, zR_max], z_I_mag ∈ [0, zI_max]

    Args:
        workers: Threads para avaliar linhas em paralelo (saída na mesma ordem)
    """
    tols = tols or StabilityTolerances()
    z_R = _samples(zR_min, zR_max, n_R, 'z_R')
    z_I = _samples(0.0, zI_max, n_I, 'z_I')
    coefficients = char_poly_coefficients(c, z_R[:, None], z_I[None, :])

    def _row(i: int) -> List[StabilityPoint]:
        return [_point(c, float(z_R[i]), float(z_I[k]), coefficients[i, k], tols) for k in range(n_I)]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            points = list(executor.map(_row, range(n_R)))
    else:
        points = [_row(i) for i in range(n_R)]

    grid = StabilityGrid(scheme=c.name, z_R=z_R, z_I_mag=z_I, points=points)
    logger.info(f"🗺️ {c.name}: {n_R}x{n_I} nós, {int(grid.stable_mask.sum())} estáveis, {grid.failures} falhas")
    return grid


def max_stable_zi(c: SchemeCoefficients, z_R: float, zi_max: float, n: int = 401,
                  tols: Optional[StabilityTolerances] = None) -> Optional[float]:
    """
    Maior z_I_mag amostrado em [0, zi_max] que é estável com z_R fixo

    Returns:
        None quando nenhuma amostra é estável
    """
    tols = tols or StabilityTolerances()
    samples = _samples(0.0, zi_max, n, 'z_I')
    coefficients = char_poly_coefficients(c, np.full_like(samples, z_R), samples)
    stable = [s for s, coeffs in zip(samples, coefficients) if _point(c, z_R, s, coeffs, tols).stable]
    return float(max(stable)) if stable else None
