"""
Malha Periódica 2-D
Nós uniformes x_i = x0 + iΔx, y_j = y0 + jΔy; campos com componentes
externas e índice i variando mais rápido
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.exceptions import GridError

MIN_NODES = 8


@dataclass(frozen=True)
class PeriodicGrid2D:
    """Malha uniforme periódica [x0, x0+Lx) × [y0, y0+Ly)"""

    nx: int
    ny: int
    Lx: float
    Ly: float
    x0: float = 0.0
    y0: float = 0.0

    def __post_init__(self):
        if self.nx < MIN_NODES or self.ny < MIN_NODES:
            raise GridError(f"Malha {self.nx}x{self.ny} menor que {MIN_NODES} nós por direção")
        if not (self.Lx > 0 and self.Ly > 0):
            raise GridError(f"Comprimentos inválidos: Lx={self.Lx}, Ly={self.Ly}")

    @property
    def dx(self) -> float:
        return self.Lx / self.nx

    @property
    def dy(self) -> float:
        return self.Ly / self.ny

    @property
    def size(self) -> int:
        return self.nx * self.ny

    @property
    def cell_area(self) -> float:
        return self.dx * self.dy

    @property
    def x(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(self.nx)

    @property
    def y(self) -> np.ndarray:
        return self.y0 + self.dy * np.arange(self.ny)

    def mesh(self) -> Tuple[np.ndarray, np.ndarray]:
        """(X, Y) de forma (ny, nx)"""
        return np.meshgrid(self.x, self.y, indexing='xy')

    def is_square(self, tol: float = 1e-12) -> bool:
        return self.nx == self.ny and abs(self.Lx - self.Ly) <= tol * self.Lx

    def spans(self, lo: float, hi: float, tol: float = 1e-12) -> bool:
        """Domínio é [lo, hi) nas duas direções"""
        scale = max(1.0, abs(lo), abs(hi))
        return (abs(self.x0 - lo) <= tol * scale and abs(self.y0 - lo) <= tol * scale
                and abs(self.x0 + self.Lx - hi) <= tol * scale and abs(self.y0 + self.Ly - hi) <= tol * scale)

    def unpack(self, u: np.ndarray, ncomp: int) -> np.ndarray:
        """Vetor plano -> (ncomp, ny, nx) sem cópia"""
        u = np.asarray(u)
        if u.size != ncomp * self.size:
            raise GridError(f"Vetor de tamanho {u.size} incompatível com {ncomp}x{self.ny}x{self.nx}")
        return u.reshape(ncomp, self.ny, self.nx)

    def pack(self, components: np.ndarray) -> np.ndarray:
        """(ncomp, ny, nx) ou (ny, nx) -> vetor plano contíguo"""
        return np.ascontiguousarray(components).reshape(-1)


@dataclass
class Field:
    """Campo de ncomp componentes sobre a malha"""

    data: np.ndarray
    ncomp: int
    grid: PeriodicGrid2D

    def __post_init__(self):
        self.grid.unpack(self.data, self.ncomp)

    @classmethod
    def from_components(cls, grid: PeriodicGrid2D, *components: np.ndarray) -> 'Field':
        return cls(grid.pack(np.stack(components)), len(components), grid)

    @property
    def components(self) -> np.ndarray:
        return self.grid.unpack(self.data, self.ncomp)

    def component(self, k: int) -> np.ndarray:
        return self.components[k]

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.data)))


def _flat(value) -> np.ndarray:
    return np.asarray(value.data if isinstance(value, Field) else value)


def l1_error(numeric, exact, grid: PeriodicGrid2D) -> float:
    """ΔxΔy Σ_ij Σ_k |ω_k,ij - ω_k(x_i, y_j)|"""
    a, b = _flat(numeric), _flat(exact)
    if a.shape != b.shape:
        raise GridError(f"Formas incompatíveis: {a.shape} vs {b.shape}")
    return float(grid.cell_area * np.sum(np.abs(a - b)))


def l1_component_error(numeric, exact, grid: PeriodicGrid2D, ncomp: int, k: int) -> float:
    """Erro ℓ1 só da componente k"""
    a = grid.unpack(_flat(numeric), ncomp)
    b = grid.unpack(_flat(exact), ncomp)
    return float(grid.cell_area * np.sum(np.abs(a[k] - b[k])))
