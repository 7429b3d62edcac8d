"""
Stencils de Diferenças Centradas
Pesos exatos de D_xx (ordens 2, 4, 6) e D_x (ordem 4) com periodicidade via np.roll
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple

import numpy as np
from scipy import sparse

from src.exceptions import GridError

Weights = Tuple[Fraction, ...]


def _weights(numerators, denominator) -> Weights:
    return tuple(Fraction(n, denominator) for n in numerators)


# deslocamentos -r..r
SECOND_DERIVATIVE: Dict[int, Weights] = {
    2: _weights((1, -2, 1), 1),
    4: _weights((-1, 16, -30, 16, -1), 12),
    6: _weights((2, -27, 270, -490, 270, -27, 2), 180),
}

FIRST_DERIVATIVE: Dict[int, Weights] = {
    4: _weights((1, -8, 0, 8, -1), 12),
}

_AXES = {'x': -1, 'y': -2}


@dataclass(frozen=True)
class StencilSet:
    """Tabelas de pesos por tipo ('dxx' ou 'dx') e ordem"""

    second: Dict[int, Weights] = field(default_factory=lambda: dict(SECOND_DERIVATIVE))
    first: Dict[int, Weights] = field(default_factory=lambda: dict(FIRST_DERIVATIVE))

    def weights(self, kind: str, order: int) -> Weights:
        table = {'dxx': self.second, 'dx': self.first}.get(kind)
        if table is None or order not in table:
            raise GridError(f"Stencil não suportado: kind={kind!r}, order={order}")
        return table[order]

    def center(self, kind: str, order: int) -> float:
        """Peso do nó central"""
        w = self.weights(kind, order)
        return float(w[len(w) // 2])


STENCILS = StencilSet()


def apply_stencil(field_: np.ndarray, axis: str, kind: str, order: int, spacing: float = 1.0) -> np.ndarray:
    """
    Aplica o stencil periódico ao longo de um eixo

    Args:
        field_: Array (..., ny, nx)
        axis: 'x' (último eixo) ou 'y' (penúltimo)
        kind: 'dxx' ou 'dx'
        order: Ordem formal do stencil
        spacing: Δx ou Δy
    """
    if axis not in _AXES:
        raise GridError(f"Eixo desconhecido: {axis!r}")
    weights = STENCILS.weights(kind, order)
    ax = _AXES[axis]
    radius = len(weights) // 2
    if field_.ndim < 2 or field_.shape[ax] < len(weights):
        raise GridError(f"Eixo {axis} com {field_.shape[ax] if field_.ndim >= 2 else 0} nós, stencil precisa de {len(weights)}")

    out = np.zeros_like(field_, dtype=np.result_type(field_, float))
    for offset, w in zip(range(-radius, radius + 1), weights):
        if w != 0:
            # roll por -offset traz u_{i+offset} para a posição i
            out += float(w) * np.roll(field_, -offset, axis=ax)
    power = 2 if kind == 'dxx' else 1
    return out / spacing ** power


def laplacian(field_: np.ndarray, dx: float, dy: float, order: int) -> np.ndarray:
    """D_xx + D_yy com pesos unidimensionais iguais"""
    return (apply_stencil(field_, 'x', 'dxx', order, dx)
            + apply_stencil(field_, 'y', 'dxx', order, dy))


def laplacian_diagonal(dx: float, dy: float, order: int) -> float:
    """Coeficiente diagonal do Laplaciano discreto"""
    c = STENCILS.center('dxx', order)
    return c / dx ** 2 + c / dy ** 2


def gradient(field_: np.ndarray, dx: float, dy: float, order: int = 4) -> Tuple[np.ndarray, np.ndarray]:
    """(D_x u, D_y u)"""
    return apply_stencil(field_, 'x', 'dx', order, dx), apply_stencil(field_, 'y', 'dx', order, dy)


def stencil_matrix(n: int, kind: str, order: int, spacing: float = 1.0) -> sparse.csr_matrix:
    """Matriz circulante n × n do stencil periódico unidimensional"""
    weights = STENCILS.weights(kind, order)
    if n < len(weights):
        raise GridError(f"{n} nós, stencil precisa de {len(weights)}")
    radius = len(weights) // 2
    rows, cols, data = [], [], []
    index = np.arange(n)
    for offset, w in zip(range(-radius, radius + 1), weights):
        if w != 0:
            rows.append(index)
            cols.append((index + offset) % n)
            data.append(np.full(n, float(w)))
    power = 2 if kind == 'dxx' else 1
    matrix = sparse.csr_matrix((np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))), shape=(n, n))
    return matrix / spacing ** power


def grid_operators(nx: int, ny: int, dx: float, dy: float,
                   order: int = 4) -> Tuple[sparse.csr_matrix, sparse.csr_matrix, sparse.csr_matrix]:
    """
    (D_x, D_y, Δ) montados para vetores planos com índice i variando mais rápido

    Args:
        order: Ordem dos stencils de D_x e do Laplaciano
    """
    ix, iy = sparse.identity(nx, format='csr'), sparse.identity(ny, format='csr')
    Dx = sparse.kron(iy, stencil_matrix(nx, 'dx', 4, dx), format='csr')
    Dy = sparse.kron(stencil_matrix(ny, 'dx', 4, dy), ix, format='csr')
    lap = (sparse.kron(iy, stencil_matrix(nx, 'dxx', order, dx))
           + sparse.kron(stencil_matrix(ny, 'dxx', order, dy), ix)).tocsr()
    return Dx, Dy, lap
