"""
Exportação de Quadros
Um CSV por quadro (x, y, w1[, w2]) e um manifest.csv com os tempos
"""

import csv
import os
from typing import List, Tuple

import numpy as np
from loguru import logger

from .grid import PeriodicGrid2D

FLOAT_FORMAT = '.17g'
MANIFEST_NAME = 'manifest.csv'


def _fmt(value: float) -> str:
    return format(float(value), FLOAT_FORMAT)


def export_frame(directory: str, index: int, t: float, u: np.ndarray, grid: PeriodicGrid2D, ncomp: int) -> str:
    """
    Grava o quadro `index` e devolve o caminho do arquivo

    Linhas em ordem j externo, i interno (i mais rápido).
    """
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, f"frame_{index:04d}.csv")
    components = np.real_if_close(grid.unpack(u, ncomp))
    X, Y = grid.mesh()
    with open(path, 'w', newline='', encoding='utf-8') as handle:
        writer = csv.writer(handle)
        writer.writerow(['x', 'y'] + [f"w{k + 1}" for k in range(ncomp)])
        for j in range(grid.ny):
            for i in range(grid.nx):
                writer.writerow([_fmt(X[j, i]), _fmt(Y[j, i])] + [_fmt(components[k, j, i]) for k in range(ncomp)])
    logger.debug(f"🖼️ Quadro {index} (t={t:.6g}) gravado em {path}")
    return path


def write_manifest(directory: str, entries: List[Tuple[int, float, str]]) -> str:
    """manifest.csv com colunas frame,t,file"""
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, MANIFEST_NAME)
    with open(path, 'w', newline='', encoding='utf-8') as handle:
        writer = csv.writer(handle)
        writer.writerow(['frame', 't', 'file'])
        for index, t, filename in entries:
            writer.writerow([index, _fmt(t), os.path.basename(filename)])
    return path


def read_manifest(directory: str) -> List[Tuple[int, float, str]]:
    with open(os.path.join(directory, MANIFEST_NAME), newline='', encoding='utf-8') as handle:
        return [(int(row['frame']), float(row['t']), row['file']) for row in csv.DictReader(handle)]
