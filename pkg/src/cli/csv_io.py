"""
Leitura e Escrita de CSV
Floats com 17 dígitos significativos para que reler o arquivo reproduza a tabela
"""

import csv
import os
from dataclasses import astuple, dataclass, fields
from typing import List, Optional, Tuple

from src.stability import StabilityGrid

FLOAT_FORMAT = '.17g'
STABILITY_HEADER = ['z_R', 'z_I', 'max_root_modulus', 'stable']
CONVERGENCE_HEADER = ['scheme', 'k', 'Nx', 'dt', 'l1_full', 'l1_w2', 'order_full', 'order_w2']

StabilityRow = Tuple[float, float, float, bool]


@dataclass
class ConvergenceRow:
    """Linha do estudo de convergência (None = não disponível ou falha)"""

    scheme: str
    k: int
    Nx: int
    dt: float
    l1_full: Optional[float] = None
    l1_w2: Optional[float] = None
    order_full: Optional[float] = None
    order_w2: Optional[float] = None


def format_float(value: Optional[float]) -> str:
    return '' if value is None else format(float(value), FLOAT_FORMAT)


def parse_float(text: str) -> Optional[float]:
    return None if text == '' else float(text)


def _ensure_parent(path: str):
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)


def write_stability_csv(path: str, grid: StabilityGrid) -> int:
    """Grava o mapa em ordem row-major; devolve o número de linhas"""
    _ensure_parent(path)
    count = 0
    with open(path, 'w', newline='', encoding='utf-8') as handle:
        writer = csv.writer(handle)
        writer.writerow(STABILITY_HEADER)
        for point in grid.rows():
            writer.writerow([format_float(point.z_R), format_float(point.z_I_mag),
                             format_float(point.max_root_modulus), int(point.stable)])
            count += 1
    return count


def read_stability_csv(path: str) -> List[StabilityRow]:
    with open(path, newline='', encoding='utf-8') as handle:
        reader = csv.DictReader(handle)
        return [(float(row['z_R']), float(row['z_I']), float(row['max_root_modulus']), row['stable'] == '1')
                for row in reader]


def write_convergence_csv(path: str, rows: List[ConvergenceRow]) -> int:
    _ensure_parent(path)
    with open(path, 'w', newline='', encoding='utf-8') as handle:
        writer = csv.writer(handle)
        writer.writerow(CONVERGENCE_HEADER)
        for row in rows:
            scheme, k, nx, *numbers = astuple(row)
            writer.writerow([scheme, k, nx] + [format_float(x) for x in numbers])
    return len(rows)


def read_convergence_csv(path: str) -> List[ConvergenceRow]:
    names = [f.name for f in fields(ConvergenceRow)]
    rows = []
    with open(path, newline='', encoding='utf-8') as handle:
        for record in csv.DictReader(handle):
            rows.append(ConvergenceRow(
                scheme=record['scheme'],
                k=int(record['k']),
                Nx=int(record['Nx']),
                **{name: parse_float(record[name]) for name in names[3:]}
            ))
    return rows
