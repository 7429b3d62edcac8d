"""
Histórico de Passos
Sequência única (t, u, h) com o nível mais recente no índice 0
"""

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, List

import numpy as np

from src.exceptions import IntegrationError


@dataclass(frozen=True)
class Slot:
    """Nível de tempo com a avaliação H(t, u, u) em cache"""

    t: float
    u: np.ndarray
    h: np.ndarray


class History:
    """Janela deslizante com no máximo `capacity` níveis"""

    def __init__(self, capacity: int, slots: Iterable[Slot] = ()):
        if capacity < 1:
            raise IntegrationError(f"Capacidade do histórico inválida: {capacity}")
        self._slots: deque = deque(maxlen=capacity)
        for slot in slots:
            self.push(slot)

    @property
    def capacity(self) -> int:
        return self._slots.maxlen

    def push(self, slot: Slot):
        """Insere o nível mais novo (o mais antigo sai quando cheio)"""
        if self._slots and not slot.t > self._slots[0].t:
            raise IntegrationError(f"Tempo não crescente no histórico: {slot.t} após {self._slots[0].t}")
        self._slots.appendleft(slot)

    def __len__(self) -> int:
        return len(self._slots)

    def __getitem__(self, j: int) -> Slot:
        return self._slots[j]

    def __iter__(self) -> Iterator[Slot]:
        return iter(self._slots)

    @property
    def newest(self) -> Slot:
        return self._slots[0]

    @property
    def times(self) -> List[float]:
        """Tempos do mais novo para o mais antigo"""
        return [slot.t for slot in self._slots]

    def chronological(self) -> List[Slot]:
        return list(reversed(self._slots))

    def check_uniform(self, dt: float, depth: int, rel_tol: float = 1e-9):
        """Os `depth` níveis mais novos devem estar espaçados de dt"""
        if len(self) < depth:
            raise IntegrationError(f"Histórico com {len(self)} níveis, esquema precisa de {depth}")
        for j in range(depth - 1):
            gap = self._slots[j].t - self._slots[j + 1].t
            if abs(gap - dt) > rel_tol * dt:
                raise IntegrationError(f"Espaçamento {gap} no histórico difere de Δt={dt}")
