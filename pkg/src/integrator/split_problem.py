"""
Problemas Particionados
H(t, u, v) com dependência rígida apenas no último argumento e estrutura
linear opcional H = K(t, u) + A(t, u)·v
"""

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np
from scipy.sparse.linalg import LinearOperator

Vector = np.ndarray
EvalH = Callable[[float, Vector, Vector], Vector]
EvalK = Callable[[float, Vector], Vector]
ApplyA = Callable[[float, Vector, Vector], Vector]
DiagonalA = Callable[[float, Vector], Vector]
# (t, u, γ, rhs) -> x com (I - γA(t, u))x = rhs
ShiftedSolve = Callable[[float, Vector, float, Vector], Vector]


@dataclass
class LinearStructure:
    """H(t, u, v) = K(t, u) + A(t, u)·v"""

    eval_K: EvalK
    apply_A: ApplyA
    diagonal_A: Optional[DiagonalA] = None
    shifted_solve: Optional[ShiftedSolve] = None


@dataclass
class SplitProblem:
    """Sistema u' = H(t, u, u) com argumento não rígido u e rígido v"""

    dim: int
    eval_H: EvalH
    linear: Optional[LinearStructure] = None
    dtype: type = float
    name: str = ''

    @property
    def has_linear_structure(self) -> bool:
        return self.linear is not None

    def linear_structure_mismatch(self, t: float = 0.0, probes: int = 3, seed: int = 0) -> float:
        """
        Maior discrepância relativa |H - (K + A·v)| / (1 + |H|) em sondas aleatórias

        Returns:
            0.0 quando não há estrutura linear declarada
        """
        if self.linear is None:
            return 0.0
        rng = np.random.default_rng(seed)
        worst = 0.0
        for _ in range(probes):
            u = rng.uniform(0.5, 1.5, self.dim).astype(self.dtype)
            v = rng.uniform(-1.0, 1.0, self.dim).astype(self.dtype)
            h = self.eval_H(t, u, v)
            split = self.linear.eval_K(t, u) + self.linear.apply_A(t, u, v)
            worst = max(worst, float(np.max(np.abs(h - split) / (1.0 + np.abs(h)))))
        return worst

    @classmethod
    def from_additive(cls, dim: int, f: EvalK, g: EvalK, eps: float,
                      g_matrix: Optional[Union[np.ndarray, LinearOperator, Callable]] = None,
                      dtype: type = float, name: str = 'additive') -> 'SplitProblem':
        """
        Sistema aditivo u' = f(t, u) + g(t, u)/ε como H(t, u, v) = f(t, u) + g(t, v)/ε

        Args:
            g_matrix: Matriz (ou LinearOperator, ou t -> matriz) com g(t, v) = G·v;
                quando fornecida declara K = f e A = G/ε
        """
        def eval_H(t, u, v):
            return f(t, u) + g(t, v) / eps

        linear = None
        if g_matrix is not None:
            def _matrix(t):
                return g_matrix(t) if callable(g_matrix) and not isinstance(g_matrix, LinearOperator) else g_matrix

            def apply_A(t, u, w):
                return (_matrix(t) @ w) / eps

            linear = LinearStructure(eval_K=f, apply_A=apply_A)
        return cls(dim=dim, eval_H=eval_H, linear=linear, dtype=dtype, name=name)


class InstrumentedProblem(SplitProblem):
    """
    Envelope que conta avaliações de H, K, aplicações de A e solves dedicados

    counts['eval_H'] + counts['eval_K'] é o número de avaliações da função
    do lado direito (o estágio implícito linear conta como uma avaliação).
    """

    def __init__(self, inner: SplitProblem):
        self.inner = inner
        self.counts: Counter = Counter()
        linear = None
        if inner.linear is not None:
            linear = LinearStructure(
                eval_K=self._counted('eval_K', inner.linear.eval_K),
                apply_A=self._counted('apply_A', inner.linear.apply_A),
                diagonal_A=inner.linear.diagonal_A,
                shifted_solve=(self._counted('shifted_solve', inner.linear.shifted_solve)
                               if inner.linear.shifted_solve is not None else None)
            )
        super().__init__(dim=inner.dim, eval_H=self._counted('eval_H', inner.eval_H),
                         linear=linear, dtype=inner.dtype, name=inner.name)

    def _counted(self, key: str, fn: Callable) -> Callable:
        def wrapper(*args):
            self.counts[key] += 1
            return fn(*args)
        return wrapper

    @property
    def evaluations(self) -> int:
        return self.counts['eval_H'] + self.counts['eval_K']

    def reset(self):
        self.counts.clear()
