"""
Tabelas de Coeficientes
Tipos imutáveis para pares preditor explícito / corretor implícito e
verificação das condições de ordem
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Any, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.exceptions import SchemeError

Number = Union[int, float, str, Fraction]

DEFAULT_ORDER_TOL = 1e-10


def as_fraction(value: Number) -> Fraction:
    """
    Converte um número para Fraction

    Floats passam pela representação decimal mais curta (0.1 -> 1/10),
    o que mantém exatas as entradas digitadas à mão.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        if not np.isfinite(value):
            raise SchemeError(f"Coeficiente não finito: {value}")
        return Fraction(repr(value))
    try:
        return Fraction(value)
    except (TypeError, ValueError) as e:
        raise SchemeError(f"Coeficiente inválido: {value!r}") from e


def _as_fraction_tuple(values: Sequence[Number]) -> Tuple[Fraction, ...]:
    return tuple(as_fraction(v) for v in values)


def _check_length(name: str, values: Sequence[Any], s: int):
    if len(values) != s:
        raise SchemeError(f"{name}: esperado {s} coeficientes, recebido {len(values)}")


def _pad(values: Tuple[Fraction, ...], s: int) -> Tuple[Fraction, ...]:
    return values + (Fraction(0),) * (s - len(values))


@dataclass(frozen=True)
class ExplicitTable:
    """Preditor explícito: u = -Σ ã_j u^{n-j} + Δt Σ b̃_j h^{n-j}"""

    name: str
    s: int
    p: int
    tilde_a: Tuple[Fraction, ...]
    tilde_b: Tuple[Fraction, ...]
    cfl: Optional[Fraction] = None

    def __post_init__(self):
        if self.s < 1:
            raise SchemeError(f"{self.name}: número de passos s={self.s} < 1")
        object.__setattr__(self, 'tilde_a', _as_fraction_tuple(self.tilde_a))
        object.__setattr__(self, 'tilde_b', _as_fraction_tuple(self.tilde_b))
        _check_length(f"{self.name}.tilde_a", self.tilde_a, self.s)
        _check_length(f"{self.name}.tilde_b", self.tilde_b, self.s)
        if self.cfl is not None:
            object.__setattr__(self, 'cfl', as_fraction(self.cfl))

    def padded(self, s: int) -> 'ExplicitTable':
        """Estende com zeros até s passos (ordem inalterada)"""
        if s < self.s:
            raise SchemeError(f"{self.name}: não é possível reduzir {self.s} -> {s} passos")
        return ExplicitTable(self.name, s, self.p, _pad(self.tilde_a, s), _pad(self.tilde_b, s), self.cfl)


@dataclass(frozen=True)
class ImplicitTable:
    """Corretor implícito: u = -Σ a_j u^{n-j} + Δt Σ b_j h^{n-j} + Δt b_{-1} H^{n+1}"""

    name: str
    s: int
    p: int
    a: Tuple[Fraction, ...]
    b_im: Tuple[Fraction, ...]
    b_m1: Fraction

    def __post_init__(self):
        if self.s < 1:
            raise SchemeError(f"{self.name}: número de passos s={self.s} < 1")
        object.__setattr__(self, 'a', _as_fraction_tuple(self.a))
        object.__setattr__(self, 'b_im', _as_fraction_tuple(self.b_im))
        object.__setattr__(self, 'b_m1', as_fraction(self.b_m1))
        _check_length(f"{self.name}.a", self.a, self.s)
        _check_length(f"{self.name}.b_im", self.b_im, self.s)
        if self.b_m1 == 0:
            raise SchemeError(f"{self.name}: b_(-1) deve ser não nulo")

    def padded(self, s: int) -> 'ImplicitTable':
        """Estende com zeros até s passos (ordem inalterada)"""
        if s < self.s:
            raise SchemeError(f"{self.name}: não é possível reduzir {self.s} -> {s} passos")
        return ImplicitTable(self.name, s, self.p, _pad(self.a, s), _pad(self.b_im, s), self.b_m1)


@dataclass(frozen=True)
class SchemeCoefficients:
    """
    Par semi-implícito de s passos

    Convenção de sinais: u^{n+1} = -Σ ã_j u^{n-j} + ..., índice j=0 é o nível
    mais recente. O número de passos é comum às duas tabelas.
    """

    name: str
    s: int
    p: int
    tilde_a: Tuple[Fraction, ...]
    tilde_b: Tuple[Fraction, ...]
    a: Tuple[Fraction, ...]
    b_im: Tuple[Fraction, ...]
    b_m1: Fraction
    predictor: str = ''
    corrector: str = ''
    cfl: Optional[Fraction] = field(default=None, compare=False)

    def __post_init__(self):
        if self.s < 1:
            raise SchemeError(f"{self.name}: número de passos s={self.s} < 1")
        for attr in ('tilde_a', 'tilde_b', 'a', 'b_im'):
            values = _as_fraction_tuple(getattr(self, attr))
            _check_length(f"{self.name}.{attr}", values, self.s)
            object.__setattr__(self, attr, values)
        object.__setattr__(self, 'b_m1', as_fraction(self.b_m1))
        if self.b_m1 == 0:
            raise SchemeError(f"{self.name}: b_(-1) deve ser não nulo")
        if self.cfl is not None:
            object.__setattr__(self, 'cfl', as_fraction(self.cfl))

    @classmethod
    def pair(cls, predictor: ExplicitTable, corrector: ImplicitTable,
             name: Optional[str] = None, p: Optional[int] = None) -> 'SchemeCoefficients':
        """
        Monta um par preditor/corretor

        A tabela mais curta é completada com zeros até s = max dos passos.
        """
        s = max(predictor.s, corrector.s)
        explicit = predictor.padded(s)
        implicit = corrector.padded(s)
        return cls(
            name=name or f"{predictor.name}-{corrector.name}",
            s=s,
            p=corrector.p if p is None else p,
            tilde_a=explicit.tilde_a,
            tilde_b=explicit.tilde_b,
            a=implicit.a,
            b_im=implicit.b_im,
            b_m1=implicit.b_m1,
            predictor=predictor.name,
            corrector=corrector.name,
            cfl=predictor.cfl
        )

    def explicit_part(self) -> ExplicitTable:
        return ExplicitTable(self.predictor or self.name, self.s, max(self.p - 1, 0),
                             self.tilde_a, self.tilde_b, self.cfl)

    def implicit_part(self) -> ImplicitTable:
        return ImplicitTable(self.corrector or self.name, self.s, self.p, self.a, self.b_im, self.b_m1)

    def same_coefficients(self, other: 'SchemeCoefficients') -> bool:
        """Compara apenas os coeficientes (ignora nomes)"""
        return (self.s == other.s and self.tilde_a == other.tilde_a and self.tilde_b == other.tilde_b
                and self.a == other.a and self.b_im == other.b_im and self.b_m1 == other.b_m1)

    # Versões em ponto flutuante usadas pelo integrador e pela análise de estabilidade
    @cached_property
    def tilde_a_array(self) -> np.ndarray:
        return np.array([float(x) for x in self.tilde_a])

    @cached_property
    def tilde_b_array(self) -> np.ndarray:
        return np.array([float(x) for x in self.tilde_b])

    @cached_property
    def a_array(self) -> np.ndarray:
        return np.array([float(x) for x in self.a])

    @cached_property
    def b_array(self) -> np.ndarray:
        return np.array([float(x) for x in self.b_im])

    @property
    def b_m1_float(self) -> float:
        return float(self.b_m1)


@dataclass(frozen=True)
class OrderReport:
    """Resultado de verify_order"""

    max_order_explicit: int
    max_order_implicit: int
    residuals: List[Tuple[int, float, float]]
    tol: float = DEFAULT_ORDER_TOL

    def summary(self) -> str:
        return f"implicit order {self.max_order_implicit}, explicit order {self.max_order_explicit}"


def _explicit_residual(tilde_a: Sequence[Fraction], tilde_b: Sequence[Fraction], q: int) -> Fraction:
    # 0**0 == 1 em Python: o termo j=0 entra nas somas de ordem q-1 = 0
    lhs = Fraction(1, factorial(q)) + sum(Fraction(-j) ** q / factorial(q) * tilde_a[j]
                                          for j in range(len(tilde_a)))
    if q == 0:
        return lhs
    rhs = sum(Fraction(-j) ** (q - 1) / factorial(q - 1) * tilde_b[j] for j in range(len(tilde_b)))
    return lhs - rhs


def _implicit_residual(a: Sequence[Fraction], b_im: Sequence[Fraction], b_m1: Fraction, q: int) -> Fraction:
    lhs = Fraction(1, factorial(q)) + sum(Fraction(-j) ** q / factorial(q) * a[j] for j in range(len(a)))
    if q == 0:
        return lhs
    rhs = b_m1 / factorial(q - 1) + sum(Fraction(-j) ** (q - 1) / factorial(q - 1) * b_im[j]
                                        for j in range(len(b_im)))
    return lhs - rhs


def _max_order(residuals: Sequence[float], tol: float) -> int:
    order = -1
    for q, r in enumerate(residuals):
        if r > tol:
            break
        order = q
    return max(order, 0)


def order_condition_residuals(c: SchemeCoefficients, q_max: Optional[int] = None) -> List[Tuple[int, float, float]]:
    """
    Resíduos das condições de ordem q = 0..q_max

    Returns:
        Lista de (q, resíduo explícito, resíduo implícito) em valor absoluto
    """
    q_max = 2 * c.s + 2 if q_max is None else q_max
    return [
        (q,
         float(abs(_explicit_residual(c.tilde_a, c.tilde_b, q))),
         float(abs(_implicit_residual(c.a, c.b_im, c.b_m1, q))))
        for q in range(q_max + 1)
    ]


def verify_order(c: SchemeCoefficients, tol: float = DEFAULT_ORDER_TOL) -> OrderReport:
    """
    Maior ordem p tal que todas as condições até p valem dentro de tol

    As tabelas explícita e implícita são avaliadas separadamente; a aritmética
    é exata e só o resíduo final é convertido para float.
    """
    for attr in ('tilde_a', 'tilde_b', 'a', 'b_im'):
        _check_length(f"{c.name}.{attr}", getattr(c, attr), c.s)

    residuals = order_condition_residuals(c)
    return OrderReport(
        max_order_explicit=_max_order([r[1] for r in residuals], tol),
        max_order_implicit=_max_order([r[2] for r in residuals], tol),
        residuals=residuals,
        tol=tol
    )


def explicit_order(table: ExplicitTable, tol: float = DEFAULT_ORDER_TOL) -> int:
    """Ordem alcançada por uma tabela explícita isolada"""
    residuals = [float(abs(_explicit_residual(table.tilde_a, table.tilde_b, q)))
                 for q in range(2 * table.s + 2)]
    return _max_order(residuals, tol)


def implicit_order(table: ImplicitTable, tol: float = DEFAULT_ORDER_TOL) -> int:
    """Ordem alcançada por uma tabela implícita isolada"""
    residuals = [float(abs(_implicit_residual(table.a, table.b_im, table.b_m1, q)))
                 for q in range(2 * table.s + 3)]
    return _max_order(residuals, tol)
