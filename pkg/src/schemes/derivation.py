"""
Derivação de Esquemas
Famílias clássicas obtidas resolvendo exatamente os sistemas lineares das
condições de ordem (Adams-Bashforth, Adams-Moulton, BDF, família de segunda
ordem e preditores SSP publicados)
"""

from enum import Enum
from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence, Tuple

import sympy
from loguru import logger

from src.exceptions import SchemeError
from .coefficients import ExplicitTable, ImplicitTable, Number, SchemeCoefficients, as_fraction

MAX_STEPS = 6
MAX_ADAMS_MOULTON_STEPS = 5

OrderSystem = Tuple[List[List[Fraction]], List[Fraction]]


class SSPVariant(str, Enum):
    """Preditores explícitos SSP ótimos com coeficientes publicados"""

    SSP2_2STEP = 'SSP2_2STEP'
    SSP2_4STEP = 'SSP2_4STEP'
    SSP3_4STEP = 'SSP3_4STEP'


# (α, β, C, ordem) na forma u^{n+1} = Σ α_j u^{n-j} + Δt β_j H^{n-j}
_SSP_TABLES = {
    SSPVariant.SSP2_2STEP: (('4/5', '1/5'), ('8/5', '-2/5'), '1/2', 2),
    SSPVariant.SSP2_4STEP: (('8/9', '0', '0', '1/9'), ('4/3', '0', '0', '0'), '2/3', 2),
    SSPVariant.SSP3_4STEP: (('16/27', '0', '0', '11/27'), ('16/9', '0', '0', '4/9'), '1/3', 3),
}


def _check_steps(s: int, upper: int, family: str):
    if not isinstance(s, int) or s < 1 or s > upper:
        raise SchemeError(f"{family}: número de passos {s} fora do intervalo suportado [1, {upper}]")


def _power(j: int, q: int) -> Fraction:
    """(-j)^q com a convenção 0^0 = 1"""
    return Fraction(-j) ** q


def solve_order_system(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction],
                       row_order: Optional[Sequence[int]] = None) -> List[Fraction]:
    """
    Resolve exatamente um sistema de condições de ordem

    Args:
        matrix: Linhas do sistema (uma por condição)
        rhs: Lado direito
        row_order: Permutação opcional das linhas (o resultado não depende dela)

    Returns:
        Solução em frações exatas
    """
    rows = list(range(len(rhs))) if row_order is None else list(row_order)
    if sorted(rows) != list(range(len(rhs))):
        raise SchemeError(f"Permutação de linhas inválida: {row_order}")

    m = sympy.Matrix([[sympy.Rational(matrix[i][k].numerator, matrix[i][k].denominator)
                       for k in range(len(matrix[i]))] for i in rows])
    b = sympy.Matrix([sympy.Rational(rhs[i].numerator, rhs[i].denominator) for i in rows])
    if m.rows != m.cols:
        raise SchemeError(f"Sistema de condições de ordem não quadrado: {m.rows}x{m.cols}")
    try:
        solution = m.LUsolve(b)
    except (ValueError, ZeroDivisionError) as e:
        raise SchemeError(f"Sistema de condições de ordem singular: {e}") from e
    return [Fraction(int(x.p), int(x.q)) for x in solution]


def adams_bashforth_system(s: int) -> OrderSystem:
    """Condições q = 1..s para b̃ com ã = (-1, 0, ..., 0)"""
    _check_steps(s, MAX_STEPS, "Adams-Bashforth")
    matrix = [[_power(j, q - 1) / factorial(q - 1) for j in range(s)] for q in range(1, s + 1)]
    rhs = [Fraction(1, factorial(q)) for q in range(1, s + 1)]
    return matrix, rhs


def adams_moulton_system(s: int) -> OrderSystem:
    """Condições q = 1..s+1 para (b_{-1}, b_0..b_{s-1}) com a = (-1, 0, ..., 0)"""
    _check_steps(s, MAX_ADAMS_MOULTON_STEPS, "Adams-Moulton")
    matrix = [[Fraction(1, factorial(q - 1))] + [_power(j, q - 1) / factorial(q - 1) for j in range(s)]
              for q in range(1, s + 2)]
    rhs = [Fraction(1, factorial(q)) for q in range(1, s + 2)]
    return matrix, rhs


def bdf_system(s: int) -> OrderSystem:
    """Condições q = 0..s para (a_0..a_{s-1}, b_{-1}) com b_j = 0"""
    _check_steps(s, MAX_STEPS, "BDF")
    matrix = [[Fraction(1)] * s + [Fraction(0)]]
    rhs = [Fraction(-1)]
    for q in range(1, s + 1):
        matrix.append([_power(j, q) / factorial(q) for j in range(s)] + [Fraction(-1, factorial(q - 1))])
        rhs.append(Fraction(-1, factorial(q)))
    return matrix, rhs


def derive_adams_bashforth(s: int) -> ExplicitTable:
    """Tabela Adams-Bashforth de s passos (ordem s)"""
    matrix, rhs = adams_bashforth_system(s)
    tilde_b = solve_order_system(matrix, rhs)
    tilde_a = [Fraction(-1)] + [Fraction(0)] * (s - 1)
    return ExplicitTable(name='FE' if s == 1 else f"AB{s}", s=s, p=s, tilde_a=tilde_a, tilde_b=tilde_b)


def derive_adams_moulton(s: int) -> ImplicitTable:
    """Tabela Adams-Moulton de s passos (ordem s+1)"""
    matrix, rhs = adams_moulton_system(s)
    solution = solve_order_system(matrix, rhs)
    a = [Fraction(-1)] + [Fraction(0)] * (s - 1)
    return ImplicitTable(name=f"AM{s + 1}", s=s, p=s + 1, a=a, b_im=solution[1:], b_m1=solution[0])


def derive_bdf(s: int) -> ImplicitTable:
    """Tabela BDF de s passos (ordem s)"""
    matrix, rhs = bdf_system(s)
    solution = solve_order_system(matrix, rhs)
    return ImplicitTable(name=f"BDF{s}", s=s, p=s, a=solution[:s], b_im=[Fraction(0)] * s, b_m1=solution[s])


def identity_predictor() -> ExplicitTable:
    """Preditor identidade û^{n+1} = u^n (ordem 0)"""
    return ExplicitTable(name='ID', s=1, p=0, tilde_a=[-1], tilde_b=[0])


def ssp_explicit(variant: SSPVariant) -> ExplicitTable:
    """
    Preditor SSP explícito ótimo

    Os pesos publicados (α, β) são mapeados para a convenção geral via
    ã_j = -α_j, b̃_j = β_j; o coeficiente CFL fica junto da tabela.
    """
    variant = SSPVariant(variant)
    alpha, beta, cfl, order = _SSP_TABLES[variant]
    return ExplicitTable(
        name=variant.value,
        s=len(alpha),
        p=order,
        tilde_a=[-Fraction(x) for x in alpha],
        tilde_b=[Fraction(x) for x in beta],
        cfl=Fraction(cfl)
    )


def ssp_weights(table: ExplicitTable) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
    """(α, β) na forma SSP a partir de uma tabela explícita"""
    return tuple(-x for x in table.tilde_a), table.tilde_b


def second_order_family(alpha: Number, beta: Number, name: Optional[str] = None,
                        corrector_name: Optional[str] = None) -> SchemeCoefficients:
    """
    Família geral de esquemas de segunda ordem (preditor Euler explícito)

    Args:
        alpha: Parâmetro α (α=1/2 Crank-Nicolson, α=1 BDF2)
        beta: Parâmetro β (β=1/8 com α=1/2 dá o MCN2)
        name: Nome do esquema resultante
        corrector_name: Nome da parte implícita (padrão SO2(α,β))
    """
    alpha = as_fraction(alpha)
    beta = as_fraction(beta)
    den = 2 * alpha + 1
    if den == 0:
        raise SchemeError("second_order_family: 2α + 1 = 0")

    corrector = ImplicitTable(
        name=corrector_name or f"SO2({alpha},{beta})",
        s=2,
        p=2,
        a=[-4 * alpha / den, (2 * alpha - 1) / den],
        b_im=[2 * (1 - alpha - beta) / den, beta / den],
        b_m1=(2 * alpha + beta) / den
    )
    logger.debug(f"🧮 Família de 2ª ordem α={alpha}, β={beta}")
    return SchemeCoefficients.pair(derive_adams_bashforth(1), corrector, name=name or f"FE-{corrector.name}", p=2)
