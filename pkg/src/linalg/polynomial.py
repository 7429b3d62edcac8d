"""
Raízes de Polinômios Complexos
Iteração simultânea de Aberth-Ehrlich com critério de parada por erro
regressivo (backward error)
"""

from dataclasses import dataclass, field
from typing import List, Sequence

import numpy as np

from src.exceptions import RootFindingError

STRIP_TOL = 1e-14
ZERO_ROOT_TOL = 1e-15
# Deslocamento angular irracional dos chutes iniciais
ANGLE_OFFSET = 0.4 * np.sqrt(2.0)


class ComplexPolynomial:
    """
    Polinômio c_0 + c_1 ζ + ... + c_d ζ^d

    Coeficientes líderes abaixo de strip_tol·max|c| são removidos; o
    polinômio nulo fica com grau 0.
    """

    def __init__(self, coefficients: Sequence[complex], strip_tol: float = STRIP_TOL):
        c = np.atleast_1d(np.asarray(coefficients, dtype=complex)).copy()
        if c.size == 0:
            c = np.zeros(1, dtype=complex)
        scale = float(np.max(np.abs(c)))
        d = c.size - 1
        while d > 0 and abs(c[d]) <= strip_tol * scale:
            d -= 1
        self.coefficients = c[:d + 1]

    @property
    def degree(self) -> int:
        return self.coefficients.size - 1

    @property
    def leading(self) -> complex:
        return complex(self.coefficients[-1])

    def __call__(self, z):
        return np.polyval(self.coefficients[::-1], z)

    def derivative(self) -> 'ComplexPolynomial':
        if self.degree == 0:
            return ComplexPolynomial([0.0])
        return ComplexPolynomial(self.coefficients[1:] * np.arange(1, self.degree + 1), strip_tol=0.0)

    def conjugate(self) -> 'ComplexPolynomial':
        return ComplexPolynomial(np.conj(self.coefficients), strip_tol=0.0)

    def __repr__(self) -> str:
        return f"ComplexPolynomial(degree={self.degree}, coefficients={self.coefficients.tolist()})"


@dataclass
class RootsResult:
    """Raízes encontradas e diagnóstico"""

    roots: np.ndarray
    degenerate: bool = False
    iterations: int = 0
    backward_errors: List[float] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


def backward_errors(coefficients: np.ndarray, z: np.ndarray) -> np.ndarray:
    """|p(z)| / Σ|c_k||z|^k para cada z (Horner em lote)"""
    desc = coefficients[::-1]
    num = np.abs(np.polyval(desc, z))
    den = np.polyval(np.abs(desc), np.abs(z))
    return num / np.where(den > 0.0, den, 1.0)


def _aberth(coefficients: np.ndarray, tol: float, maxiter: int):
    n = coefficients.size - 1
    desc = coefficients[::-1]
    desc_deriv = np.polyder(desc)

    radius = 1.1 * abs(coefficients[0] / coefficients[-1]) ** (1.0 / n)
    if not np.isfinite(radius) or radius == 0.0:
        radius = 1.0
    z = radius * np.exp(1j * (2.0 * np.pi * np.arange(n) / n + ANGLE_OFFSET))

    berr = backward_errors(coefficients, z)
    for iteration in range(1, maxiter + 1):
        pz = np.polyval(desc, z)
        dpz = np.polyval(desc_deriv, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        with np.errstate(divide='ignore', invalid='ignore'):
            ratio = pz / dpz
            step = ratio / (1.0 - ratio * inv.sum(axis=1))
        # derivada nula ou raízes coincidentes: pequeno empurrão fora da diagonal
        bad = ~np.isfinite(step)
        if bad.any():
            step[bad] = 1e-3 * radius * np.exp(1j * ANGLE_OFFSET * (1 + np.flatnonzero(bad)))
        # raízes já convergidas não se movem
        step[berr <= tol] = 0.0
        z = z - step
        berr = backward_errors(coefficients, z)
        if np.all(berr <= tol):
            return z, iteration, berr
    raise RootFindingError(f"Aberth-Ehrlich não convergiu em {maxiter} iterações", berr.tolist())


def poly_roots(p: ComplexPolynomial, tol: float = 1e-12, maxiter: int = 500) -> RootsResult:
    """
    Todas as raízes de p

    Args:
        p: Polinômio (já sem coeficientes líderes desprezíveis)
        tol: Erro regressivo máximo |p(r)| / Σ|c_k||r|^k
        maxiter: Limite de iterações simultâneas

    Returns:
        RootsResult com d raízes; grau 0 devolve lista vazia com degenerate=True
    """
    if not isinstance(p, ComplexPolynomial):
        p = ComplexPolynomial(p)
    c = p.coefficients
    d = p.degree
    if d < 1:
        return RootsResult(roots=np.empty(0, dtype=complex), degenerate=True)

    # coeficientes baixos nulos correspondem a raízes exatas em zero
    scale = float(np.max(np.abs(c)))
    k = 0
    while k < d and abs(c[k]) <= ZERO_ROOT_TOL * scale:
        k += 1
    zeros = np.zeros(k, dtype=complex)
    if k == d:
        return RootsResult(roots=zeros, backward_errors=[0.0] * k)

    found, iterations, berr = _aberth(c[k:], tol, maxiter)
    return RootsResult(
        roots=np.concatenate([zeros, found]),
        iterations=iterations,
        backward_errors=[0.0] * k + berr.tolist()
    )


def poly_from_roots(roots: Sequence[complex], leading: complex = 1.0) -> ComplexPolynomial:
    """Reconstrói o polinômio leading·Π(ζ - r)"""
    desc = leading * np.poly(np.asarray(roots, dtype=complex)) if len(roots) else np.array([leading])
    return ComplexPolynomial(np.asarray(desc, dtype=complex)[::-1], strip_tol=0.0)
