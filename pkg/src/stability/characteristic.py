"""
Polinômio Característico
Equação característica do par semi-implícito aplicado a u' = iλu + μv com
z_R = μΔt e z_I = iλΔt
"""

from typing import Tuple

import numpy as np

from src.linalg import ComplexPolynomial
from src.schemes import SchemeCoefficients


def char_poly_coefficients(c: SchemeCoefficients, z_R, z_I_mag) -> np.ndarray:
    """
    Coeficientes ascendentes (c_0..c_s) em lote

    Args:
        z_R, z_I_mag: Escalares ou arrays de mesma forma

    Returns:
        Array complexo de forma (..., s+1)
    """
    z_R = np.asarray(z_R, dtype=float)
    z_I = 1j * np.asarray(z_I_mag, dtype=float)
    z = z_R + z_I
    b_m1 = c.b_m1_float

    coefficients = np.zeros(np.broadcast(z_R, z_I).shape + (c.s + 1,), dtype=complex)
    coefficients[..., c.s] = 1.0 - b_m1 * z_R
    for j in range(c.s):
        # ρ, σ, ρ̃ e σ̃ contribuem ao termo ζ^{s-1-j}
        coefficients[..., c.s - 1 - j] = (c.a_array[j] - z * c.b_array[j]
                                          + b_m1 * z_I * (c.tilde_a_array[j] - z * c.tilde_b_array[j]))
    return coefficients


def char_poly(c: SchemeCoefficients, z_R: float, z_I_mag: float) -> ComplexPolynomial:
    """P(ζ) no ponto (z_R, z_I_mag); coeficiente de ζ^s é 1 - b_{-1} z_R"""
    return ComplexPolynomial(char_poly_coefficients(c, z_R, z_I_mag))


def advection_diffusion_symbol(a: float, D: float, dx: float, k: float) -> Tuple[float, float]:
    """
    (λ, μ) do modo de Fourier k da convecção-difusão com diferenças centradas

    λ = a/Δx·sin(kΔx), μ = 2D/Δx²·(cos(kΔx) - 1); o ponto no mapa de
    estabilidade é (z_R, z_I_mag) = (μΔt, |λ|Δt).
    """
    theta = k * dx
    return a / dx * np.sin(theta), 2.0 * D / dx ** 2 * (np.cos(theta) - 1.0)
