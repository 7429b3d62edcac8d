"""
Módulo Linalg - semilm
Solves lineares deslocados livres de matriz e raízes de polinômios complexos
"""

from .polynomial import ComplexPolynomial, RootsResult, backward_errors, poly_from_roots, poly_roots
from .shifted_solver import DENSE_LIMIT, GMRES_RESTART, make_operator, solve_shifted

__version__ = "1.0.0"

__all__ = [
    'ComplexPolynomial',
    'RootsResult',
    'backward_errors',
    'poly_from_roots',
    'poly_roots',
    'DENSE_LIMIT',
    'GMRES_RESTART',
    'make_operator',
    'solve_shifted',
]
