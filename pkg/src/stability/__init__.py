"""
Módulo Stability - semilm
Polinômio característico, mapas de estabilidade e oráculo de crescimento
"""

from .characteristic import advection_diffusion_symbol, char_poly, char_poly_coefficients
from .oracle import GrowthReport, growth_oracle, growth_oracle_grid
from .region import (
    StabilityGrid,
    StabilityPoint,
    StabilityTolerances,
    classify_roots,
    evaluate_point,
    max_stable_zi,
    scan_region,
)

__version__ = "1.0.0"

__all__ = [
    'advection_diffusion_symbol',
    'char_poly',
    'char_poly_coefficients',
    'GrowthReport',
    'growth_oracle',
    'growth_oracle_grid',
    'StabilityGrid',
    'StabilityPoint',
    'StabilityTolerances',
    'classify_roots',
    'evaluate_point',
    'max_stable_zi',
    'scan_region',
]
