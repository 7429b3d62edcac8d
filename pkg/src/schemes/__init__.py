"""
Módulo Schemes - semilm
Tabelas de coeficientes semi-implícitos, condições de ordem e catálogo
"""

from .coefficients import (
    ExplicitTable,
    ImplicitTable,
    OrderReport,
    SchemeCoefficients,
    explicit_order,
    implicit_order,
    order_condition_residuals,
    verify_order,
)
from .derivation import (
    SSPVariant,
    derive_adams_bashforth,
    derive_adams_moulton,
    derive_bdf,
    identity_predictor,
    second_order_family,
    solve_order_system,
    ssp_explicit,
)
from .catalog import (
    ALIASES,
    CATALOG_NAMES,
    STARTUP_CHAIN,
    builtin,
    canonical_name,
    format_scheme,
    list_schemes,
    load_catalog_file,
    render_catalog,
)

__version__ = "1.0.0"

__all__ = [
    'ExplicitTable',
    'ImplicitTable',
    'OrderReport',
    'SchemeCoefficients',
    'explicit_order',
    'implicit_order',
    'order_condition_residuals',
    'verify_order',
    'SSPVariant',
    'derive_adams_bashforth',
    'derive_adams_moulton',
    'derive_bdf',
    'identity_predictor',
    'second_order_family',
    'solve_order_system',
    'ssp_explicit',
    'ALIASES',
    'CATALOG_NAMES',
    'STARTUP_CHAIN',
    'builtin',
    'canonical_name',
    'format_scheme',
    'list_schemes',
    'load_catalog_file',
    'render_catalog',
]
