"""
Módulo Problems - semilm
Discretizações por linhas dos problemas de teste em malhas periódicas 2-D
"""

from .base import BenchmarkProblem
from .convection_diffusion import test3_grid, test3_problem
from .frames import export_frame, read_manifest, write_manifest
from .gray_scott import gray_scott_initial, test2_grid, test2_problem
from .grid import Field, PeriodicGrid2D, l1_component_error, l1_error
from .reaction_diffusion import test1_grid, test1_problem
from .registry import DOMAINS, PROBLEM_NAMES, build_problem, grid_for
from .scalar import scalar_problem
from .stencils import (
    FIRST_DERIVATIVE,
    SECOND_DERIVATIVE,
    STENCILS,
    StencilSet,
    apply_stencil,
    gradient,
    grid_operators,
    laplacian,
    laplacian_diagonal,
    stencil_matrix,
)

__version__ = "1.0.0"

__all__ = [
    'BenchmarkProblem',
    'test3_grid',
    'test3_problem',
    'export_frame',
    'read_manifest',
    'write_manifest',
    'gray_scott_initial',
    'test2_grid',
    'test2_problem',
    'Field',
    'PeriodicGrid2D',
    'l1_component_error',
    'l1_error',
    'test1_grid',
    'test1_problem',
    'DOMAINS',
    'PROBLEM_NAMES',
    'build_problem',
    'grid_for',
    'scalar_problem',
    'FIRST_DERIVATIVE',
    'SECOND_DERIVATIVE',
    'STENCILS',
    'StencilSet',
    'apply_stencil',
    'gradient',
    'grid_operators',
    'laplacian',
    'laplacian_diagonal',
    'stencil_matrix',
]
