"""
Módulo CLI - semilm
Linha de comando, estudos de convergência, runs de simulação e CSV
"""

from .cli_manager import EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE, build_parser, main
from .convergence_manager import ConvergenceManager, ConvergenceTask, observed_order, run_case, task_dt
from .csv_io import (
    CONVERGENCE_HEADER,
    STABILITY_HEADER,
    ConvergenceRow,
    read_convergence_csv,
    read_stability_csv,
    write_convergence_csv,
    write_stability_csv,
)
from .run_manager import RunManager, RunSummary

__version__ = "1.0.0"

# Exports principais
__all__ = [
    'main',
    'build_parser',
    'EXIT_OK',
    'EXIT_USAGE',
    'EXIT_NUMERICAL',
    'ConvergenceManager',
    'ConvergenceTask',
    'observed_order',
    'run_case',
    'task_dt',
    'ConvergenceRow',
    'CONVERGENCE_HEADER',
    'STABILITY_HEADER',
    'read_convergence_csv',
    'read_stability_csv',
    'write_convergence_csv',
    'write_stability_csv',
    'RunManager',
    'RunSummary',
]
