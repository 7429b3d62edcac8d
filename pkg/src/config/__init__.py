"""
Módulo Config - semilm
Gerenciamento centralizado de configurações e validação dos runs
"""

from .config_manager import ConfigManager
from .run_config import RunConfig, uniform_dt

__version__ = "1.0.0"
__description__ = "Padrões tipados, variáveis SEMILM_*, arquivos key=value e RunConfig"

# Exports principais
__all__ = [
    'ConfigManager',
    'RunConfig',
    'uniform_dt',
]
