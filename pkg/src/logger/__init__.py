"""
Módulo Logger - semilm
Configuração centralizada dos sinks do loguru
"""

import os
import sys
from typing import Optional

from loguru import logger

__version__ = "1.0.0"


def setup_logger(level: Optional[str] = None, log_file: Optional[str] = None) -> None:
    """
    Configura os sinks de log (stderr + arquivo rotativo)

    Chamadas repetidas substituem os sinks anteriores em vez de duplicá-los.

    Args:
        level: Nível mínimo; padrão SEMILM_LOG_LEVEL ou INFO
        log_file: Caminho do arquivo de log; padrão logs/semilm.log, '' desativa
    """
    level = (level or os.getenv('SEMILM_LOG_LEVEL', 'INFO')).upper()
    if log_file is None:
        log_file = os.getenv('SEMILM_LOG_FILE', 'logs/semilm.log')

    logger.remove()
    logger.add(sys.stderr, level=level, format="{time:HH:mm:ss} | {level} | {message}")
    if log_file:
        logger.add(
            log_file,
            rotation="1 week",
            retention="30 days",
            level=level,
            format="{time} | {level} | {message}"
        )
    logger.debug(f"📝 Logger configurado (nível {level})")


__all__ = ['setup_logger']
