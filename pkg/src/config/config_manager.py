"""
Config Manager - semilm
Gerenciador centralizado de configurações: padrões tipados, variáveis de
ambiente SEMILM_*, arquivos key=value e sobrescritas da linha de comando
"""

import os
from typing import Any, Dict, Optional

from dotenv import dotenv_values, load_dotenv
from loguru import logger
from pydantic import ValidationError

from src.exceptions import ConfigError
from .run_config import RunConfig

ENV_PREFIX = 'SEMILM_'


class ConfigManager:
    """Gerenciador centralizado de configurações"""

    # Configurações padrão: seção -> chave -> valor, tipo, descrição
    DEFAULT_CONFIGS: Dict[str, Dict[str, Dict[str, str]]] = {
        'run': {
            'scheme': {'value': 'SSP-BDF4', 'type': 'string', 'description': 'Esquema do catálogo (aliases aceitos)'},
            'problem': {'value': 'test3', 'type': 'string', 'description': 'test1, test2, test3 ou scalar'},
            'n': {'value': '200', 'type': 'integer', 'description': 'Nós por lado da malha'},
            'dt': {'value': '', 'type': 'optional_float', 'description': 'Passo explícito (vazio usa lam)'},
            'lam': {'value': '0.5', 'type': 'optional_float', 'description': 'Regra Δt = λΔx'},
            't0': {'value': '0', 'type': 'float', 'description': 'Tempo inicial'},
            't_final': {'value': '1', 'type': 'float', 'description': 'Tempo final'},
            'startup': {'value': 'exact', 'type': 'string', 'description': 'exact ou cascade'},
            'frames': {'value': '', 'type': 'float_list', 'description': 'Tempos dos quadros exportados'},
            'cascade_substeps': {'value': '', 'type': 'optional_integer', 'description': 'Sub-passos do arranque (vazio = 2^p)'},
        },
        'env': {
            'output_dir': {'value': 'output', 'type': 'string', 'description': 'Diretório de saída'},
            'workers': {'value': '1', 'type': 'integer', 'description': 'Processos/threads para estudos em lote'},
            'linear_tol': {'value': '1e-10', 'type': 'float', 'description': 'Tolerância relativa do solve linear'},
            'linear_maxiter': {'value': '2000', 'type': 'integer', 'description': 'Limite de iterações do solve linear'},
            'log_level': {'value': 'INFO', 'type': 'string', 'description': 'Nível do loguru'},
        },
    }

    def __init__(self, env_file: Optional[str] = 'config.env'):
        """Inicializa o gerenciador (config.env é opcional)"""
        self.env_file = env_file
        self.config_cache: Dict[str, Any] = {}
        if env_file and os.path.exists(env_file):
            load_dotenv(env_file)
            logger.debug(f"⚙️ Variáveis carregadas de {env_file}")

    def get_config(self, section: str, key: str, default: Any = None) -> Any:
        """Valor da seção `env` pode vir de SEMILM_<KEY>; demais vêm dos padrões"""
        cache_key = f"{section}.{key}"
        if cache_key in self.config_cache:
            return self.config_cache[cache_key]

        entry = self.DEFAULT_CONFIGS.get(section, {}).get(key)
        if entry is None:
            return default
        raw = entry['value']
        if section == 'env':
            raw = os.getenv(f"{ENV_PREFIX}{key.upper()}", raw)
        value = self._convert_value(raw, entry['type'], f"{section}.{key}")
        self.config_cache[cache_key] = value
        return value

    def get_all_configs(self) -> Dict[str, Dict[str, Any]]:
        """Todas as configurações com valor convertido, tipo e descrição"""
        return {
            section: {
                key: {'value': self.get_config(section, key), 'type': entry['type'], 'description': entry['description']}
                for key, entry in entries.items()
            }
            for section, entries in self.DEFAULT_CONFIGS.items()
        }

    def load_file(self, path: str) -> Dict[str, str]:
        """Lê um arquivo key=value (formato dotenv)"""
        if not os.path.exists(path):
            raise ConfigError(f"Arquivo de configuração não encontrado: {path}")
        values = {k.strip().lower(): v for k, v in dotenv_values(path).items() if v is not None}
        unknown = set(values) - set(self.DEFAULT_CONFIGS['run']) - set(self.DEFAULT_CONFIGS['env'])
        if unknown:
            raise ConfigError(f"Chaves desconhecidas em {path}: {', '.join(sorted(unknown))}")
        logger.info(f"⚙️ Configuração lida de {path}: {len(values)} chaves")
        return values

    def build_run_config(self, path: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
        """
        Monta o RunConfig: padrões < ambiente < arquivo < sobrescritas

        Args:
            path: Arquivo key=value opcional
            overrides: Valores da linha de comando (None é ignorado)
        """
        values: Dict[str, Any] = {key: self.get_config('run', key) for key in self.DEFAULT_CONFIGS['run']}
        for key in ('output_dir', 'linear_tol', 'linear_maxiter'):
            values[key] = self.get_config('env', key)

        if path:
            for key, raw in self.load_file(path).items():
                if key in ('workers', 'log_level'):
                    continue
                section = 'run' if key in self.DEFAULT_CONFIGS['run'] else 'env'
                values[key] = self._convert_value(raw, self.DEFAULT_CONFIGS[section][key]['type'], f"{path}: {key}")

        for key, value in (overrides or {}).items():
            if value is not None:
                values[key] = value

        try:
            return RunConfig(**values)
        except ValidationError as e:
            raise ConfigError(f"Configuração inválida: {e}") from e

    def _convert_value(self, value: str, data_type: str, origin: str = 'valor') -> Any:
        """Converte valor string para o tipo apropriado; ConfigError se inválido"""
        value = value.strip() if isinstance(value, str) else value
        try:
            if data_type == 'integer':
                return int(value)
            elif data_type == 'float':
                return float(value)
            elif data_type == 'optional_float':
                return float(value) if value not in ('', None) else None
            elif data_type == 'optional_integer':
                return int(value) if value not in ('', None) else None
            elif data_type == 'float_list':
                return [float(x) for x in str(value).replace(';', ',').split(',') if x.strip()]
            elif data_type == 'boolean':
                return str(value).lower() in ('true', '1', 'yes', 'on')
            else:  # string
                return value
        except ValueError as e:
            logger.error(f"❌ Erro ao converter {origin}='{value}' para {data_type}")
            raise ConfigError(f"Valor inválido para {origin}: '{value}' não é {data_type}") from e
