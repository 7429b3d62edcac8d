"""
Catálogo de Esquemas
Tabela congelada nome -> (preditor, corretor) e serialização em texto com
frações exatas (data/scheme_catalog.txt)
"""

import os
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from loguru import logger

from src.exceptions import SchemeError
from .coefficients import ExplicitTable, ImplicitTable, SchemeCoefficients
from .derivation import (
    SSPVariant,
    derive_adams_bashforth,
    derive_adams_moulton,
    derive_bdf,
    identity_predictor,
    second_order_family,
    ssp_explicit,
)

DEFAULT_CATALOG_FILE = os.path.join(os.path.dirname(__file__), '..', '..', 'data', 'scheme_catalog.txt')

# Famílias de segunda ordem: nome -> (α, β, nome do corretor)
_SECOND_ORDER = {
    'FE-CN2': ('1/2', '0', 'CN2'),
    'FE-BDF2': ('1', '0', 'BDF2'),
    'FE-MCN2': ('1/2', '1/8', 'MCN2'),
}

# Pareamento congelado: nome -> (preditor, corretor, ordem declarada).
# AB-*p usa o Adams-Bashforth de ordem p-1; "SSP-" usa o preditor SSP3_4STEP
# e "SSP2-" o SSP2_4STEP.
_PAIRINGS: Dict[str, Tuple[str, str, int]] = {
    'FE-BE1': ('ID', 'BDF1', 1),
    'AB-AM3': ('AB2', 'AM3', 3),
    'AB-AM4': ('AB3', 'AM4', 4),
    'AB-AM5': ('AB4', 'AM5', 5),
    'AB-BDF3': ('AB2', 'BDF3', 3),
    'AB-BDF4': ('AB3', 'BDF4', 4),
    'AB-BDF5': ('AB4', 'BDF5', 5),
    'SSP-AM3': ('SSP3_4STEP', 'AM3', 3),
    'SSP-BDF3': ('SSP3_4STEP', 'BDF3', 3),
    'SSP-BDF4': ('SSP3_4STEP', 'BDF4', 4),
    'SSP2-AM3': ('SSP2_4STEP', 'AM3', 3),
    'SSP2-BDF3': ('SSP2_4STEP', 'BDF3', 3),
}

CATALOG_NAMES: Tuple[str, ...] = (
    'FE-BE1', 'FE-CN2', 'FE-BDF2', 'FE-MCN2',
    'AB-AM3', 'AB-AM4', 'AB-AM5',
    'AB-BDF3', 'AB-BDF4', 'AB-BDF5',
    'SSP-AM3', 'SSP-BDF3', 'SSP-BDF4',
    'SSP2-AM3', 'SSP2-BDF3',
)

# Nomes alternativos usados na literatura para o mesmo par
ALIASES: Dict[str, str] = {
    'AB-AM2': 'FE-CN2',
    'AB-BDF2': 'FE-BDF2',
    'SSP3-AM3': 'SSP-AM3',
    'SSP3-BDF3': 'SSP-BDF3',
    'SSP3-BDF4': 'SSP-BDF4',
}

# Cadeia de arranque: esquemas com 1, 2, 3, ... passos
STARTUP_CHAIN: Tuple[str, ...] = ('FE-BE1', 'FE-BDF2', 'AB-BDF3', 'AB-BDF4', 'AB-BDF5')


def _predictor(key: str) -> ExplicitTable:
    if key == 'ID':
        return identity_predictor()
    if key.startswith('AB'):
        return derive_adams_bashforth(int(key[2:]))
    return ssp_explicit(SSPVariant(key))


def _corrector(key: str) -> ImplicitTable:
    if key.startswith('BDF'):
        return derive_bdf(int(key[3:]))
    if key.startswith('AM'):
        return derive_adams_moulton(int(key[2:]) - 1)
    raise SchemeError(f"Corretor desconhecido: {key}")


def canonical_name(name: str) -> str:
    """Resolve aliases e normaliza caixa"""
    key = name.strip().upper()
    key = ALIASES.get(key, key)
    if key not in CATALOG_NAMES:
        raise SchemeError(f"Esquema desconhecido: {name!r} (disponíveis: {', '.join(CATALOG_NAMES)})")
    return key


@lru_cache(maxsize=None)
def builtin(name: str) -> SchemeCoefficients:
    """
    Esquema do catálogo pelo nome

    Args:
        name: Nome do catálogo ou alias (ex.: "SSP3-BDF4")

    Returns:
        Par de coeficientes com passos comuns (completado com zeros)
    """
    key = canonical_name(name)
    if key in _SECOND_ORDER:
        alpha, beta, corrector = _SECOND_ORDER[key]
        return second_order_family(alpha, beta, name=key, corrector_name=corrector)

    predictor, corrector, order = _PAIRINGS[key]
    scheme = SchemeCoefficients.pair(_predictor(predictor), _corrector(corrector), name=key, p=order)
    logger.debug(f"📚 Esquema {key} montado (s={scheme.s}, p={scheme.p})")
    return scheme


def list_schemes() -> List[SchemeCoefficients]:
    """Todos os esquemas do catálogo na ordem documentada"""
    return [builtin(name) for name in CATALOG_NAMES]


def _format_values(values) -> str:
    return ' '.join(str(v) for v in values)


def format_scheme(c: SchemeCoefficients) -> str:
    """Bloco de texto de um esquema com frações exatas"""
    lines = [
        f"[{c.name}]",
        f"s = {c.s}",
        f"p = {c.p}",
        f"predictor = {c.predictor or '-'}",
        f"corrector = {c.corrector or '-'}",
        f"cfl = {c.cfl if c.cfl is not None else '-'}",
        f"tilde_a = {_format_values(c.tilde_a)}",
        f"tilde_b = {_format_values(c.tilde_b)}",
        f"a = {_format_values(c.a)}",
        f"b = {_format_values(c.b_im)}",
        f"b_m1 = {c.b_m1}",
    ]
    return '\n'.join(lines)


def render_catalog(schemes: Optional[List[SchemeCoefficients]] = None) -> str:
    """Catálogo completo no formato do arquivo data/scheme_catalog.txt"""
    schemes = list_schemes() if schemes is None else schemes
    return '\n\n'.join(format_scheme(c) for c in schemes) + '\n'


def _parse_block(name: str, entries: Dict[str, str]) -> SchemeCoefficients:
    parse: Callable[[str], List[Fraction]] = lambda text: [Fraction(x) for x in text.split()]
    try:
        cfl = entries.get('cfl', '-')
        return SchemeCoefficients(
            name=name,
            s=int(entries['s']),
            p=int(entries['p']),
            tilde_a=parse(entries['tilde_a']),
            tilde_b=parse(entries['tilde_b']),
            a=parse(entries['a']),
            b_im=parse(entries['b']),
            b_m1=Fraction(entries['b_m1']),
            predictor='' if entries.get('predictor', '-') == '-' else entries['predictor'],
            corrector='' if entries.get('corrector', '-') == '-' else entries['corrector'],
            cfl=None if cfl == '-' else Fraction(cfl)
        )
    except (KeyError, ValueError, ZeroDivisionError) as e:
        raise SchemeError(f"Bloco inválido no catálogo [{name}]: {e}") from e


def load_catalog_file(path: Optional[str] = None) -> Dict[str, SchemeCoefficients]:
    """
    Lê o catálogo em texto

    Args:
        path: Caminho do arquivo; padrão data/scheme_catalog.txt

    Returns:
        Dicionário nome -> coeficientes, na ordem do arquivo
    """
    path = os.path.normpath(path or DEFAULT_CATALOG_FILE)
    schemes: Dict[str, SchemeCoefficients] = {}
    current: Optional[str] = None
    entries: Dict[str, str] = {}

    with open(path, encoding='utf-8') as handle:
        for raw in handle:
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            if line.startswith('[') and line.endswith(']'):
                if current is not None:
                    schemes[current] = _parse_block(current, entries)
                current, entries = line[1:-1].strip(), {}
                continue
            if '=' not in line or current is None:
                raise SchemeError(f"Linha inválida no catálogo: {raw.rstrip()}")
            key, value = line.split('=', 1)
            entries[key.strip()] = value.strip()

    if current is not None:
        schemes[current] = _parse_block(current, entries)

    logger.info(f"📚 Catálogo carregado de {path}: {len(schemes)} esquemas")
    return schemes
