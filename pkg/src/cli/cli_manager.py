"""
CLI Manager - semilm
Linha de comando: schemes, stability, converge e run

Códigos de saída: 0 sucesso, 1 erro de uso/configuração, 2 falha numérica.
"""

import argparse
import os
import sys
from typing import List, Optional

from loguru import logger

from src.config import ConfigManager
from src.exceptions import (
    ConfigError,
    ConvergenceError,
    GridError,
    IntegrationError,
    LinearSolveError,
    RootFindingError,
    SchemeError,
    SemiLMError,
    StartupError,
)
from src.logger import setup_logger
from src.schemes import builtin, format_scheme, list_schemes, load_catalog_file, verify_order
from src.stability import StabilityTolerances, scan_region
from .convergence_manager import ConvergenceManager
from .csv_io import write_convergence_csv, write_stability_csv
from .run_manager import RunManager

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2

NUMERICAL_ERRORS = (LinearSolveError, RootFindingError, ConvergenceError, IntegrationError, StartupError)


class UsageError(Exception):
    """Erro de argumentos da linha de comando"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog='semilm', description='Esquemas semi-implícitos de passo múltiplo')
    parser.add_argument('--log-level', default=None, help='Nível do log (padrão SEMILM_LOG_LEVEL ou INFO)')
    commands = parser.add_subparsers(dest='command', parser_class=_Parser)
    commands.required = True

    schemes = commands.add_parser('schemes', help='Inspeciona o catálogo')
    schemes_cmd = schemes.add_subparsers(dest='action', parser_class=_Parser)
    schemes_cmd.required = True
    listing = schemes_cmd.add_parser('list', help='Lista os 15 esquemas com coeficientes exatos')
    listing.add_argument('--from-file', nargs='?', const='', default=None, metavar='PATH',
                         help='Lê o catálogo em texto (padrão data/scheme_catalog.txt)')
    check = schemes_cmd.add_parser('check', help='Verifica as condições de ordem')
    check.add_argument('name')

    stability = commands.add_parser('stability', help='Mapa de estabilidade em CSV')
    stability.add_argument('--scheme', required=True)
    stability.add_argument('--zr-min', type=float, default=-4.0)
    stability.add_argument('--zr-max', type=float, default=0.0)
    stability.add_argument('--nr', type=int, default=41)
    stability.add_argument('--zi-max', type=float, default=2.0)
    stability.add_argument('--ni', type=int, default=41)
    stability.add_argument('--out', default=None)
    stability.add_argument('--workers', type=int, default=None)

    converge = commands.add_parser('converge', help='Tabela de erros e ordens observadas')
    converge.add_argument('--problem', default='test1', choices=['test1', 'test3', 'scalar'])
    converge.add_argument('--schemes', default='FE-BDF2,AB-BDF3,SSP-BDF4,AB-BDF5')
    converge.add_argument('--k-min', type=int, default=5)
    converge.add_argument('--k-max', type=int, default=7)
    converge.add_argument('--lam', type=float, default=0.5)
    converge.add_argument('--t-final', type=float, default=None)
    converge.add_argument('--out', default=None)
    converge.add_argument('--workers', type=int, default=None)

    run = commands.add_parser('run', help='Simulação com exportação de quadros')
    run.add_argument('--config', default=None, help='Arquivo key=value')
    run.add_argument('--scheme')
    run.add_argument('--problem')
    run.add_argument('--n', type=int)
    run.add_argument('--dt', type=float)
    run.add_argument('--lam', type=float)
    run.add_argument('--t-final', type=float, dest='t_final')
    run.add_argument('--startup', choices=['exact', 'cascade'])
    run.add_argument('--output-dir', dest='output_dir')
    run.add_argument('--frames', help='Tempos separados por vírgula')
    return parser


def cmd_schemes(args, config: ConfigManager) -> int:
    if args.action == 'list':
        if args.from_file is not None:
            schemes = list(load_catalog_file(args.from_file or None).values())
        else:
            schemes = list_schemes()
        print(f"{'name':<10} {'s':>2} {'p':>2}  {'predictor':<11} {'corrector':<9} b_m1")
        for c in schemes:
            print(f"{c.name:<10} {c.s:>2} {c.p:>2}  {c.predictor or '-':<11} {c.corrector or '-':<9} {c.b_m1}")
            for line in format_scheme(c).splitlines()[6:]:
                print(f"    {line}")
        return EXIT_OK

    scheme = builtin(args.name)
    report = verify_order(scheme)
    print(f"{scheme.name}: {report.summary()}")
    print(f"{'q':>3} {'explicit':>12} {'implicit':>12}")
    for q, explicit, implicit in report.residuals:
        print(f"{q:>3} {explicit:>12.3e} {implicit:>12.3e}")
    return EXIT_OK


def cmd_stability(args, config: ConfigManager) -> int:
    scheme = builtin(args.scheme)
    workers = args.workers or config.get_config('env', 'workers')
    grid = scan_region(scheme, args.zr_min, args.zr_max, args.nr, args.zi_max, args.ni,
                       StabilityTolerances(), workers=workers)
    out = args.out or os.path.join(config.get_config('env', 'output_dir'), f"stability_{scheme.name}.csv")
    rows = write_stability_csv(out, grid)
    print(f"{scheme.name}: {rows} nós, {int(grid.stable_mask.sum())} estáveis -> {out}")
    return EXIT_OK


def cmd_converge(args, config: ConfigManager) -> int:
    if args.k_max < args.k_min:
        raise ConfigError(f"k-max ({args.k_max}) menor que k-min ({args.k_min})")
    manager = ConvergenceManager(workers=args.workers or config.get_config('env', 'workers'))
    rows = manager.run_study(
        args.problem,
        [name for name in args.schemes.split(',') if name.strip()],
        list(range(args.k_min, args.k_max + 1)),
        lam=args.lam,
        t_final=args.t_final,
        linear_tol=config.get_config('env', 'linear_tol'),
        linear_maxiter=config.get_config('env', 'linear_maxiter')
    )
    out = args.out or os.path.join(config.get_config('env', 'output_dir'), f"converge_{args.problem}.csv")
    write_convergence_csv(out, rows)
    print(manager.format_table(rows))
    print(f"-> {out}")
    return EXIT_OK


def cmd_run(args, config: ConfigManager) -> int:
    overrides = {key: getattr(args, key) for key in
                 ('scheme', 'problem', 'n', 'dt', 'lam', 't_final', 'startup', 'output_dir', 'frames')}
    run_config = config.build_run_config(args.config, overrides)
    summary = RunManager(run_config).execute()
    print(summary.format())
    return EXIT_OK


COMMANDS = {
    'schemes': cmd_schemes,
    'stability': cmd_stability,
    'converge': cmd_converge,
    'run': cmd_run,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Ponto de entrada; devolve o código de saída"""
    config = ConfigManager()
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"semilm: erro: {e}", file=sys.stderr)
        return EXIT_USAGE

    setup_logger(args.log_level or config.get_config('env', 'log_level'))
    try:
        return COMMANDS[args.command](args, config)
    except NUMERICAL_ERRORS as e:
        logger.error(f"❌ Falha numérica: {e}")
        return EXIT_NUMERICAL
    except (SchemeError, ConfigError, GridError) as e:
        logger.error(f"❌ {e}")
        return EXIT_USAGE
    except SemiLMError as e:
        logger.error(f"❌ {e}")
        return EXIT_NUMERICAL
    except OSError as e:
        logger.error(f"❌ Erro de E/S: {e}")
        return EXIT_USAGE
