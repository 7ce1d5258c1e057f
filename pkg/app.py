"""Command-line entry point for the ω-PCP toolkit."""

import argparse
import logging
import sys

from pythonjsonlogger import jsonlogger

from config import config as named_configs, get_config
from commands import register_all
from commands.common import EXIT_INPUT_ERROR
from models.errors import OmegaError

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger(__name__)


def configure_logging(level: str, fmt: str = 'text'):
    """Send diagnostics to standard error, as text or JSON lines."""
    handler = logging.StreamHandler(sys.stderr)
    if fmt == 'json':
        handler.setFormatter(jsonlogger.JsonFormatter(LOG_FORMAT))
    else:
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logging.basicConfig(level=level.upper(), handlers=[handler], force=True)


def create_app(config_name=None) -> argparse.ArgumentParser:
    """Application factory: the root parser with every subcommand registered."""
    settings = get_config() if config_name is None else _named_config(config_name)
    parser = argparse.ArgumentParser(
        prog='omega-pcp',
        description='Büchi automata, transducers, ω-PCP(Reg) reductions and continuity probes.',
    )
    parser.add_argument('--seed', type=int, help='seed for randomized commands')
    parser.add_argument('--budget', type=int, help='node expansion budget for searches')
    parser.add_argument('--format', choices=['text', 'json'], default='text',
                        help='result format on standard output')
    parser.add_argument('--log-level', help='logging level (default from LOG_LEVEL)')
    parser.set_defaults(settings=settings)
    subparsers = parser.add_subparsers(dest='command', required=True)
    register_all(subparsers)
    return parser


def _named_config(name):
    return named_configs.get(name, named_configs['default'])


def _apply_overrides(args):
    """Copy the global flags onto a per-run settings class."""
    overrides = {}
    if args.budget is not None:
        overrides['STEP_BUDGET'] = args.budget
    if args.seed is not None:
        overrides['RANDOM_SEED'] = args.seed
    if overrides:
        args.settings = type('RunConfig', (args.settings,), overrides)


def main(argv=None, config_name=None) -> int:
    parser = create_app(config_name)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT_ERROR if exc.code else 0
    _apply_overrides(args)
    configure_logging(args.log_level or args.settings.LOG_LEVEL, args.settings.LOG_FORMAT)

    try:
        return args.handler(args)
    except OmegaError as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        print(f'error: {exc}', file=sys.stderr)
        return EXIT_INPUT_ERROR
    except Exception as exc:
        logger.error(f"Unexpected failure in {args.command}: {exc}", exc_info=True)
        return EXIT_INPUT_ERROR


if __name__ == '__main__':
    sys.exit(main())
