"""`tm-search`: bounded search for q0-recurring computations."""

import logging
from pathlib import Path

from models import ManifestKind
from services.turing_search import TuringSearch

from .common import EXIT_NEGATIVE, EXIT_OK, load

logger = logging.getLogger(__name__)


def register(subparsers):
    parser = subparsers.add_parser('tm-search', help='Search a machine for a run re-entering q0 forever')
    parser.add_argument('machine', type=Path, help='turing-machine manifest')
    parser.add_argument('--config-bound', type=int, help='longest tape segment kept in the search')
    parser.set_defaults(handler=handle)


def handle(args) -> int:
    machine = load(args, args.machine, ManifestKind.TURING_MACHINE)
    search = TuringSearch.from_config(args.settings)
    bound = args.config_bound or search.config_bound
    lasso = search.recurring_run(machine, bound)
    if lasso is None:
        print(f'no recurring computation within config bound {bound}')
        return EXIT_NEGATIVE
    for config in lasso.stem:
        print(f'  {config}')
    print('cycle:')
    for config in lasso.cycle:
        print(f'  {config}')
    return EXIT_OK
