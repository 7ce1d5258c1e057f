"""`functional` and `common`: bounded searches over transducer relations."""

import logging
from pathlib import Path

from models import ManifestKind, RationalRelationWitness
from services.omega_core import OmegaCore
from services.transducer_ops import TransducerOps

from .common import EXIT_NEGATIVE, EXIT_OK, EXIT_UNKNOWN, default_output, load, provenance_for, write_manifest

logger = logging.getLogger(__name__)


def register(subparsers):
    parser = subparsers.add_parser('functional', help='Search for an input with two outputs')
    parser.add_argument('transducer', type=Path, help='transducer manifest')
    parser.add_argument('--bound', type=int, help='largest output overhang between the two runs')
    parser.set_defaults(handler=handle_functional)

    parser = subparsers.add_parser('common', help='Search for a pair accepted by both transducers')
    parser.add_argument('first', type=Path, help='transducer manifest')
    parser.add_argument('second', type=Path, help='transducer manifest')
    parser.add_argument('--bound', type=int, help='largest output overhang between the two runs')
    parser.add_argument('--out', type=Path, help='witness manifest (default: next to the first transducer)')
    parser.set_defaults(handler=handle_common)


def handle_functional(args) -> int:
    transducer = load(args, args.transducer, ManifestKind.TRANSDUCER)
    ops = TransducerOps.from_config(args.settings)
    bound = args.bound or ops.nonfunctionality_bound
    found = ops.nonfunctionality(transducer, bound)
    if found is None:
        print(f'no divergence within bound {bound}')
        return EXIT_UNKNOWN
    point, first, second = found
    core = OmegaCore()
    print(f'not functional: {core.format(point)} -> {core.format(first)} | {core.format(second)}')
    return EXIT_NEGATIVE


def handle_common(args) -> int:
    first = load(args, args.first, ManifestKind.TRANSDUCER)
    second = load(args, args.second, ManifestKind.TRANSDUCER)
    ops = TransducerOps.from_config(args.settings)
    bound = args.bound or ops.pair_bound
    result = ops.common_pair(first, second, bound)
    if not result.found:
        print(f'no common pair within bound, bound-hit={result.bound_hits}')
        if result.bound_hits or result.budget_exhausted:
            return EXIT_UNKNOWN
        return EXIT_NEGATIVE

    witness = RationalRelationWitness(result.input, result.first_output, (), ())
    out = args.out or default_output(args.first, 'common')
    write_manifest(args, out, witness, provenance_for(args, args.first, f'common --bound {bound}'))
    print(f'common pair: {OmegaCore().format(result.input)} -> {OmegaCore().format(result.first_output)}')
    return EXIT_OK
