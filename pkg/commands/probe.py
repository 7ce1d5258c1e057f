"""`probe` and `apply`: evaluate functional transducers at lasso points."""

import logging
from pathlib import Path

from models import ManifestKind, VerdictKind
from services.continuity import ContinuityService
from services.omega_core import OmegaCore
from services.transducer_ops import TransducerOps

from .common import EXIT_NEGATIVE, EXIT_OK, EXIT_UNKNOWN, emit, load, provenance_for, write_manifest

logger = logging.getLogger(__name__)

VERDICT_EXIT = {
    VerdictKind.CONTINUOUS_UP_TO: EXIT_OK,
    VerdictKind.DISCONTINUITY_EVIDENCE: EXIT_NEGATIVE,
    VerdictKind.UNKNOWN: EXIT_UNKNOWN,
}


def register(subparsers):
    parser = subparsers.add_parser('probe', help='Bounded continuity probe at a point')
    parser.add_argument('transducer', type=Path, help='transducer manifest')
    parser.add_argument('point', help='input lasso such as 1(2a)')
    parser.add_argument('--N', dest='depth', type=int, help='deepest output precision n to certify')
    parser.add_argument('--kmax', dest='k_max', type=int, help='largest input precision k to try')
    parser.add_argument('--witness-instance', type=Path,
                        help='pcp-instance the transducer was built from; enables discontinuity witnesses')
    parser.add_argument('--out', type=Path, help='write the verdict manifest here')
    parser.set_defaults(handler=handle_probe)

    parser = subparsers.add_parser('apply', help='Evaluate a functional transducer on a lasso')
    parser.add_argument('transducer', type=Path, help='transducer manifest')
    parser.add_argument('point', help='input lasso')
    parser.set_defaults(handler=handle_apply)


def handle_probe(args) -> int:
    transducer = load(args, args.transducer, ManifestKind.TRANSDUCER)
    core = OmegaCore()
    point = core.parse(args.point, transducer.input_alphabet)
    instance = None
    if args.witness_instance is not None:
        instance = load(args, args.witness_instance, ManifestKind.PCP_INSTANCE)
    verdict = ContinuityService.from_config(args.settings).probe(
        transducer, point, depth=args.depth, k_max=args.k_max, instance=instance)
    text = f'{verdict.describe()}\n{verdict.evidence_table()}'
    if verdict.counterexample is not None:
        text += f'\ncounterexample: {core.format(verdict.counterexample)}'
    emit(args, text, verdict)
    if args.out is not None:
        write_manifest(args, args.out, verdict, provenance_for(args, args.transducer, f'probe {args.point}'))
    return VERDICT_EXIT[verdict.kind]


def handle_apply(args) -> int:
    transducer = load(args, args.transducer, ManifestKind.TRANSDUCER)
    core = OmegaCore()
    point = core.parse(args.point, transducer.input_alphabet)
    image = TransducerOps.from_config(args.settings).apply(transducer, point)
    emit(args, core.format(image), image)
    return EXIT_OK
