"""`reduce`: run one of the four constructions on a manifest."""

import logging
from pathlib import Path

from services.reductions import ReductionService

from .common import EXIT_OK, default_output, load, provenance_for, write_manifest

logger = logging.getLogger(__name__)


def register(subparsers):
    parser = subparsers.add_parser('reduce', help='Build a reduction target from a manifest')
    parser.add_argument('source', type=Path, help='turing-machine or pcp-instance manifest')
    parser.add_argument('--target', required=True, choices=sorted(ReductionService.TARGETS))
    parser.add_argument('--out', type=Path, help='output manifest (default: next to the source)')
    parser.set_defaults(handler=handle)


def handle(args) -> int:
    reductions = ReductionService()
    source = load(args, args.source, reductions.source_kind(args.target))
    provenance = provenance_for(args, args.source, f'reduce --target {args.target}')
    result = reductions.reduce(args.target, source)
    out = args.out or default_output(args.source, args.target)

    if args.target == 'transducers':
        first, second = result
        stem = out.with_suffix('') if out.suffix == '.json' else out
        paths = [write_manifest(args, stem.with_name(f'{stem.name}.x.json'), first, provenance),
                 write_manifest(args, stem.with_name(f'{stem.name}.y.json'), second, provenance)]
    else:
        paths = [write_manifest(args, out, result, provenance)]

    for path in paths:
        print(path)
    logger.info(f"reduce --target {args.target} wrote {len(paths)} manifest(s)")
    return EXIT_OK
