"""`provenance`: check a derived manifest against the source it was built from."""

import logging
from pathlib import Path

from models.errors import ManifestError

from .common import EXIT_NEGATIVE, EXIT_OK, store_for

logger = logging.getLogger(__name__)


def register(subparsers):
    parser = subparsers.add_parser('provenance', help='Check the source hash recorded in a manifest')
    parser.add_argument('manifest', type=Path, help='manifest written by reduce, search, common or probe')
    parser.add_argument('source', type=Path, help='file the manifest claims to be derived from')
    parser.set_defaults(handler=handle)


def handle(args) -> int:
    store = store_for(args)
    _, manifest = store.load(args.manifest)
    if not args.source.is_file():
        raise ManifestError(f"Cannot read {args.source}")
    if store.verify_provenance(manifest, args.source):
        print(f'match: {manifest.provenance.command}')
        return EXIT_OK
    print(f'mismatch: {args.manifest} was not built from the current {args.source}')
    return EXIT_NEGATIVE
