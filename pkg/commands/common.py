"""Helpers shared by the command modules."""

import logging
from pathlib import Path
from typing import Optional

from models import Provenance
from services.serializer import ManifestStore

logger = logging.getLogger(__name__)

# Exit-code contract
EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2
EXIT_UNKNOWN = 3


def store_for(args) -> ManifestStore:
    return ManifestStore.from_config(args.settings)


def load(args, path: Path, kind):
    obj, _ = store_for(args).load(path, expected=[kind])
    return obj


def provenance_for(args, source: Path, command: str) -> Provenance:
    return store_for(args).provenance_for(source, command)


def default_output(source: Path, suffix: str) -> Path:
    """`<dir>/<stem>.<suffix>.json` next to the source manifest."""
    return source.with_name(f'{source.stem}.{suffix}.json')


def write_manifest(args, path: Path, obj, provenance: Optional[Provenance] = None) -> Path:
    return store_for(args).save(path, obj, provenance)


def emit(args, text: str, obj=None):
    """Print a result: plain text, or the object's manifest under --format json."""
    if args.format == 'json' and obj is not None:
        print(store_for(args).dumps(obj), end='')
    else:
        print(text)
