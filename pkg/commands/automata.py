"""`nba` subcommands: emptiness, membership, HOA exchange and random automata."""

import logging
from pathlib import Path

from models import Alphabet, ManifestKind
from models.errors import ManifestError
from services.hoa import HoaCodec
from services.omega_core import OmegaCore
from services.sampling import RandomSampler

from .common import EXIT_NEGATIVE, EXIT_OK, emit, load, write_manifest

logger = logging.getLogger(__name__)


def register(subparsers):
    nba = subparsers.add_parser('nba', help='Büchi automaton utilities')
    actions = nba.add_subparsers(dest='nba_command', required=True)

    parser = actions.add_parser('empty', help='Emptiness check with a witness lasso')
    parser.add_argument('automaton', type=Path)
    parser.set_defaults(handler=handle_empty)

    parser = actions.add_parser('accepts', help='Membership of a lasso word')
    parser.add_argument('automaton', type=Path)
    parser.add_argument('word', help='lasso such as a(ba)')
    parser.set_defaults(handler=handle_accepts)

    parser = actions.add_parser('export-hoa', help='Write the automaton in HOA format')
    parser.add_argument('automaton', type=Path)
    parser.add_argument('--out', type=Path, help='HOA file (default: standard output)')
    parser.set_defaults(handler=handle_export)

    parser = actions.add_parser('import-hoa', help='Read a state-based Büchi automaton from HOA')
    parser.add_argument('hoa', type=Path)
    parser.add_argument('--out', type=Path, required=True, help='automaton manifest to write')
    parser.set_defaults(handler=handle_import)

    parser = actions.add_parser('random', help='Seeded random automaton')
    parser.add_argument('--states', type=int, default=4)
    parser.add_argument('--alphabet', default='a,b', help='comma-separated symbols')
    parser.add_argument('--out', type=Path, required=True)
    parser.set_defaults(handler=handle_random)


def handle_empty(args) -> int:
    automaton = load(args, args.automaton, ManifestKind.AUTOMATON)
    core = OmegaCore()
    witness = core.witness(automaton)
    if witness is None:
        print('empty')
        return EXIT_NEGATIVE
    emit(args, f'nonempty, witness {core.format(witness)}', witness)
    return EXIT_OK


def handle_accepts(args) -> int:
    automaton = load(args, args.automaton, ManifestKind.AUTOMATON)
    core = OmegaCore()
    accepted = core.accepts(automaton, core.parse(args.word, automaton.alphabet))
    print('accepted' if accepted else 'rejected')
    return EXIT_OK if accepted else EXIT_NEGATIVE


def handle_export(args) -> int:
    automaton = load(args, args.automaton, ManifestKind.AUTOMATON)
    text = HoaCodec().export(automaton, name=args.automaton.stem)
    if args.out is None:
        print(text, end='')
    else:
        args.out.write_text(text, encoding='utf-8')
        print(args.out)
    return EXIT_OK


def handle_import(args) -> int:
    try:
        text = args.hoa.read_text(encoding='utf-8')
    except OSError as exc:
        raise ManifestError(f"Cannot read {args.hoa}: {exc.strerror}") from exc
    write_manifest(args, args.out, HoaCodec().parse(text))
    print(args.out)
    return EXIT_OK


def handle_random(args) -> int:
    alphabet = Alphabet.of(s.strip() for s in args.alphabet.split(',') if s.strip())
    automaton = RandomSampler.from_config(args.settings).automaton(args.states, alphabet)
    write_manifest(args, args.out, automaton)
    print(args.out)
    return EXIT_OK
