"""Command-line subcommands; each module registers its parsers on the root parser."""

from . import automata, machines, manifests, probe, reduce, relations, search

COMMAND_MODULES = (reduce, search, probe, relations, machines, automata, manifests)


def register_all(subparsers):
    for module in COMMAND_MODULES:
        module.register(subparsers)


__all__ = ['register_all', 'COMMAND_MODULES']
