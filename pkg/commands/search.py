"""`search` and `verify`: ω-PCP(Reg) solutions."""

import logging
from pathlib import Path

from models import ManifestKind, RationalRelationWitness
from services.omega_core import OmegaCore
from services.pcp_solver import PCPSolver

from .common import EXIT_NEGATIVE, EXIT_OK, default_output, emit, load, provenance_for, write_manifest

logger = logging.getLogger(__name__)


def register(subparsers):
    parser = subparsers.add_parser('search', help='Search for an ultimately periodic solution')
    parser.add_argument('instance', type=Path, help='pcp-instance manifest')
    parser.add_argument('--overhang-bound', type=int, help='largest overhang kept in the search')
    parser.add_argument('--out', type=Path, help='witness manifest (default: next to the instance)')
    parser.set_defaults(handler=handle_search)

    parser = subparsers.add_parser('verify', help='Check a claimed solution')
    parser.add_argument('instance', type=Path, help='pcp-instance manifest')
    parser.add_argument('sigma', help='index lasso such as 1(2)')
    parser.set_defaults(handler=handle_verify)


def handle_search(args) -> int:
    instance = load(args, args.instance, ManifestKind.PCP_INSTANCE)
    solver = PCPSolver.from_config(args.settings)
    bound = args.overhang_bound or solver.overhang_bound
    result = solver.search(instance, bound)
    if result.solution is None:
        message = f'no lasso solution within bound, bound-hit={result.bound_hits}'
        if result.budget_exhausted:
            message += ' (step budget exhausted)'
        print(message)
        return EXIT_NEGATIVE

    witness = RationalRelationWitness(
        input=result.solution,
        output=solver.concatenate(instance.x_words, result.solution),
        stem=(),
        cycle=(),
    )
    out = args.out or default_output(args.instance, 'witness')
    write_manifest(args, out, witness, provenance_for(args, args.instance, f'search --overhang-bound {bound}'))
    emit(args, f'solution: {OmegaCore().format(result.solution)}', result.solution)
    return EXIT_OK


def handle_verify(args) -> int:
    instance = load(args, args.instance, ManifestKind.PCP_INSTANCE)
    sigma = OmegaCore().parse(args.sigma, instance.indices)
    report = PCPSolver.from_config(args.settings).explain(instance, sigma)
    print(report.describe())
    return EXIT_OK if report.is_solution else EXIT_NEGATIVE
