"""Domain models for the ω-PCP toolkit."""

from .words import Alphabet, LassoWord, Word, EMPTY_WORD
from .automaton import BuchiAutomaton
from .transducer import BuchiTransducer, RationalRelationWitness
from .pcp import PcpRegInstance, Overhang, OverhangConfig, Side, index_alphabet
from .turing import ConfigurationLasso, Move, Rule, TmConfiguration, TuringMachine, SEPARATOR
from .continuity import BallPrefix, ContinuityVerdict, VerdictKind
from .manifest import Manifest, ManifestKind, Provenance

__all__ = [
    'Alphabet', 'LassoWord', 'Word', 'EMPTY_WORD',
    'BuchiAutomaton',
    'BuchiTransducer', 'RationalRelationWitness',
    'PcpRegInstance', 'Overhang', 'OverhangConfig', 'Side', 'index_alphabet',
    'ConfigurationLasso', 'Move', 'Rule', 'TmConfiguration', 'TuringMachine', 'SEPARATOR',
    'BallPrefix', 'ContinuityVerdict', 'VerdictKind',
    'Manifest', 'ManifestKind', 'Provenance',
]
