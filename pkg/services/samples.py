"""Catalog of small automata, instances, machines and transducers.

Used by the tests, by ``scripts/build_instances.py`` and by the CLI's
``nba random`` command.
"""

from typing import Dict

from models import Alphabet, BuchiAutomaton, BuchiTransducer, PcpRegInstance, Rule, TuringMachine, index_alphabet

from .omega_core import universal_automaton

AB = Alphabet(('a', 'b'))
BLANK = '_'

I1_X = (('a', 'b'), ('b',))
I1_Y = (('a',), ('b', 'b'))


def infinitely_many(alphabet: Alphabet, letter: str) -> BuchiAutomaton:
    """Words with infinitely many occurrences of `letter`."""
    transitions = [(p, s, 1 if s == letter else 0) for p in (0, 1) for s in alphabet]
    return BuchiAutomaton(2, alphabet, tuple(transitions), 0, frozenset({1}))


def only_power(alphabet: Alphabet, letter: str) -> BuchiAutomaton:
    """The single word letter^ω."""
    return BuchiAutomaton(1, alphabet, ((0, letter, 0),), 0, frozenset({0}))


def i1_instance(constraint: str = 'universal') -> PcpRegInstance:
    """x = (ab, b), y = (a, bb) under one of three constraints."""
    indices = index_alphabet(2)
    automata = {
        'universal': lambda: universal_automaton(indices),
        'infinitely-many-1': lambda: infinitely_many(indices, '1'),
        'only-1': lambda: only_power(indices, '1'),
    }
    return PcpRegInstance(I1_X, I1_Y, automata[constraint]())


def mismatch_instance() -> PcpRegInstance:
    """x = (a), y = (b): first letters never agree."""
    return PcpRegInstance((('a',),), (('b',),), only_power(index_alphabet(1), '1'))


def suite_instances() -> Dict[str, PcpRegInstance]:
    return {
        'i1': i1_instance('universal'),
        'i1-inf1': i1_instance('infinitely-many-1'),
        'i1-only1': i1_instance('only-1'),
        'mismatch': mismatch_instance(),
    }


def _machine(states, rules) -> TuringMachine:
    return TuringMachine(
        states=tuple(states),
        input_alphabet=Alphabet(('X',)),
        tape_alphabet=Alphabet((BLANK, 'X')),
        blank=BLANK,
        initial='q0',
        rules=tuple(Rule(*rule) for rule in rules),
    )


def m_rec() -> TuringMachine:
    """Alternates q0/q1 on a single cell forever."""
    return _machine(('q0', 'q1'), [
        ('q0', BLANK, 'q1', 'X', 'S'),
        ('q1', 'X', 'q0', 'X', 'S'),
        ('q0', 'X', 'q1', 'X', 'S'),
    ])


def m_halt() -> TuringMachine:
    return _machine(('q0',), [])


def m_right() -> TuringMachine:
    """Writes X and moves right forever, so every configuration is new."""
    return _machine(('q0',), [('q0', BLANK, 'q0', 'X', 'R')])


def sample_machines() -> Dict[str, TuringMachine]:
    return {'m_rec': m_rec(), 'm_halt': m_halt(), 'm_right': m_right()}


def identity_transducer(alphabet: Alphabet = AB) -> BuchiTransducer:
    return BuchiTransducer(1, alphabet, alphabet,
                           tuple((0, (s,), (s,), 0) for s in alphabet), 0, frozenset({0}))


def doubling_transducer(alphabet: Alphabet = AB) -> BuchiTransducer:
    return BuchiTransducer(1, alphabet, alphabet,
                           tuple((0, (s,), (s, s), 0) for s in alphabet), 0, frozenset({0}))


def two_branch_transducer() -> BuchiTransducer:
    """Maps a^ω to b^ω or to c^ω, chosen on the first letter."""
    return BuchiTransducer(
        num_states=3,
        input_alphabet=Alphabet(('a',)),
        output_alphabet=Alphabet(('b', 'c')),
        transitions=(
            (0, ('a',), (), 1),
            (1, ('a',), ('b',), 1),
            (0, ('a',), (), 2),
            (2, ('a',), ('c',), 2),
        ),
        initial=0,
        accepting=frozenset({1, 2}),
        state_names=('start', 'to_b', 'to_c'),
    )
