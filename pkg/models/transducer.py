"""Asynchronous Büchi transducer model and relation witnesses."""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Tuple

from .errors import InvalidTransducerError
from .words import Alphabet, LassoWord, Word

# (source, input word, output word, target)
Edge = Tuple[int, Word, Word, int]


@dataclass(frozen=True)
class BuchiTransducer:
    """Büchi transducer with finite-word labels on both tracks.

    Transition ids are positions in ``transitions``; unlike automata the
    order is kept as given, since witnesses refer to transitions by id.
    """

    num_states: int
    input_alphabet: Alphabet
    output_alphabet: Alphabet
    transitions: Tuple[Edge, ...]
    initial: int = 0
    accepting: FrozenSet[int] = field(default_factory=frozenset)
    state_names: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.num_states < 1:
            raise InvalidTransducerError("Transducer needs at least one state")
        if not 0 <= self.initial < self.num_states:
            raise InvalidTransducerError(f"Initial state {self.initial} is not declared")
        accepting = frozenset(self.accepting)
        if any(not 0 <= q < self.num_states for q in accepting):
            raise InvalidTransducerError(f"Accepting states {sorted(accepting)} not all declared")
        edges = []
        for source, word_in, word_out, target in self.transitions:
            if not (0 <= source < self.num_states and 0 <= target < self.num_states):
                raise InvalidTransducerError(f"Transition from {source} to {target} uses undeclared states")
            for letter in word_in:
                if letter not in self.input_alphabet:
                    raise InvalidTransducerError(f"Input letter {letter!r} is not in the input alphabet")
            for letter in word_out:
                if letter not in self.output_alphabet:
                    raise InvalidTransducerError(f"Output letter {letter!r} is not in the output alphabet")
            edges.append((source, tuple(word_in), tuple(word_out), target))
        if self.state_names is not None:
            names = tuple(self.state_names)
            if len(names) != self.num_states:
                raise InvalidTransducerError("state_names must name every state")
            object.__setattr__(self, 'state_names', names)
        object.__setattr__(self, 'accepting', accepting)
        object.__setattr__(self, 'transitions', tuple(edges))

    @property
    def states(self) -> range:
        return range(self.num_states)

    @cached_property
    def outgoing(self) -> Dict[int, List[int]]:
        """Transition ids leaving each state."""
        table: Dict[int, List[int]] = {q: [] for q in self.states}
        for tid, (source, _, _, _) in enumerate(self.transitions):
            table[source].append(tid)
        return table

    def swapped(self) -> 'BuchiTransducer':
        """Same machine with input and output tracks exchanged."""
        return BuchiTransducer(
            num_states=self.num_states,
            input_alphabet=self.output_alphabet,
            output_alphabet=self.input_alphabet,
            transitions=tuple((p, v, u, q) for p, u, v, q in self.transitions),
            initial=self.initial,
            accepting=self.accepting,
            state_names=self.state_names,
        )

    def __repr__(self):
        return (f'<BuchiTransducer states={self.num_states} '
                f'transitions={len(self.transitions)} accepting={len(self.accepting)}>')


@dataclass(frozen=True)
class RationalRelationWitness:
    """An accepting lasso run together with the pair of words it reads and writes.

    A witness with an empty cycle carries no run; search commands use it
    for a pair of words established by other means.
    """

    input: LassoWord
    output: LassoWord
    stem: Tuple[int, ...]
    cycle: Tuple[int, ...]

    def to_dict(self):
        return {
            'input': self.input.to_dict(),
            'output': self.output.to_dict(),
            'run': {'stem': list(self.stem), 'cycle': list(self.cycle)} if self.cycle else None,
        }
