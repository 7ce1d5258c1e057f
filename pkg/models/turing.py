"""Nondeterministic single-tape Turing machines on a one-way tape."""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, List, Tuple

from .errors import InvalidMachineError
from .words import Alphabet, Word

SEPARATOR = '#'


class Move(str, Enum):
    L = 'L'
    R = 'R'
    S = 'S'


@dataclass(frozen=True, order=True)
class Rule:
    """(state, read) -> (next_state, write, move)."""

    state: str
    read: str
    next_state: str
    write: str
    move: Move

    def to_list(self):
        return [self.state, self.read, self.next_state, self.write, self.move.value]


@dataclass(frozen=True)
class TuringMachine:
    states: Tuple[str, ...]
    input_alphabet: Alphabet
    tape_alphabet: Alphabet
    blank: str
    initial: str
    rules: Tuple[Rule, ...]

    def __post_init__(self):
        states = tuple(self.states)
        if not states or len(set(states)) != len(states):
            raise InvalidMachineError("Machine states must be nonempty and distinct")
        if self.initial not in states:
            raise InvalidMachineError(f"Initial state {self.initial!r} is not declared")
        if self.blank not in self.tape_alphabet:
            raise InvalidMachineError(f"Blank {self.blank!r} is not a tape symbol")
        if self.blank in self.input_alphabet:
            raise InvalidMachineError("Blank must not be an input symbol")
        for symbol in self.input_alphabet:
            if symbol not in self.tape_alphabet:
                raise InvalidMachineError(f"Input symbol {symbol!r} missing from the tape alphabet")
        clashes = (set(states) & set(self.tape_alphabet)) | ({SEPARATOR} & (set(states) | set(self.tape_alphabet)))
        if clashes:
            raise InvalidMachineError(f"States, tape symbols and {SEPARATOR!r} must be disjoint: {sorted(clashes)}")
        rules = []
        for rule in self.rules:
            rule = Rule(rule.state, rule.read, rule.next_state, rule.write, Move(rule.move))
            if rule.state not in states or rule.next_state not in states:
                raise InvalidMachineError(f"Rule {rule.to_list()} uses an undeclared state")
            if rule.read not in self.tape_alphabet or rule.write not in self.tape_alphabet:
                raise InvalidMachineError(f"Rule {rule.to_list()} uses an undeclared tape symbol")
            rules.append(rule)
        state_order = {q: i for i, q in enumerate(states)}
        tape_order = self.tape_alphabet.index
        rules = sorted(set(rules), key=lambda r: (state_order[r.state], tape_order[r.read],
                                                  state_order[r.next_state], tape_order[r.write],
                                                  r.move.value))
        object.__setattr__(self, 'states', states)
        object.__setattr__(self, 'rules', tuple(rules))

    @cached_property
    def table(self) -> Dict[Tuple[str, str], List[Rule]]:
        """Rules grouped by (state, scanned symbol)."""
        grouped: Dict[Tuple[str, str], List[Rule]] = {}
        for rule in self.rules:
            grouped.setdefault((rule.state, rule.read), []).append(rule)
        return grouped

    def rules_for(self, state: str, symbol: str) -> List[Rule]:
        return self.table.get((state, symbol), [])

    def initial_configuration(self) -> 'TmConfiguration':
        return TmConfiguration.make((), 0, self.initial, self.blank)


@dataclass(frozen=True)
class TmConfiguration:
    """Visited tape segment, head position and state.

    Canonical form: the tape is extended with blanks up to the head and
    trailing blanks right of the head are dropped.
    """

    tape: Word
    head: int
    state: str

    @classmethod
    def make(cls, tape: Iterable[str], head: int, state: str, blank: str) -> 'TmConfiguration':
        cells = list(tape)
        if head < 0:
            raise InvalidMachineError("Head moved off the left end of the tape")
        while len(cells) <= head:
            cells.append(blank)
        while len(cells) > head + 1 and cells[-1] == blank:
            cells.pop()
        return cls(tuple(cells), head, state)

    @property
    def scanned(self) -> str:
        return self.tape[self.head]

    def encode(self) -> Word:
        """Tape with the state written immediately left of the scanned cell."""
        return self.tape[:self.head] + (self.state,) + self.tape[self.head:]

    def __str__(self):
        return ' '.join(self.encode())


@dataclass(frozen=True)
class ConfigurationLasso:
    """Stem followed by a repeated cycle of configurations."""

    stem: Tuple[TmConfiguration, ...]
    cycle: Tuple[TmConfiguration, ...]

    def __iter__(self):
        return iter(self.stem + self.cycle)
