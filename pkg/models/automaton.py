"""Nondeterministic Büchi automaton model."""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Tuple

from .errors import InvalidAutomatonError
from .words import Alphabet

# (source, symbol, target)
Transition = Tuple[int, str, int]


@dataclass(frozen=True)
class BuchiAutomaton:
    """Büchi automaton over infinite words.

    States are the dense ids ``0..num_states-1``. Transitions are stored
    deduplicated and sorted by (source, symbol order, target) so iteration,
    witnesses and serialization are reproducible. ``state_names`` keeps the
    name map of states produced by constructions (products, projections).
    """

    num_states: int
    alphabet: Alphabet
    transitions: Tuple[Transition, ...]
    initial: int = 0
    accepting: FrozenSet[int] = field(default_factory=frozenset)
    state_names: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.num_states < 1:
            raise InvalidAutomatonError("Automaton needs at least one state")
        if not 0 <= self.initial < self.num_states:
            raise InvalidAutomatonError(f"Initial state {self.initial} is not declared")
        accepting = frozenset(self.accepting)
        if any(not 0 <= q < self.num_states for q in accepting):
            raise InvalidAutomatonError(f"Accepting states {sorted(accepting)} not all declared")
        for source, symbol, target in self.transitions:
            if not (0 <= source < self.num_states and 0 <= target < self.num_states):
                raise InvalidAutomatonError(f"Transition ({source}, {symbol}, {target}) uses undeclared states")
            if symbol not in self.alphabet:
                raise InvalidAutomatonError(f"Transition symbol {symbol!r} is not in the alphabet")
        order = self.alphabet.index
        transitions = tuple(sorted({tuple(t) for t in self.transitions}, key=lambda t: (t[0], order[t[1]], t[2])))
        if self.state_names is not None:
            names = tuple(self.state_names)
            if len(names) != self.num_states:
                raise InvalidAutomatonError("state_names must name every state")
            object.__setattr__(self, 'state_names', names)
        object.__setattr__(self, 'accepting', accepting)
        object.__setattr__(self, 'transitions', transitions)

    @property
    def states(self) -> range:
        return range(self.num_states)

    @cached_property
    def successors(self) -> Dict[int, List[Tuple[str, int]]]:
        """Outgoing (symbol, target) pairs per state, in stored order."""
        table: Dict[int, List[Tuple[str, int]]] = {q: [] for q in self.states}
        for source, symbol, target in self.transitions:
            table[source].append((symbol, target))
        return table

    def step(self, state: int, symbol: str) -> List[int]:
        return [target for letter, target in self.successors[state] if letter == symbol]

    def name_of(self, state: int) -> str:
        if self.state_names is None:
            return str(state)
        return self.state_names[state]

    def __repr__(self):
        return (f'<BuchiAutomaton states={self.num_states} '
                f'transitions={len(self.transitions)} accepting={len(self.accepting)}>')
