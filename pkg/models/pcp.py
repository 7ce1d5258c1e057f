"""ω-PCP instances restricted to a regular ω-language."""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Optional, Tuple

from .automaton import BuchiAutomaton
from .errors import InvalidInstanceError
from .words import Alphabet, Word


def index_alphabet(n: int) -> Alphabet:
    """The alphabet {1, ..., n} of index symbols."""
    return Alphabet(tuple(str(i) for i in range(1, n + 1)))


@dataclass(frozen=True)
class PcpRegInstance:
    """Two n-tuples of nonempty words plus a Büchi constraint over indices."""

    x_words: Tuple[Word, ...]
    y_words: Tuple[Word, ...]
    constraint: BuchiAutomaton

    def __post_init__(self):
        x_words = tuple(tuple(w) for w in self.x_words)
        y_words = tuple(tuple(w) for w in self.y_words)
        if not x_words:
            raise InvalidInstanceError("Instance needs at least one pair of words")
        if len(x_words) != len(y_words):
            raise InvalidInstanceError(
                f"x and y lists differ in length ({len(x_words)} vs {len(y_words)})")
        if any(not w for w in x_words + y_words):
            raise InvalidInstanceError("All words of an instance must be nonempty")
        if self.constraint.alphabet != index_alphabet(len(x_words)):
            raise InvalidInstanceError(
                f"Constraint alphabet must be exactly the indices 1..{len(x_words)}")
        object.__setattr__(self, 'x_words', x_words)
        object.__setattr__(self, 'y_words', y_words)

    @property
    def size(self) -> int:
        return len(self.x_words)

    @property
    def indices(self) -> Alphabet:
        return self.constraint.alphabet

    @cached_property
    def alphabet(self) -> Alphabet:
        """Γ, the letters of the words in order of first occurrence."""
        letters = dict.fromkeys(letter for word in self.x_words + self.y_words for letter in word)
        return Alphabet(tuple(letters))


class Side(str, Enum):
    """Which concatenation currently runs ahead."""

    X_AHEAD = 'x'
    Y_AHEAD = 'y'
    LEVEL = 'level'


@dataclass(frozen=True)
class Overhang:
    """Unmatched suffix of the longer of two concatenations."""

    side: Side = Side.LEVEL
    word: Word = ()

    def extend(self, top: Word, bottom: Word) -> Optional['Overhang']:
        """Append `top` to the X side and `bottom` to the Y side.

        Returns None when neither side is a prefix of the other anymore.
        """
        upper = (self.word if self.side is Side.X_AHEAD else ()) + tuple(top)
        lower = (self.word if self.side is Side.Y_AHEAD else ()) + tuple(bottom)
        common = min(len(upper), len(lower))
        if upper[:common] != lower[:common]:
            return None
        if len(upper) > common:
            return Overhang(Side.X_AHEAD, upper[common:])
        if len(lower) > common:
            return Overhang(Side.Y_AHEAD, lower[common:])
        return Overhang()

    def __len__(self) -> int:
        return len(self.word)


@dataclass(frozen=True)
class OverhangConfig:
    """Node of the ω-PCP configuration graph."""

    automaton_state: int
    overhang: Overhang

    @property
    def side(self) -> Side:
        return self.overhang.side
