"""Alphabets, finite words and ultimately periodic words."""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Tuple

from .errors import InvalidAlphabetError, InvalidLassoError, InvalidWordError

# A finite word is a tuple of symbol names; the empty tuple is ε.
Word = Tuple[str, ...]

EMPTY_WORD: Word = ()


@dataclass(frozen=True)
class Alphabet:
    """Ordered finite set of distinct symbols."""

    symbols: Tuple[str, ...]

    def __post_init__(self):
        if not self.symbols:
            raise InvalidAlphabetError("Alphabet must contain at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            raise InvalidAlphabetError(f"Duplicate symbols in alphabet: {self.symbols}")
        for symbol in self.symbols:
            if not isinstance(symbol, str) or not symbol:
                raise InvalidAlphabetError(f"Symbols must be nonempty strings, got {symbol!r}")

    @classmethod
    def of(cls, symbols: Iterable[str]) -> 'Alphabet':
        return cls(tuple(symbols))

    @cached_property
    def index(self) -> Dict[str, int]:
        """Position of each symbol in the stored order."""
        return {symbol: i for i, symbol in enumerate(self.symbols)}

    def __contains__(self, symbol: object) -> bool:
        return symbol in self.index

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def validate(self, word: Word) -> Word:
        """Return `word` unchanged, raising if a letter is not in the alphabet."""
        for letter in word:
            if letter not in self.index:
                raise InvalidWordError(f"Letter {letter!r} is not in alphabet {self.symbols}")
        return word

    def union(self, other: 'Alphabet') -> 'Alphabet':
        """Symbols of self followed by the new symbols of other."""
        extra = tuple(s for s in other.symbols if s not in self.index)
        return Alphabet(self.symbols + extra)

    def to_dict(self):
        return list(self.symbols)


@dataclass(frozen=True)
class LassoWord:
    """The infinite word prefix · loop^ω.

    Instances are plain pairs; use `services.omega_core.lasso_normalize`
    for the canonical representative.
    """

    prefix: Word
    loop: Word

    def __post_init__(self):
        if not self.loop:
            raise InvalidLassoError("Lasso loop must be nonempty")
        object.__setattr__(self, 'prefix', tuple(self.prefix))
        object.__setattr__(self, 'loop', tuple(self.loop))

    @property
    def letters(self) -> Tuple[str, ...]:
        """Distinct letters, in order of first occurrence."""
        return tuple(dict.fromkeys(self.prefix + self.loop))

    def letter(self, i: int) -> str:
        """0-based random access into the infinite word."""
        if i < len(self.prefix):
            return self.prefix[i]
        return self.loop[(i - len(self.prefix)) % len(self.loop)]

    def take(self, m: int) -> Word:
        """First m letters."""
        return tuple(self.letter(i) for i in range(m))

    def check_alphabet(self, alphabet: Alphabet) -> 'LassoWord':
        alphabet.validate(self.prefix)
        alphabet.validate(self.loop)
        return self

    def to_dict(self):
        return {'prefix': list(self.prefix), 'loop': list(self.loop)}

    @classmethod
    def from_dict(cls, data) -> 'LassoWord':
        return cls(tuple(data['prefix']), tuple(data['loop']))
