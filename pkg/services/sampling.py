"""Seeded random automata and lasso words."""

import logging
from typing import Optional

import numpy as np

from models import Alphabet, BuchiAutomaton, LassoWord

from .omega_core import lasso_normalize

logger = logging.getLogger(__name__)


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_automaton(
    rng: np.random.Generator,
    num_states: int,
    alphabet: Alphabet,
    edge_probability: float = 0.35,
    accept_probability: float = 0.3,
) -> BuchiAutomaton:
    """Automaton with independent coin flips for every (p, a, q) and every accepting state."""
    edges = rng.random((num_states, len(alphabet), num_states)) < edge_probability
    transitions = tuple(
        (int(p), alphabet.symbols[int(a)], int(q)) for p, a, q in np.argwhere(edges)
    )
    accepting = frozenset(int(q) for q in np.flatnonzero(rng.random(num_states) < accept_probability))
    return BuchiAutomaton(num_states, alphabet, transitions, 0, accepting)


def random_lasso(
    rng: np.random.Generator,
    alphabet: Alphabet,
    max_prefix: int = 4,
    max_loop: int = 4,
) -> LassoWord:
    prefix_len = int(rng.integers(0, max_prefix + 1))
    loop_len = int(rng.integers(1, max_loop + 1))
    letters = rng.integers(0, len(alphabet), size=prefix_len + loop_len)
    word = tuple(alphabet.symbols[int(i)] for i in letters)
    return lasso_normalize(word[:prefix_len], word[prefix_len:])


class RandomSampler:
    """Seeded source of random automata and lasso words."""

    def __init__(self, seed: Optional[int] = None):
        """Initialize the generator from `seed`."""
        self.seed = seed
        self.rng = make_rng(seed)

    @classmethod
    def from_config(cls, settings) -> 'RandomSampler':
        return cls(settings.RANDOM_SEED)

    def automaton(self, num_states: int, alphabet: Alphabet, edge_probability: float = 0.35,
                  accept_probability: float = 0.3) -> BuchiAutomaton:
        automaton = random_automaton(self.rng, num_states, alphabet, edge_probability, accept_probability)
        logger.debug(f"Sampled automaton with {len(automaton.transitions)} transitions (seed {self.seed})")
        return automaton

    def lasso(self, alphabet: Alphabet, max_prefix: int = 4, max_loop: int = 4) -> LassoWord:
        return random_lasso(self.rng, alphabet, max_prefix, max_loop)
