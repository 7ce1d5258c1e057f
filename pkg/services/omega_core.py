"""Ultimately periodic words and the decidable algebra of Büchi automata."""

import logging
import math
from collections import deque
from itertools import product
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, Iterator, List, Optional, Set, Tuple

from models import Alphabet, BuchiAutomaton, LassoWord, Word
from models.errors import (
    AlphabetMismatchError,
    InvalidBoundError,
    InvalidLassoError,
    InvalidWordError,
    LassoSyntaxError,
)

from .graph_search import explore, find_lasso, live_nodes

logger = logging.getLogger(__name__)

EPSILON_MARKS = ('ε', '')


# ---------------------------------------------------------------------------
# Lasso words
# ---------------------------------------------------------------------------

def smallest_period(word: Word) -> int:
    """Smallest p such that word[i] == word[i + p] for all valid i."""
    failure = [0] * len(word)
    k = 0
    for i in range(1, len(word)):
        while k and word[i] != word[k]:
            k = failure[k - 1]
        if word[i] == word[k]:
            k += 1
        failure[i] = k
    return len(word) - (failure[-1] if word else 0)


def primitive_root(word: Word) -> Word:
    period = smallest_period(word)
    if len(word) % period == 0:
        return word[:period]
    return word


def lasso_normalize(prefix: Iterable[str], loop: Iterable[str]) -> LassoWord:
    """Canonical representative: primitive loop, shortest prefix."""
    prefix = tuple(prefix)
    loop = tuple(loop)
    if not loop:
        raise InvalidLassoError("Lasso loop must be nonempty")
    loop = primitive_root(loop)
    while prefix and prefix[-1] == loop[-1]:
        prefix = prefix[:-1]
        loop = loop[-1:] + loop[:-1]
    return LassoWord(prefix, loop)


def canonical(word: LassoWord) -> LassoWord:
    return lasso_normalize(word.prefix, word.loop)


def comparison_bound(w1: LassoWord, w2: LassoWord) -> int:
    """Length after which two lassos agree forever if they agree so far."""
    return max(len(w1.prefix), len(w2.prefix)) + math.lcm(len(w1.loop), len(w2.loop))


def lasso_equal(w1: LassoWord, w2: LassoWord, alphabet: Optional[Alphabet] = None) -> bool:
    """True iff both lassos denote the same infinite word."""
    if alphabet is not None:
        for word in (w1, w2):
            try:
                word.check_alphabet(alphabet)
            except InvalidWordError as exc:
                raise AlphabetMismatchError(str(exc)) from exc
    return all(w1.letter(i) == w2.letter(i) for i in range(comparison_bound(w1, w2)))


def first_difference(w1: LassoWord, w2: LassoWord) -> Optional[int]:
    """0-based position of the first differing letter, None if equal."""
    for i in range(comparison_bound(w1, w2)):
        if w1.letter(i) != w2.letter(i):
            return i
    return None


def lasso_concat(head: Word, word: LassoWord) -> LassoWord:
    return lasso_normalize(tuple(head) + word.prefix, word.loop)


def lasso_project(word: LassoWord, keep: Iterable[str]) -> Optional[LassoWord]:
    """Erase letters outside `keep`; None when the projection is finite."""
    keep = set(keep)
    loop = tuple(letter for letter in word.loop if letter in keep)
    if not loop:
        return None
    prefix = tuple(letter for letter in word.prefix if letter in keep)
    return lasso_normalize(prefix, loop)


def _tokenize(text: str, alphabet: Optional[Alphabet]) -> Word:
    if '.' in text:
        return tuple(piece for piece in text.split('.') if piece)
    if alphabet is None or all(len(s) == 1 for s in alphabet):
        return tuple(text)
    symbols = sorted(alphabet.symbols, key=len, reverse=True)
    letters = []
    position = 0
    while position < len(text):
        match = next((s for s in symbols if text.startswith(s, position)), None)
        if match is None:
            raise LassoSyntaxError(f"Cannot split {text[position:]!r} into alphabet symbols")
        letters.append(match)
        position += len(match)
    return tuple(letters)


def lasso_parse(text: str, alphabet: Optional[Alphabet] = None) -> LassoWord:
    """Parse `prefix(loop)`; symbols are dot-separated when names are long."""
    text = text.strip()
    if text.count('(') != 1 or not text.endswith(')'):
        raise LassoSyntaxError(f"Expected prefix(loop), got {text!r}")
    head, _, rest = text.partition('(')
    body = rest[:-1]
    if ')' in body:
        raise LassoSyntaxError(f"Unbalanced parentheses in {text!r}")
    prefix = () if head.strip() in EPSILON_MARKS else _tokenize(head.strip(), alphabet)
    loop = _tokenize(body.strip(), alphabet)
    if not loop:
        raise LassoSyntaxError(f"Empty loop in {text!r}")
    word = LassoWord(prefix, loop)
    if alphabet is not None:
        word.check_alphabet(alphabet)
    return word


def format_word(word: Word, dotted: Optional[bool] = None) -> str:
    if dotted is None:
        dotted = any(len(letter) > 1 for letter in word)
    return ('.' if dotted else '').join(word)


def lasso_format(word: LassoWord) -> str:
    dotted = any(len(letter) > 1 for letter in word.prefix + word.loop)
    return f'{format_word(word.prefix, dotted)}({format_word(word.loop, dotted)})'


def enumerate_lassos(alphabet: Alphabet, max_prefix: int, max_loop: int) -> Iterator[LassoWord]:
    """Distinct canonical lassos with |prefix| <= max_prefix, |loop| <= max_loop."""
    seen: Set[LassoWord] = set()
    for loop_len in range(1, max_loop + 1):
        for prefix_len in range(max_prefix + 1):
            for prefix in product(alphabet.symbols, repeat=prefix_len):
                for loop in product(alphabet.symbols, repeat=loop_len):
                    word = lasso_normalize(prefix, loop)
                    if word not in seen:
                        seen.add(word)
                        yield word


# ---------------------------------------------------------------------------
# Büchi automata
# ---------------------------------------------------------------------------

class AutomatonBuilder:
    """Densifies hashable state keys in discovery order."""

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self.ids: Dict[Hashable, int] = {}
        self.transitions: List[Tuple[int, str, int]] = []
        self.accepting: Set[int] = set()

    def state(self, key: Hashable) -> int:
        if key not in self.ids:
            self.ids[key] = len(self.ids)
        return self.ids[key]

    def add(self, source: Hashable, symbol: str, target: Hashable):
        self.transitions.append((self.state(source), symbol, self.state(target)))

    def accept(self, key: Hashable):
        self.accepting.add(self.state(key))

    def build(self, initial: Hashable, namer: Callable[[Hashable], str] = str) -> BuchiAutomaton:
        initial_id = self.state(initial)
        names = [''] * len(self.ids)
        for key, i in self.ids.items():
            names[i] = namer(key)
        return BuchiAutomaton(
            num_states=len(self.ids),
            alphabet=self.alphabet,
            transitions=tuple(self.transitions),
            initial=initial_id,
            accepting=frozenset(self.accepting),
            state_names=tuple(names),
        )


def _lasso_successor(word: LassoWord, position: int) -> int:
    position += 1
    if position == len(word.prefix) + len(word.loop):
        return len(word.prefix)
    return position


def nba_accepts_lasso(automaton: BuchiAutomaton, word: LassoWord) -> bool:
    """Membership of prefix·loop^ω in L(automaton).

    Searches the product of the automaton with the lasso's shape for a
    reachable accepting node that lies on a cycle.
    """
    try:
        word.check_alphabet(automaton.alphabet)
    except InvalidWordError as exc:
        raise AlphabetMismatchError(str(exc)) from exc
    if not automaton.accepting:
        return False

    def successors(node):
        state, position = node
        letter = word.letter(position)
        nxt = _lasso_successor(word, position)
        for symbol, target in automaton.successors[state]:
            if symbol == letter:
                yield (target, nxt)

    reachable = _closure([(automaton.initial, 0)], successors)
    for node in reachable:
        if node[0] in automaton.accepting and node in _closure(list(successors(node)), successors):
            return True
    return False


def _closure(sources, successors) -> Dict:
    seen = dict.fromkeys(sources)
    queue = deque(seen)
    while queue:
        node = queue.popleft()
        for nxt in successors(node):
            if nxt not in seen:
                seen[nxt] = None
                queue.append(nxt)
    return seen


def nba_is_empty(automaton: BuchiAutomaton) -> Optional[LassoWord]:
    """None if L(automaton) is empty, otherwise an accepted lasso."""
    graph = explore(automaton.initial, lambda q: automaton.successors[q])
    lasso = find_lasso(graph, node_marks=[lambda q: q in automaton.accepting])
    if lasso is None:
        return None
    return lasso_normalize(lasso.stem_labels, lasso.cycle_labels)


def _require_same_alphabet(a1: BuchiAutomaton, a2: BuchiAutomaton):
    if a1.alphabet != a2.alphabet:
        raise AlphabetMismatchError(
            f"Alphabets differ: {a1.alphabet.symbols} vs {a2.alphabet.symbols}")


def nba_product_intersection(a1: BuchiAutomaton, a2: BuchiAutomaton) -> BuchiAutomaton:
    """Flag-tracking product accepting L(a1) ∩ L(a2).

    The flag waits for a1's accepting set (0), then for a2's (1); a node
    (q1, q2, 0) with q1 accepting closes a round.
    """
    _require_same_alphabet(a1, a2)
    builder = AutomatonBuilder(a1.alphabet)
    start = (a1.initial, a2.initial, 0)

    def successors(node):
        q1, q2, flag = node
        if flag == 0 and q1 in a1.accepting:
            flag = 1
        elif flag == 1 and q2 in a2.accepting:
            flag = 0
        for symbol, p1 in a1.successors[q1]:
            for p2 in a2.step(q2, symbol):
                yield symbol, (p1, p2, flag)

    graph = explore(start, successors)
    for node in graph.order:
        builder.state(node)
        if node[2] == 0 and node[0] in a1.accepting:
            builder.accept(node)
        for symbol, target in graph.edges[node]:
            builder.add(node, symbol, target)
    product_automaton = builder.build(
        start, namer=lambda n: f'({a1.name_of(n[0])},{a2.name_of(n[1])},{n[2]})')
    logger.debug(f"Product of {a1!r} and {a2!r} has {product_automaton.num_states} states")
    return product_automaton


def nba_trim(automaton: BuchiAutomaton) -> BuchiAutomaton:
    """Keep the states that are reachable and can reach an accepting cycle."""
    graph = explore(automaton.initial, lambda q: automaton.successors[q])
    live = live_nodes(graph, node_marks=[lambda q: q in automaton.accepting])
    builder = AutomatonBuilder(automaton.alphabet)
    if automaton.initial not in live:
        return builder.build(automaton.initial, namer=automaton.name_of)
    for state in graph.order:
        if state not in live:
            continue
        builder.state(state)
        if state in automaton.accepting:
            builder.accept(state)
        for symbol, target in graph.edges[state]:
            if target in live:
                builder.add(state, symbol, target)
    return builder.build(automaton.initial, namer=automaton.name_of)


def prefix_set(automaton: BuchiAutomaton, m: int) -> FrozenSet[Word]:
    """All length-m prefixes of words in L(automaton)."""
    if m < 1:
        raise InvalidBoundError(f"Prefix length must be at least 1, got {m}")
    trimmed = nba_trim(automaton)
    if not trimmed.transitions:
        return frozenset()
    layer: Dict[int, Set[Word]] = {trimmed.initial: {()}}
    for _ in range(m):
        nxt: Dict[int, Set[Word]] = {}
        for state, words in layer.items():
            for symbol, target in trimmed.successors[state]:
                bucket = nxt.setdefault(target, set())
                bucket.update(word + (symbol,) for word in words)
        layer = nxt
    return frozenset(word for words in layer.values() for word in words)


def universal_automaton(alphabet: Alphabet) -> BuchiAutomaton:
    return BuchiAutomaton(1, alphabet, tuple((0, s, 0) for s in alphabet), 0, frozenset({0}))


class OmegaCore:
    """Lasso words and the decision procedures for Büchi automata."""

    def parse(self, text: str, alphabet: Optional[Alphabet] = None) -> LassoWord:
        return lasso_parse(text, alphabet)

    def format(self, word: LassoWord) -> str:
        return lasso_format(word)

    def equal(self, w1: LassoWord, w2: LassoWord) -> bool:
        return lasso_equal(w1, w2)

    def accepts(self, automaton: BuchiAutomaton, word: LassoWord) -> bool:
        return nba_accepts_lasso(automaton, word)

    def witness(self, automaton: BuchiAutomaton) -> Optional[LassoWord]:
        """An accepted lasso, or None for an empty language."""
        witness = nba_is_empty(automaton)
        logger.info(f"Emptiness check on {automaton!r}: "
                    f"{'empty' if witness is None else 'witness ' + lasso_format(witness)}")
        return witness

    def intersect(self, a1: BuchiAutomaton, a2: BuchiAutomaton) -> BuchiAutomaton:
        return nba_product_intersection(a1, a2)

    def trim(self, automaton: BuchiAutomaton) -> BuchiAutomaton:
        return nba_trim(automaton)

    def prefixes(self, automaton: BuchiAutomaton, m: int) -> FrozenSet[Word]:
        return prefix_set(automaton, m)
