"""Büchi transducers: projections, input restriction, evaluation and pair searches.

A relation pair (x, y) belongs to R(T) only when both words are infinite, so
every construction here tracks whether a run keeps consuming input and keeps
producing output, next to the Büchi condition itself.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Hashable, List, Optional, Set, Tuple

from models import (
    Alphabet,
    BuchiAutomaton,
    BuchiTransducer,
    LassoWord,
    Overhang,
    RationalRelationWitness,
    Word,
)
from models.errors import (
    AlphabetMismatchError,
    InvalidWordError,
    NotInDomainError,
    SearchInvariantError,
)

from .graph_search import explore, find_lasso
from .omega_core import AutomatonBuilder, lasso_equal, lasso_normalize, nba_accepts_lasso

logger = logging.getLogger(__name__)


class TransducerBuilder:
    """Densifies hashable state keys of a transducer construction."""

    def __init__(self, input_alphabet: Alphabet, output_alphabet: Alphabet):
        self.input_alphabet = input_alphabet
        self.output_alphabet = output_alphabet
        self.ids: Dict[Hashable, int] = {}
        self.transitions: List[Tuple[int, Word, Word, int]] = []
        self.accepting: Set[int] = set()

    def state(self, key: Hashable) -> int:
        if key not in self.ids:
            self.ids[key] = len(self.ids)
        return self.ids[key]

    def add(self, source: Hashable, word_in: Word, word_out: Word, target: Hashable) -> int:
        self.transitions.append((self.state(source), tuple(word_in), tuple(word_out), self.state(target)))
        return len(self.transitions) - 1

    def accept(self, key: Hashable):
        self.accepting.add(self.state(key))

    def build(self, initial: Hashable, namer: Callable[[Hashable], str] = str) -> BuchiTransducer:
        initial_id = self.state(initial)
        names = [''] * len(self.ids)
        for key, i in self.ids.items():
            names[i] = namer(key)
        return BuchiTransducer(
            num_states=len(self.ids),
            input_alphabet=self.input_alphabet,
            output_alphabet=self.output_alphabet,
            transitions=tuple(self.transitions),
            initial=initial_id,
            accepting=frozenset(self.accepting),
            state_names=tuple(names),
        )


def transducer_name(transducer: BuchiTransducer, state: int) -> str:
    if transducer.state_names is None:
        return str(state)
    return transducer.state_names[state]


def normalize_input(transducer: BuchiTransducer) -> BuchiTransducer:
    """Equivalent transducer whose transitions read at most one input letter.

    Longer input labels become chains through fresh states; the whole output
    word is written on the first step of the chain.
    """
    builder = TransducerBuilder(transducer.input_alphabet, transducer.output_alphabet)
    for state in transducer.states:
        builder.state(('q', state))
        if state in transducer.accepting:
            builder.accept(('q', state))
    for tid, (source, word_in, word_out, target) in enumerate(transducer.transitions):
        if len(word_in) <= 1:
            builder.add(('q', source), word_in, word_out, ('q', target))
            continue
        chain = [('q', source)] + [('chain', tid, j) for j in range(1, len(word_in))] + [('q', target)]
        for j, letter in enumerate(word_in):
            builder.add(chain[j], (letter,), word_out if j == 0 else (), chain[j + 1])

    def namer(key):
        if key[0] == 'q':
            return transducer_name(transducer, key[1])
        return f'{transducer_name(transducer, transducer.transitions[key[1]][0])}~t{key[1]}.{key[2]}'

    return builder.build(('q', transducer.initial), namer=namer)


def _epsilon_closure(transducer: BuchiTransducer, state: int) -> List[Tuple[int, bool, bool]]:
    """(reached state, accepting seen, output seen) over ε-input moves, start included."""
    start = (state, state in transducer.accepting, False)
    seen = {start: None}
    queue = [start]
    while queue:
        node, accepting_seen, output_seen = queue.pop(0)
        for tid in transducer.outgoing[node]:
            _, word_in, word_out, target = transducer.transitions[tid]
            if word_in:
                continue
            nxt = (target, accepting_seen or target in transducer.accepting, output_seen or bool(word_out))
            if nxt not in seen:
                seen[nxt] = None
                queue.append(nxt)
    return list(seen)


def domain_automaton(transducer: BuchiTransducer) -> BuchiAutomaton:
    """Letter-normalized Büchi automaton for the inputs of R(T).

    Each macro step runs a stretch of ε-input moves and then reads one
    letter; it carries two bits, an accepting state was visited and some
    output was written. Runs must set both bits infinitely often, which a
    two-phase counter compiles down to a plain Büchi condition.
    """
    normalized = normalize_input(transducer)
    macro: Dict[int, List[Tuple[str, int, bool, bool]]] = {}
    for state in normalized.states:
        steps = {}
        for reached, accepting_seen, output_seen in _epsilon_closure(normalized, state):
            for tid in normalized.outgoing[reached]:
                _, word_in, word_out, target = normalized.transitions[tid]
                if word_in:
                    steps[(word_in[0], target, accepting_seen, output_seen or bool(word_out))] = None
        macro[state] = list(steps)

    def successors(node):
        state, phase, _ = node
        for letter, target, accepting_seen, output_seen in macro[state]:
            nxt_phase, done = phase, False
            if nxt_phase == 0 and accepting_seen:
                nxt_phase = 1
            if nxt_phase == 1 and output_seen:
                nxt_phase, done = 0, True
            yield letter, (target, nxt_phase, done)

    start = (normalized.initial, 0, False)
    graph = explore(start, successors)
    builder = AutomatonBuilder(transducer.input_alphabet)
    for node in graph.order:
        builder.state(node)
        if node[2]:
            builder.accept(node)
        for letter, target in graph.edges[node]:
            builder.add(node, letter, target)
    automaton = builder.build(
        start,
        namer=lambda n: f'{transducer_name(normalized, n[0])}/{n[1]}{"*" if n[2] else ""}')
    logger.debug(f"Domain automaton of {transducer!r} has {automaton.num_states} states")
    return automaton


def image_automaton(transducer: BuchiTransducer) -> BuchiAutomaton:
    """Letter-normalized Büchi automaton for the outputs of R(T)."""
    return domain_automaton(transducer.swapped())


def restrict_input_prefix(transducer: BuchiTransducer, word: Word) -> BuchiTransducer:
    """Relation R(T) ∩ (word·Σ^ω × Γ^ω)."""
    word = tuple(word)
    try:
        transducer.input_alphabet.validate(word)
    except InvalidWordError as exc:
        raise AlphabetMismatchError(str(exc)) from exc
    target_length = len(word)

    def advance(matched: int, word_in: Word) -> Optional[int]:
        for letter in word_in:
            if matched < target_length:
                if letter != word[matched]:
                    return None
                matched += 1
        return matched

    def successors(node):
        state, matched = node
        for tid in transducer.outgoing[state]:
            _, word_in, word_out, target = transducer.transitions[tid]
            nxt = advance(matched, word_in)
            if nxt is not None:
                yield (word_in, word_out), (target, nxt)

    start = (transducer.initial, 0)
    graph = explore(start, successors)
    builder = TransducerBuilder(transducer.input_alphabet, transducer.output_alphabet)
    for node in graph.order:
        builder.state(node)
        if node[1] == target_length and node[0] in transducer.accepting:
            builder.accept(node)
        for (word_in, word_out), target in graph.edges[node]:
            builder.add(node, word_in, word_out, target)
    return builder.build(start, namer=lambda n: f'{transducer_name(transducer, n[0])}@{n[1]}')


# ---------------------------------------------------------------------------
# Evaluation on ultimately periodic points
# ---------------------------------------------------------------------------

def _lasso_step(word: LassoWord, position: int) -> int:
    position += 1
    if position == len(word.prefix) + len(word.loop):
        return len(word.prefix)
    return position


def _read_along(word: LassoWord, position: int, word_in: Word) -> Optional[int]:
    for letter in word_in:
        if word.letter(position) != letter:
            return None
        position = _lasso_step(word, position)
    return position


def apply_lasso_witness(transducer: BuchiTransducer, point: LassoWord) -> RationalRelationWitness:
    """Accepting lasso run of T on `point`, with the output it writes."""
    try:
        point.check_alphabet(transducer.input_alphabet)
    except InvalidWordError as exc:
        raise AlphabetMismatchError(str(exc)) from exc

    def successors(node):
        state, position = node
        for tid in transducer.outgoing[state]:
            _, word_in, _, target = transducer.transitions[tid]
            nxt = _read_along(point, position, word_in)
            if nxt is not None:
                yield tid, (target, nxt)

    graph = explore((transducer.initial, 0), successors)
    lasso = find_lasso(
        graph,
        node_marks=[lambda node: node[0] in transducer.accepting],
        edge_marks=[lambda tid: bool(transducer.transitions[tid][1]),
                    lambda tid: bool(transducer.transitions[tid][2])],
    )
    if lasso is None:
        if not nba_accepts_lasso(domain_automaton(transducer), point):
            raise NotInDomainError(f"Point {point.prefix}({point.loop}) is not in the domain")
        raise SearchInvariantError("Domain point without an ultimately periodic accepting run")
    return _witness_from_run(transducer, lasso.stem_labels, lasso.cycle_labels)


def _witness_from_run(transducer: BuchiTransducer, stem, cycle) -> RationalRelationWitness:
    def track(tids, index):
        return tuple(letter for tid in tids for letter in transducer.transitions[tid][index])

    return RationalRelationWitness(
        input=lasso_normalize(track(stem, 1), track(cycle, 1)),
        output=lasso_normalize(track(stem, 2), track(cycle, 2)),
        stem=tuple(stem),
        cycle=tuple(cycle),
    )


def apply_lasso(transducer: BuchiTransducer, point: LassoWord) -> LassoWord:
    """F_T(point) for a functional transducer T."""
    return apply_lasso_witness(transducer, point).output


def replay_witness(transducer: BuchiTransducer, witness: RationalRelationWitness) -> bool:
    """Check that the run is an accepting lasso reading and writing the claimed words."""
    transitions = transducer.transitions
    run = witness.stem + witness.cycle
    if not witness.cycle or any(not 0 <= tid < len(transitions) for tid in run):
        return False
    state = transducer.initial
    for tid in run:
        if transitions[tid][0] != state:
            return False
        state = transitions[tid][3]
    cycle_start = transitions[witness.cycle[0]][0]
    if state != cycle_start:
        return False
    if not any(transitions[tid][0] in transducer.accepting for tid in witness.cycle):
        return False
    replayed = _witness_from_run(transducer, witness.stem, witness.cycle)
    return (
        any(transitions[tid][1] for tid in witness.cycle)
        and any(transitions[tid][2] for tid in witness.cycle)
        and lasso_equal(replayed.input, witness.input)
        and lasso_equal(replayed.output, witness.output)
    )


# ---------------------------------------------------------------------------
# Input-synchronized pair searches
# ---------------------------------------------------------------------------

DIVERGED = 'diverged'


@dataclass(frozen=True)
class PairMove:
    """Edge of the pair graph: a letter read by both runs, or an ε-input move of one."""

    letter: Optional[str]
    first: Optional[int]
    second: Optional[int]


@dataclass
class PairSearchResult:
    input: Optional[LassoWord]
    first_output: Optional[LassoWord]
    second_output: Optional[LassoWord]
    explored: int
    bound_hits: int
    budget_exhausted: bool

    @property
    def found(self) -> bool:
        return self.input is not None


def _pair_moves(t1: BuchiTransducer, t2: BuchiTransducer, n1: int, n2: int):
    for tid in t1.outgoing[n1]:
        if not t1.transitions[tid][1]:
            yield PairMove(None, tid, None), t1.transitions[tid][3], n2
    for tid in t2.outgoing[n2]:
        if not t2.transitions[tid][1]:
            yield PairMove(None, None, tid), n1, t2.transitions[tid][3]
    for tid1 in t1.outgoing[n1]:
        word_in = t1.transitions[tid1][1]
        if not word_in:
            continue
        for tid2 in t2.outgoing[n2]:
            if t2.transitions[tid2][1] == word_in:
                yield PairMove(word_in[0], tid1, tid2), t1.transitions[tid1][3], t2.transitions[tid2][3]


def _pair_search(
    t1: BuchiTransducer,
    t2: BuchiTransducer,
    bound: int,
    budget: Optional[int],
    track_divergence: bool,
) -> PairSearchResult:
    t1, t2 = normalize_input(t1), normalize_input(t2)
    bound_hits = 0

    def output(transducer, tid):
        return transducer.transitions[tid][2] if tid is not None else ()

    def successors(node):
        nonlocal bound_hits
        n1, n2, overhang = node
        for move, m1, m2 in _pair_moves(t1, t2, n1, n2):
            out1, out2 = output(t1, move.first), output(t2, move.second)
            if overhang == DIVERGED:
                yield move, (m1, m2, DIVERGED)
                continue
            extended = overhang.extend(out1, out2)
            if extended is None:
                if track_divergence:
                    yield move, (m1, m2, DIVERGED)
                continue
            if len(extended) > bound:
                bound_hits += 1
                continue
            yield move, (m1, m2, extended)

    graph = explore((t1.initial, t2.initial, Overhang()), successors, budget=budget)
    node_marks = [lambda node: node[0] in t1.accepting, lambda node: node[1] in t2.accepting]
    if track_divergence:
        node_marks.append(lambda node: node[2] == DIVERGED)
    edge_marks = [
        lambda move: move.letter is not None,
        lambda move: bool(output(t1, move.first)),
        lambda move: bool(output(t2, move.second)),
    ]
    lasso = find_lasso(graph, node_marks=node_marks, edge_marks=edge_marks)
    logger.info(f"Pair search explored {len(graph)} nodes, bound-hit={bound_hits}")
    result = PairSearchResult(None, None, None, len(graph), bound_hits, graph.budget_exhausted)
    if lasso is None:
        return result

    def track(moves, pick):
        return tuple(letter for move in moves for letter in pick(move))

    stem, cycle = lasso.stem_labels, lasso.cycle_labels
    letters = lambda move: (move.letter,) if move.letter is not None else ()
    first = lambda move: output(t1, move.first)
    second = lambda move: output(t2, move.second)
    result.input = lasso_normalize(track(stem, letters), track(cycle, letters))
    result.first_output = lasso_normalize(track(stem, first), track(cycle, first))
    result.second_output = lasso_normalize(track(stem, second), track(cycle, second))
    return result


def nonfunctionality_search(
    transducer: BuchiTransducer,
    bound: int,
    budget: Optional[int] = None,
) -> Optional[Tuple[LassoWord, LassoWord, LassoWord]]:
    """Input x with two distinct outputs, or None (which proves nothing)."""
    result = _pair_search(transducer, transducer, bound, budget, track_divergence=True)
    if not result.found:
        return None
    if lasso_equal(result.first_output, result.second_output):
        raise SearchInvariantError("Diverged runs produced equal outputs")
    return result.input, result.first_output, result.second_output


def common_witness_search(
    first: BuchiTransducer,
    second: BuchiTransducer,
    bound: int,
    budget: Optional[int] = None,
) -> PairSearchResult:
    """Pair (σ, w) in R(first) ∩ R(second) whose output overhang stays within `bound`."""
    if first.input_alphabet != second.input_alphabet:
        raise AlphabetMismatchError("Transducers read different input alphabets")
    result = _pair_search(first, second, bound, budget, track_divergence=False)
    if result.found and not lasso_equal(result.first_output, result.second_output):
        raise SearchInvariantError("Common witness with different outputs")
    return result


class TransducerOps:
    """Projections, evaluation and bounded relation searches on Büchi transducers."""

    def __init__(self, nonfunctionality_bound: int = 8, pair_bound: int = 8, budget: Optional[int] = None):
        """Initialize the default overhang bounds and node budget of the pair searches."""
        self.nonfunctionality_bound = nonfunctionality_bound
        self.pair_bound = pair_bound
        self.budget = budget

    @classmethod
    def from_config(cls, settings) -> 'TransducerOps':
        return cls(settings.NONFUNCTIONALITY_BOUND, settings.PAIR_SEARCH_BOUND, settings.STEP_BUDGET)

    def domain(self, transducer: BuchiTransducer) -> BuchiAutomaton:
        return domain_automaton(transducer)

    def image(self, transducer: BuchiTransducer) -> BuchiAutomaton:
        return image_automaton(transducer)

    def restrict(self, transducer: BuchiTransducer, word: Word) -> BuchiTransducer:
        return restrict_input_prefix(transducer, word)

    def apply(self, transducer: BuchiTransducer, point: LassoWord) -> LassoWord:
        return apply_lasso(transducer, point)

    def apply_witness(self, transducer: BuchiTransducer, point: LassoWord) -> RationalRelationWitness:
        return apply_lasso_witness(transducer, point)

    def replay(self, transducer: BuchiTransducer, witness: RationalRelationWitness) -> bool:
        return replay_witness(transducer, witness)

    def nonfunctionality(self, transducer: BuchiTransducer, bound: Optional[int] = None
                         ) -> Optional[Tuple[LassoWord, LassoWord, LassoWord]]:
        return nonfunctionality_search(transducer, bound or self.nonfunctionality_bound, self.budget)

    def common_pair(self, first: BuchiTransducer, second: BuchiTransducer,
                    bound: Optional[int] = None) -> PairSearchResult:
        return common_witness_search(first, second, bound or self.pair_bound, self.budget)
