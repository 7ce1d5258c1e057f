"""The constructive reductions: machine to ω-PCP, ω-PCP to transducers and functions.

Every construction is a pure function returning fresh immutable objects.
State names are kept on the outputs so serialized constructions stay
readable.
"""

import logging
from typing import List, Sequence, Tuple

from models import (
    Alphabet,
    BuchiAutomaton,
    BuchiTransducer,
    ConfigurationLasso,
    LassoWord,
    ManifestKind,
    Move,
    PcpRegInstance,
    TmConfiguration,
    TuringMachine,
    Word,
    SEPARATOR,
    index_alphabet,
)
from models.errors import MalformedSolutionError, UnknownTargetError

from .pcp_solver import concatenate_indices, explain_solution
from .transducer_ops import TransducerBuilder
from .turing_search import is_step

logger = logging.getLogger(__name__)

AB_LETTERS = ('a', 'b')
GADGET_BLOCK = ('d1', 'd2', 'd3')
GADGET_OUTPUT = ('c', 'd')


# ---------------------------------------------------------------------------
# Turing machine -> ω-PCP(Reg)
# ---------------------------------------------------------------------------

def pcp_word_table(machine: TuringMachine) -> List[Tuple[Word, Word]]:
    """The (x_i, y_i) pairs simulating one configuration step per #-block."""
    sep = SEPARATOR
    q0 = machine.initial
    blank = machine.blank
    tape = machine.tape_alphabet.symbols
    by_move = {move: [r for r in machine.rules if r.move is move] for move in Move}

    pairs: List[Tuple[Word, Word]] = [((sep,), (sep, q0, sep)), ((sep,), (sep,))]
    pairs += [((a,), (a,)) for a in tape]
    pairs += [((r.state, r.read), (r.next_state, r.write)) for r in by_move[Move.S]]
    pairs += [((r.state, r.read), (r.write, r.next_state)) for r in by_move[Move.R]]
    pairs += [((c, r.state, r.read), (r.next_state, c, r.write))
              for r in by_move[Move.L] for c in tape]
    pairs += [((r.state, sep), (r.write, r.next_state, sep))
              for r in by_move[Move.R] if r.read == blank]
    pairs += [((c, r.state, sep), (r.next_state, c, r.write, sep))
              for r in by_move[Move.L] if r.read == blank for c in tape]
    pairs += [((r.state, sep), (r.next_state, r.write, sep))
              for r in by_move[Move.S] if r.read == blank]
    return pairs


def recurrence_constraint(size: int, recurring: Sequence[int]) -> BuchiAutomaton:
    """Deterministic automaton: first index is 1, infinitely many indices from `recurring`."""
    alphabet = index_alphabet(size)
    recurring = set(recurring)
    start, waiting, seen = 0, 1, 2
    transitions = [(start, '1', seen if 1 in recurring else waiting)]
    for source in (waiting, seen):
        for i, symbol in enumerate(alphabet, start=1):
            transitions.append((source, symbol, seen if i in recurring else waiting))
    return BuchiAutomaton(3, alphabet, tuple(transitions), start, frozenset({seen}),
                          state_names=('start', 'waiting', 'seen'))


def tm_to_pcpreg(machine: TuringMachine) -> PcpRegInstance:
    pairs = pcp_word_table(machine)
    recurring = [i for i, (_, bottom) in enumerate(pairs, start=1) if machine.initial in bottom]
    logger.debug(f"Machine table has {len(pairs)} pairs, {len(recurring)} re-enter the initial state")
    return PcpRegInstance(
        x_words=tuple(top for top, _ in pairs),
        y_words=tuple(bottom for _, bottom in pairs),
        constraint=recurrence_constraint(len(pairs), recurring),
    )


def _split_blocks(symbols: Word) -> List[Word]:
    if not symbols:
        return []
    if symbols[0] != SEPARATOR:
        raise MalformedSolutionError("Configuration sequence must start with a separator")
    blocks: List[List[str]] = []
    for symbol in symbols:
        if symbol == SEPARATOR:
            blocks.append([])
        else:
            blocks[-1].append(symbol)
    return [tuple(block) for block in blocks]


def parse_configuration(machine: TuringMachine, block: Word) -> TmConfiguration:
    """Read `left q right` back into a configuration."""
    positions = [i for i, symbol in enumerate(block) if symbol in machine.states]
    if len(positions) != 1:
        raise MalformedSolutionError(f"Block {block} must contain exactly one state symbol")
    head = positions[0]
    cells = block[:head] + block[head + 1:]
    unknown = [s for s in cells if s not in machine.tape_alphabet]
    if unknown:
        raise MalformedSolutionError(f"Block {block} uses symbols outside the tape alphabet: {unknown}")
    return TmConfiguration.make(cells, head, block[head], machine.blank)


def decode_pcp_solution(machine: TuringMachine, sigma: LassoWord) -> ConfigurationLasso:
    """Configuration run spelled by the y-concatenation of a solution."""
    instance = tm_to_pcpreg(machine)
    report = explain_solution(instance, sigma)
    if not report.is_solution:
        raise MalformedSolutionError(f"Not a solution: {report.describe()}")
    word = concatenate_indices(instance.y_words, sigma)
    stem_length = len(word.prefix)
    cut = next((stem_length + j for j in range(len(word.loop))
                if word.letter(stem_length + j) == SEPARATOR), None)
    if cut is None:
        raise MalformedSolutionError("Periodic part never separates configurations")
    stem = [parse_configuration(machine, b) for b in _split_blocks(word.take(cut))]
    cycle = [parse_configuration(machine, b)
             for b in _split_blocks(tuple(word.letter(cut + j) for j in range(len(word.loop))))]
    run = stem + cycle
    if run[0] != machine.initial_configuration():
        raise MalformedSolutionError(f"Run starts in {run[0]}, not on the blank tape")
    for before, after in zip(run, run[1:] + cycle[:1]):
        if not is_step(machine, before, after):
            raise MalformedSolutionError(f"Illegal step {before} -> {after}")
    if all(config.state != machine.initial for config in cycle):
        raise MalformedSolutionError("Initial state does not recur on the cycle")
    return ConfigurationLasso(tuple(stem), tuple(cycle))


# ---------------------------------------------------------------------------
# ω-PCP(Reg) -> transducers
# ---------------------------------------------------------------------------

def _constraint_transducer(instance: PcpRegInstance, words: Sequence[Word]) -> BuchiTransducer:
    constraint = instance.constraint
    builder = TransducerBuilder(instance.indices, instance.alphabet)
    for state in constraint.states:
        builder.state(state)
        if state in constraint.accepting:
            builder.accept(state)
    for source, symbol, target in constraint.transitions:
        builder.add(source, (symbol,), words[constraint.alphabet.index[symbol]], target)
    return builder.build(constraint.initial, namer=constraint.name_of)


def pcp_to_transducer_pair(instance: PcpRegInstance) -> Tuple[BuchiTransducer, BuchiTransducer]:
    """Relations {(σ, x-concatenation)} and {(σ, y-concatenation)} over σ ∈ L(constraint)."""
    return (_constraint_transducer(instance, instance.x_words),
            _constraint_transducer(instance, instance.y_words))


def _add_function_branches(builder: TransducerBuilder, instance: PcpRegInstance):
    """Both branches of the a/b-guarded function; returns their entry keys.

    Branch X needs infinitely many `a` and writes x-words. Branch Y guesses
    the last `a`, then reads only `b` and indices and writes y-words. In
    both, `m` records a guard letter since the last credited visit to an
    accepting constraint state, and `hit` marks the credited visit.
    """
    constraint = instance.constraint
    accepting = constraint.accepting

    def credit(target, m):
        if target in accepting and m:
            return 0, 1
        return m, 0

    for p in constraint.states:
        builder.state(('Ypre', p))
        builder.add(('Ypre', p), (), (), ('Y', p, 0, 0))
        for letter in AB_LETTERS:
            builder.add(('Ypre', p), (letter,), (), ('Ypre', p))
        for m in (0, 1):
            for hit in (0, 1):
                x_key, y_key = ('X', p, m, hit), ('Y', p, m, hit)
                if hit:
                    builder.accept(x_key)
                    builder.accept(y_key)
                builder.add(x_key, ('a',), (), ('X', p, 1, 0))
                builder.add(x_key, ('b',), (), ('X', p, m, 0))
                builder.add(y_key, ('b',), (), ('Y', p, 1, 0))
    for p, symbol, q in constraint.transitions:
        i = constraint.alphabet.index[symbol]
        builder.add(('Ypre', p), (symbol,), instance.y_words[i], ('Ypre', q))
        for m in (0, 1):
            nxt_m, nxt_hit = credit(q, m)
            for hit in (0, 1):
                builder.add(('X', p, m, hit), (symbol,), instance.x_words[i], ('X', q, nxt_m, nxt_hit))
                builder.add(('Y', p, m, hit), (symbol,), instance.y_words[i], ('Y', q, nxt_m, nxt_hit))
    return ('X', constraint.initial, 0, 0), ('Ypre', constraint.initial)


def _branch_name(key) -> str:
    if isinstance(key, str):
        return key
    return f'{key[0]}[{",".join(str(part) for part in key[1:])}]'


def function_input_alphabet(instance: PcpRegInstance) -> Alphabet:
    return Alphabet(instance.indices.symbols + AB_LETTERS)


def pcp_to_function_F(instance: PcpRegInstance) -> BuchiTransducer:
    """Functional transducer writing x-words on ({a,b}*a)^ω and y-words on {a,b}*b^ω."""
    builder = TransducerBuilder(function_input_alphabet(instance), instance.alphabet)
    builder.state('init')
    x_entry, y_entry = _add_function_branches(builder, instance)
    builder.add('init', (), (), x_entry)
    builder.add('init', (), (), y_entry)
    transducer = builder.build('init', namer=_branch_name)
    logger.debug(f"Function transducer has {transducer.num_states} states "
                 f"and {len(transducer.transitions)} transitions")
    return transducer


def _fresh(name: str, taken) -> str:
    while name in taken:
        name += "'"
    return name


def pcp1_gadget(c: str = 'c', d: str = 'd') -> Tuple[Tuple[Word, ...], Tuple[Word, ...]]:
    """Fixed finite PCP with t = (cc, d, d) and w = (c, c, dd)."""
    return ((c, c), (d,), (d,)), ((c,), (c,), (d, d))


def pcp1_is_solution(indices: Sequence[int]) -> bool:
    """Whether a nonempty index sequence over 1..3 equalizes the gadget words."""
    if not indices:
        return False
    top, bottom = pcp1_gadget()
    return (tuple(letter for i in indices for letter in top[i - 1])
            == tuple(letter for i in indices for letter in bottom[i - 1]))


def gadget_letters(instance: PcpRegInstance) -> Tuple[Tuple[str, ...], Tuple[str, str]]:
    """Block letters and gadget output letters, renamed away from the instance's letters."""
    taken_in = set(function_input_alphabet(instance))
    taken_out = set(instance.alphabet)
    block = tuple(_fresh(name, taken_in) for name in GADGET_BLOCK)
    c = _fresh(GADGET_OUTPUT[0], taken_out)
    d = _fresh(GADGET_OUTPUT[1], taken_out | {c})
    return block, (c, d)


def pcp_to_function_Fprime(instance: PcpRegInstance) -> BuchiTransducer:
    """The function above, preceded by a nonempty block over the gadget letters.

    The block is translated with the gadget's t-words on branch X and its
    w-words on branch Y, so continuity forces the block to solve the gadget.
    """
    block, (c, d) = gadget_letters(instance)
    top, bottom = pcp1_gadget(c, d)
    input_alphabet = Alphabet(function_input_alphabet(instance).symbols + block)
    output_alphabet = instance.alphabet.union(Alphabet((c, d)))
    builder = TransducerBuilder(input_alphabet, output_alphabet)
    builder.state('init')
    x_entry, y_entry = _add_function_branches(builder, instance)
    for source in ('init', 'XD'):
        for letter, word in zip(block, top):
            builder.add(source, (letter,), word, 'XD')
    for source in ('init', 'YD'):
        for letter, word in zip(block, bottom):
            builder.add(source, (letter,), word, 'YD')
    builder.add('XD', (), (), x_entry)
    builder.add('YD', (), (), y_entry)
    return builder.build('init', namer=_branch_name)


def fprime_block(instance: PcpRegInstance, indices: Sequence[int]) -> Word:
    """Gadget-letter block for an index sequence over 1..3."""
    block, _ = gadget_letters(instance)
    return tuple(block[i - 1] for i in indices)



class ReductionService:
    """Named entry points for the four constructions and the solution decoder."""

    # target name -> (manifest kind of the source, construction)
    TARGETS = {
        'pcp': (ManifestKind.TURING_MACHINE, tm_to_pcpreg),
        'transducers': (ManifestKind.PCP_INSTANCE, pcp_to_transducer_pair),
        'f': (ManifestKind.PCP_INSTANCE, pcp_to_function_F),
        'fprime': (ManifestKind.PCP_INSTANCE, pcp_to_function_Fprime),
    }

    def source_kind(self, target: str) -> ManifestKind:
        return self._lookup(target)[0]

    def reduce(self, target: str, source):
        _, construction = self._lookup(target)
        logger.info(f"Running the {target} construction")
        return construction(source)

    def decode(self, machine: TuringMachine, sigma: LassoWord) -> ConfigurationLasso:
        return decode_pcp_solution(machine, sigma)

    def _lookup(self, target: str):
        try:
            return self.TARGETS[target]
        except KeyError:
            raise UnknownTargetError(f"Unknown reduction target {target!r}") from None
