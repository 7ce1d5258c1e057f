"""ω-PCP in a regular ω-language: verification and bounded overhang search."""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence, Set, Tuple

from models import LassoWord, OverhangConfig, Overhang, PcpRegInstance, Word
from models.errors import IndexOutOfRangeError, InvalidBoundError, InvalidWordError

from .graph_search import explore, find_lasso
from .omega_core import first_difference, lasso_normalize, nba_accepts_lasso, nba_trim

logger = logging.getLogger(__name__)


def _index(symbol: str, size: int) -> int:
    try:
        value = int(symbol)
    except ValueError:
        raise IndexOutOfRangeError(f"Index {symbol!r} is not a number") from None
    if not 1 <= value <= size or str(value) != symbol:
        raise IndexOutOfRangeError(f"Index {symbol!r} is outside 1..{size}")
    return value - 1


def concat_finite(words: Sequence[Word], indices: Sequence[str]) -> Word:
    return tuple(letter for i in indices for letter in words[_index(i, len(words))])


def concatenate_indices(words: Sequence[Word], sigma: LassoWord) -> LassoWord:
    """words[i1]·words[i2]··· along sigma, normalized."""
    return lasso_normalize(concat_finite(words, sigma.prefix), concat_finite(words, sigma.loop))


@dataclass(frozen=True)
class SolutionReport:
    """Which conjunct of the solution condition holds."""

    accepted_by_constraint: bool
    mismatch_position: Optional[int]

    @property
    def is_solution(self) -> bool:
        return self.accepted_by_constraint and self.mismatch_position is None

    def describe(self) -> str:
        if not self.accepted_by_constraint:
            return 'constraint automaton rejects the index word'
        if self.mismatch_position is not None:
            return f'word equality failed at position {self.mismatch_position}'
        return 'solution verified'


def _check_indices(instance: PcpRegInstance, sigma: LassoWord):
    for symbol in sigma.prefix + sigma.loop:
        _index(symbol, instance.size)


def explain_solution(instance: PcpRegInstance, sigma: LassoWord) -> SolutionReport:
    _check_indices(instance, sigma)
    upper = concatenate_indices(instance.x_words, sigma)
    lower = concatenate_indices(instance.y_words, sigma)
    return SolutionReport(
        accepted_by_constraint=nba_accepts_lasso(instance.constraint, sigma),
        mismatch_position=first_difference(upper, lower),
    )


def verify_solution(instance: PcpRegInstance, sigma: LassoWord) -> bool:
    """sigma ∈ L(constraint) and both concatenations along sigma are equal."""
    try:
        return explain_solution(instance, sigma).is_solution
    except (IndexOutOfRangeError, InvalidWordError):
        return False


@dataclass
class OverhangSearchResult:
    solution: Optional[LassoWord]
    explored: int
    bound_hits: int
    budget_exhausted: bool
    swept: int = 0

    @property
    def exhausted(self) -> bool:
        """No solution exists, not even beyond the bound."""
        return self.solution is None and self.bound_hits == 0 and not self.budget_exhausted


def _check_bound(overhang_bound: int):
    if overhang_bound < 1:
        raise InvalidBoundError(f"Overhang bound must be positive, got {overhang_bound}")


def sweep_short_lassos(
    instance: PcpRegInstance,
    max_prefix: int,
    max_loop: int,
    budget: Optional[int] = None,
) -> Tuple[Optional[LassoWord], int, bool]:
    """Shortest solution u(v) with |u| <= max_prefix and |v| <= max_loop.

    Index words u·v are generated breadth-first and kept only while their
    two concatenations stay prefix-compatible and the trimmed constraint
    can still read them; every split of a kept word is then verified.
    The overhang is not bounded here. Returns (solution, expanded words,
    budget exhausted).
    """
    constraint = nba_trim(instance.constraint)
    if not constraint.accepting:
        return None, 0, False
    tried: Set[LassoWord] = set()
    queue = deque([((), Overhang(), frozenset({constraint.initial}))])
    expanded = 0
    while queue:
        if budget is not None and expanded >= budget:
            return None, expanded, True
        word, overhang, states = queue.popleft()
        expanded += 1
        for start in range(max(0, len(word) - max_loop), min(max_prefix, len(word) - 1) + 1):
            candidate = lasso_normalize(word[:start], word[start:])
            if candidate in tried:
                continue
            tried.add(candidate)
            if verify_solution(instance, candidate):
                return candidate, expanded, False
        if len(word) == max_prefix + max_loop:
            continue
        for i, symbol in enumerate(instance.indices):
            extended = overhang.extend(instance.x_words[i], instance.y_words[i])
            targets = frozenset(t for q in states for t in constraint.step(q, symbol))
            if extended is not None and targets:
                queue.append((word + (symbol,), extended, targets))
    return None, expanded, False


def explore_overhang_graph(
    instance: PcpRegInstance,
    overhang_bound: int,
    budget: Optional[int] = None,
) -> OverhangSearchResult:
    """Breadth-first search of the configuration graph for an accepting cycle.

    When the bound pruned some configuration and no cycle was found, the
    lassos with prefix and loop of at most `overhang_bound` indices are
    swept as well, which covers solutions whose overhang grows forever.
    """
    _check_bound(overhang_bound)
    constraint = instance.constraint
    bound_hits = 0

    def successors(config: OverhangConfig):
        nonlocal bound_hits
        for i, symbol in enumerate(instance.indices):
            targets = constraint.step(config.automaton_state, symbol)
            extended = config.overhang.extend(instance.x_words[i], instance.y_words[i])
            if not targets or extended is None:
                continue
            if len(extended) > overhang_bound:
                bound_hits += 1
                continue
            for target in targets:
                yield symbol, OverhangConfig(target, extended)

    start = OverhangConfig(constraint.initial, Overhang())
    graph = explore(start, successors, budget=budget)
    lasso = find_lasso(graph, node_marks=[lambda c: c.automaton_state in constraint.accepting])
    result = OverhangSearchResult(None, len(graph), bound_hits, graph.budget_exhausted)
    if lasso is not None:
        result.solution = lasso_normalize(lasso.stem_labels, lasso.cycle_labels)
    elif bound_hits and not graph.budget_exhausted:
        remaining = None if budget is None else max(budget - len(graph), 0)
        result.solution, result.swept, result.budget_exhausted = sweep_short_lassos(
            instance, overhang_bound, overhang_bound, remaining)
    logger.info(f"Overhang search explored {result.explored} configurations, "
                f"bound-hit={bound_hits}, swept {result.swept} index words, solution={result.solution}")
    return result


def search_lasso_solution(
    instance: PcpRegInstance,
    overhang_bound: int,
    budget: Optional[int] = None,
) -> Optional[LassoWord]:
    """Ultimately periodic solution found within the overhang bound."""
    return explore_overhang_graph(instance, overhang_bound, budget).solution


class PCPSolver:
    """Verification and bounded search for ω-PCP(Reg) instances."""

    def __init__(self, overhang_bound: int = 8, budget: Optional[int] = None):
        """Initialize the solver with its default bound and node budget."""
        _check_bound(overhang_bound)
        self.overhang_bound = overhang_bound
        self.budget = budget

    @classmethod
    def from_config(cls, settings) -> 'PCPSolver':
        return cls(settings.OVERHANG_BOUND, settings.STEP_BUDGET)

    def concatenate(self, words: Sequence[Word], sigma: LassoWord) -> LassoWord:
        return concatenate_indices(words, sigma)

    def explain(self, instance: PcpRegInstance, sigma: LassoWord) -> SolutionReport:
        return explain_solution(instance, sigma)

    def verify(self, instance: PcpRegInstance, sigma: LassoWord) -> bool:
        return verify_solution(instance, sigma)

    def search(self, instance: PcpRegInstance, overhang_bound: Optional[int] = None) -> OverhangSearchResult:
        return explore_overhang_graph(instance, overhang_bound or self.overhang_bound, self.budget)
