"""Bounded search for computations that re-enter the initial state forever."""

import logging
from typing import Iterator, Optional, Tuple

from models import ConfigurationLasso, Move, Rule, TmConfiguration, TuringMachine
from models.errors import InvalidBoundError

from .graph_search import explore, find_lasso

logger = logging.getLogger(__name__)

_SHIFT = {Move.L: -1, Move.R: 1, Move.S: 0}


def tm_successors(machine: TuringMachine, config: TmConfiguration) -> Iterator[Tuple[Rule, TmConfiguration]]:
    """One-step successors; an L move on the first cell has none."""
    for rule in machine.rules_for(config.state, config.scanned):
        head = config.head + _SHIFT[rule.move]
        if head < 0:
            continue
        tape = config.tape[:config.head] + (rule.write,) + config.tape[config.head + 1:]
        yield rule, TmConfiguration.make(tape, head, rule.next_state, machine.blank)


def is_step(machine: TuringMachine, before: TmConfiguration, after: TmConfiguration) -> bool:
    return any(nxt == after for _, nxt in tm_successors(machine, before))


def tm_recurring_search(
    machine: TuringMachine,
    config_bound: int,
    step_budget: int,
) -> Optional[ConfigurationLasso]:
    """Stem and cycle of configurations with the initial state on the cycle.

    Configurations whose tape exceeds `config_bound` cells are pruned, so a
    machine whose recurring runs keep growing the tape is never reported.
    """
    if config_bound < 1 or step_budget < 1:
        raise InvalidBoundError(f"Config bound and step budget must be positive, got {config_bound}, {step_budget}")

    def successors(config: TmConfiguration):
        for rule, nxt in tm_successors(machine, config):
            if len(nxt.tape) <= config_bound:
                yield rule, nxt

    graph = explore(machine.initial_configuration(), successors, budget=step_budget)
    lasso = find_lasso(graph, node_marks=[lambda c: c.state == machine.initial])
    logger.info(f"Configuration search explored {len(graph)} configurations "
                f"(budget exhausted: {graph.budget_exhausted})")
    if lasso is None:
        return None
    return ConfigurationLasso(
        stem=tuple(source for source, _, _ in lasso.stem),
        cycle=tuple(source for source, _, _ in lasso.cycle),
    )


class TuringSearch:
    """Bounded search for computations that re-enter the initial state forever."""

    def __init__(self, config_bound: int = 8, step_budget: int = 100000):
        """Initialize the tape bound and the configuration budget."""
        self.config_bound = config_bound
        self.step_budget = step_budget

    @classmethod
    def from_config(cls, settings) -> 'TuringSearch':
        return cls(settings.TM_CONFIG_BOUND, settings.STEP_BUDGET)

    def successors(self, machine: TuringMachine, config: TmConfiguration):
        return list(tm_successors(machine, config))

    def recurring_run(self, machine: TuringMachine, config_bound: Optional[int] = None
                      ) -> Optional[ConfigurationLasso]:
        return tm_recurring_search(machine, config_bound or self.config_bound, self.step_budget)
