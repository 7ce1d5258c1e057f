"""Import/export of plain Büchi automata in the Hanoi Omega-Automata format.

Each symbol becomes one atomic proposition and every edge carries a
one-hot label, e.g. ``[0&!1]`` for the first of two symbols. Only
state-based Büchi acceptance (``Acceptance: 1 Inf(0)``) is read back.
"""

import logging
import re
from typing import Dict, List, Optional, Tuple

from models import Alphabet, BuchiAutomaton
from models.errors import ManifestError

logger = logging.getLogger(__name__)

STATE_LINE = re.compile(r'^State:\s*(\d+)\s*(?:"([^"]*)")?\s*(\{[\d\s]*\})?\s*$')
EDGE_LINE = re.compile(r'^\[([^\]]*)\]\s*(\d+)\s*$')
QUOTED = re.compile(r'"([^"]*)"')


def _one_hot(index: int, size: int) -> str:
    return '&'.join(str(i) if i == index else f'!{i}' for i in range(size))


def export_hoa(automaton: BuchiAutomaton, name: str = 'automaton') -> str:
    symbols = automaton.alphabet.symbols
    lines = [
        'HOA: v1',
        f'name: "{name}"',
        f'States: {automaton.num_states}',
        f'Start: {automaton.initial}',
        f'AP: {len(symbols)} ' + ' '.join(f'"{s}"' for s in symbols),
        'acc-name: Buchi',
        'Acceptance: 1 Inf(0)',
        'properties: trans-labels explicit-labels state-acc',
        '--BODY--',
    ]
    for state in automaton.states:
        header = f'State: {state}'
        if automaton.state_names is not None:
            header += f' "{automaton.name_of(state)}"'
        if state in automaton.accepting:
            header += ' {0}'
        lines.append(header)
        for symbol, target in automaton.successors[state]:
            lines.append(f'[{_one_hot(automaton.alphabet.index[symbol], len(symbols))}] {target}')
    lines.append('--END--')
    return '\n'.join(lines) + '\n'


def _label_symbols(label: str, symbols: Tuple[str, ...]) -> List[str]:
    label = label.strip()
    if label == 't':
        return list(symbols)
    positive = []
    for atom in label.split('&'):
        atom = atom.strip()
        if atom.startswith('!'):
            continue
        if not atom.isdigit() or int(atom) >= len(symbols):
            raise ManifestError(f"Unsupported HOA label [{label}]")
        positive.append(int(atom))
    if len(positive) != 1:
        raise ManifestError(f"HOA label [{label}] is not one-hot")
    return [symbols[positive[0]]]


def import_hoa(text: str) -> BuchiAutomaton:
    headers: Dict[str, str] = {}
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    try:
        body_start = lines.index('--BODY--')
    except ValueError:
        raise ManifestError("HOA text has no --BODY-- section") from None
    for line in lines[:body_start]:
        key, _, value = line.partition(':')
        headers[key.strip()] = value.strip()
    if headers.get('Acceptance', '').replace(' ', '') != '1Inf(0)':
        raise ManifestError(f"Only Büchi acceptance is supported, got {headers.get('Acceptance')!r}")
    try:
        num_states = int(headers['States'])
        initial = int(headers['Start'])
    except (KeyError, ValueError):
        raise ManifestError("HOA header needs numeric States and Start") from None
    symbols = tuple(QUOTED.findall(headers.get('AP', '')))
    if not symbols:
        raise ManifestError("HOA header declares no atomic propositions")

    transitions = []
    accepting = set()
    names: List[Optional[str]] = [None] * num_states
    current = None
    for line in lines[body_start + 1:]:
        if line == '--END--':
            break
        state_match = STATE_LINE.match(line)
        if state_match:
            current = int(state_match.group(1))
            if current >= num_states:
                raise ManifestError(f"State {current} exceeds the declared {num_states} states")
            names[current] = state_match.group(2)
            if state_match.group(3) and '0' in state_match.group(3).strip('{}').split():
                accepting.add(current)
            continue
        edge_match = EDGE_LINE.match(line)
        if edge_match is None or current is None:
            raise ManifestError(f"Cannot read HOA body line {line!r}")
        target = int(edge_match.group(2))
        for symbol in _label_symbols(edge_match.group(1), symbols):
            transitions.append((current, symbol, target))

    state_names = None
    if all(name is not None for name in names):
        state_names = tuple(names)
    logger.debug(f"Imported HOA automaton with {num_states} states")
    return BuchiAutomaton(num_states, Alphabet(symbols), tuple(transitions), initial,
                          frozenset(accepting), state_names)


class HoaCodec:
    """HOA exchange for state-based Büchi automata."""

    def export(self, automaton: BuchiAutomaton, name: str = 'automaton') -> str:
        return export_hoa(automaton, name)

    def parse(self, text: str) -> BuchiAutomaton:
        return import_hoa(text)
