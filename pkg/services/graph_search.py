"""Breadth-first exploration and accepting-lasso search on labeled graphs.

Every search in the toolkit (automaton emptiness, PCP configurations,
transducer products, Turing-machine configurations) builds a graph with
`explore` and asks `find_lasso` for a stem plus a cycle that meets a set of
node and edge conditions (a generalized Büchi condition). Components come
from networkx; paths come from breadth-first search over the discovery
order, so the same input always yields the same witness.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from models.errors import SearchInvariantError

logger = logging.getLogger(__name__)

Node = Hashable
Label = Hashable
Step = Tuple[Node, Label, Node]
NodeMark = Callable[[Node], bool]
EdgeMark = Callable[[Label], bool]


@dataclass
class LabeledGraph:
    """Graph discovered from `start`, with a breadth-first tree."""

    start: Node
    order: Dict[Node, int] = field(default_factory=dict)
    edges: Dict[Node, List[Tuple[Label, Node]]] = field(default_factory=dict)
    parent: Dict[Node, Optional[Tuple[Node, Label]]] = field(default_factory=dict)
    budget_exhausted: bool = False

    def __len__(self) -> int:
        return len(self.order)

    def nodes(self) -> List[Node]:
        return list(self.order)

    def path_to(self, node: Node) -> List[Step]:
        """Breadth-first (shortest) path from the start node."""
        steps: List[Step] = []
        while self.parent[node] is not None:
            pred, label = self.parent[node]
            steps.append((pred, label, node))
            node = pred
        steps.reverse()
        return steps

    def to_networkx(self) -> nx.DiGraph:
        digraph = nx.DiGraph()
        digraph.add_nodes_from(self.order)
        for source, out in self.edges.items():
            for _, target in out:
                digraph.add_edge(source, target)
        return digraph


@dataclass(frozen=True)
class LassoPath:
    stem: Tuple[Step, ...]
    cycle: Tuple[Step, ...]

    @property
    def stem_labels(self) -> Tuple[Label, ...]:
        return tuple(label for _, label, _ in self.stem)

    @property
    def cycle_labels(self) -> Tuple[Label, ...]:
        return tuple(label for _, label, _ in self.cycle)


def explore(
    start: Node,
    successors: Callable[[Node], Iterable[Tuple[Label, Node]]],
    budget: Optional[int] = None,
) -> LabeledGraph:
    """Breadth-first exploration; `budget` caps the number of expanded nodes."""
    graph = LabeledGraph(start=start)
    graph.order[start] = 0
    graph.parent[start] = None
    queue = deque([start])
    expanded = 0
    while queue:
        if budget is not None and expanded >= budget:
            graph.budget_exhausted = True
            # unexpanded nodes keep no outgoing edges
            for node in queue:
                graph.edges.setdefault(node, [])
            break
        node = queue.popleft()
        expanded += 1
        out = graph.edges.setdefault(node, [])
        for label, target in successors(node):
            out.append((label, target))
            if target not in graph.order:
                graph.order[target] = len(graph.order)
                graph.parent[target] = (node, label)
                graph.edges.setdefault(target, [])
                queue.append(target)
    logger.debug(f"Explored {len(graph)} nodes ({expanded} expanded)")
    return graph


def _components(graph: LabeledGraph) -> List[Set[Node]]:
    """Nontrivial strongly connected components, in discovery order."""
    digraph = graph.to_networkx()
    result = []
    for component in nx.strongly_connected_components(digraph):
        if len(component) == 1:
            (node,) = component
            if not digraph.has_edge(node, node):
                continue
        result.append(set(component))
    result.sort(key=lambda comp: min(graph.order[n] for n in comp))
    return result


def _representatives(
    graph: LabeledGraph,
    component: Set[Node],
    node_marks: Sequence[NodeMark],
    edge_marks: Sequence[EdgeMark],
) -> Optional[Tuple[List[Node], List[Step]]]:
    ranked = sorted(component, key=graph.order.__getitem__)
    node_reps: List[Node] = []
    for mark in node_marks:
        found = next((n for n in ranked if mark(n)), None)
        if found is None:
            return None
        node_reps.append(found)
    edge_reps: List[Step] = []
    for mark in edge_marks:
        found = next(((n, label, t) for n in ranked
                      for label, t in graph.edges[n] if t in component and mark(label)), None)
        if found is None:
            return None
        edge_reps.append(found)
    return node_reps, edge_reps


def good_components(
    graph: LabeledGraph,
    node_marks: Sequence[NodeMark] = (),
    edge_marks: Sequence[EdgeMark] = (),
) -> List[Set[Node]]:
    """Components holding a cycle that satisfies every mark."""
    return [comp for comp in _components(graph)
            if _representatives(graph, comp, node_marks, edge_marks) is not None]


def live_nodes(
    graph: LabeledGraph,
    node_marks: Sequence[NodeMark] = (),
    edge_marks: Sequence[EdgeMark] = (),
) -> Set[Node]:
    """Nodes from which some good component is reachable."""
    digraph = graph.to_networkx()
    live: Set[Node] = set()
    for component in good_components(graph, node_marks, edge_marks):
        representative = next(iter(component))
        live |= component
        live |= nx.ancestors(digraph, representative)
    return live


def _path_within(graph: LabeledGraph, source: Node, target: Node, allowed: Set[Node]) -> List[Step]:
    """Shortest path inside `allowed`; empty when source == target."""
    if source == target:
        return []
    parent: Dict[Node, Tuple[Node, Label]] = {}
    seen = {source}
    queue = deque([source])
    while queue:
        node = queue.popleft()
        for label, nxt in graph.edges[node]:
            if nxt in seen or nxt not in allowed:
                continue
            seen.add(nxt)
            parent[nxt] = (node, label)
            if nxt == target:
                steps: List[Step] = []
                cur = target
                while cur != source:
                    pred, lab = parent[cur]
                    steps.append((pred, lab, cur))
                    cur = pred
                steps.reverse()
                return steps
            queue.append(nxt)
    raise SearchInvariantError(f"No path from {source!r} to {target!r} inside the component")


def _shortest_cycle(graph: LabeledGraph, anchor: Node, allowed: Set[Node]) -> List[Step]:
    best: Optional[List[Step]] = None
    for label, nxt in graph.edges[anchor]:
        if nxt not in allowed:
            continue
        candidate = [(anchor, label, nxt)] + _path_within(graph, nxt, anchor, allowed)
        if best is None or len(candidate) < len(best):
            best = candidate
    if best is None:
        raise SearchInvariantError(f"Node {anchor!r} lies on no cycle")
    return best


def find_lasso(
    graph: LabeledGraph,
    node_marks: Sequence[NodeMark] = (),
    edge_marks: Sequence[EdgeMark] = (),
) -> Optional[LassoPath]:
    """Stem from the start node plus a cycle meeting every node and edge mark."""
    for component in _components(graph):
        reps = _representatives(graph, component, node_marks, edge_marks)
        if reps is None:
            continue
        node_reps, edge_reps = reps
        if node_reps:
            anchor = node_reps[0]
        elif edge_reps:
            anchor = edge_reps[0][0]
        else:
            anchor = min(component, key=graph.order.__getitem__)
        cycle: List[Step] = []
        position = anchor
        for node in node_reps[1:]:
            cycle += _path_within(graph, position, node, component)
            position = node
        for source, label, target in edge_reps:
            cycle += _path_within(graph, position, source, component)
            cycle.append((source, label, target))
            position = target
        cycle += _path_within(graph, position, anchor, component)
        if not cycle:
            cycle = _shortest_cycle(graph, anchor, component)
        return LassoPath(stem=tuple(graph.path_to(anchor)), cycle=tuple(cycle))
    return None
