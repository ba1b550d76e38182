"""
Order-theoretic helpers shared by the category, presheaf and logic packages.

Sieves on an object, subpresheaves of a presheaf and two-sided ideals of a
category are all down-sets of a finite preorder; chain conditions (height,
bounded depth, ACC, well-foundedness) are all longest-walk questions on a
finite directed graph. Both live here.
"""

import logging
import math
from graphlib import TopologicalSorter
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from model.errors import BudgetExceeded

logger = logging.getLogger(__name__)

INF = math.inf
NEG_INF = -math.inf


def enumerate_down_sets(items: Sequence[Hashable],
                        below: Mapping[Hashable, FrozenSet[Hashable]],
                        budget: Optional[int] = None,
                        what: str = "down-sets") -> List[FrozenSet[Hashable]]:
    """
    Enumerate every down-set of a finite preorder.

    Args:
        items: the carrier, in the order decisions are made
        below: principal down-closure of each item (must contain the item)
        budget: refuse once more than this many down-sets have been produced
        what: noun used in the BudgetExceeded message

    Returns:
        Each down-set exactly once, depth-first with "include" explored first.
    """
    items = list(items)
    above: Dict[Hashable, FrozenSet[Hashable]] = {
        i: frozenset(j for j in items if i in below[j]) for i in items
    }
    results: List[FrozenSet[Hashable]] = []
    stack: List[Tuple[int, FrozenSet[Hashable], FrozenSet[Hashable]]] = [(0, frozenset(), frozenset())]

    while stack:
        k, included, excluded = stack.pop()
        while k < len(items) and (items[k] in included or items[k] in excluded):
            k += 1
        if k == len(items):
            results.append(included)
            if budget is not None and len(results) > budget:
                raise BudgetExceeded(f"more than {budget} {what}")
            continue
        item = items[k]
        # pushed in reverse so that "include" is explored first
        if not (above[item] & included):
            stack.append((k + 1, included, excluded | above[item]))
        if not (below[item] & excluded):
            stack.append((k + 1, included | below[item], excluded))

    logger.debug("enumerated %d %s over %d items", len(results), what, len(items))
    return results


def strongly_connected(nodes: Sequence[Hashable],
                       edges: Iterable[Tuple[Hashable, Hashable]]) -> Tuple[Dict[Hashable, int], np.ndarray]:
    """Label strongly connected components; returns (component of node, component sizes)."""
    index = {node: i for i, node in enumerate(nodes)}
    pairs = [(index[u], index[v]) for u, v in edges]
    n = len(nodes)
    if n == 0:
        return {}, np.zeros(0, dtype=int)
    rows = np.array([p[0] for p in pairs], dtype=int)
    cols = np.array([p[1] for p in pairs], dtype=int)
    graph = csr_matrix((np.ones(len(pairs), dtype=np.int8), (rows, cols)), shape=(n, n))
    _, labels = connected_components(graph, directed=True, connection="strong")
    sizes = np.bincount(labels, minlength=labels.max() + 1)
    return {node: int(labels[index[node]]) for node in nodes}, sizes


def longest_walks(nodes: Sequence[Hashable],
                  edges: Iterable[Tuple[Hashable, Hashable]]) -> Dict[Hashable, float]:
    """
    Supremum of the lengths (edge counts) of walks ending at each node.

    A node receives INF exactly when some walk into it passes through a cycle
    (a self-loop counts); otherwise the value is the longest path length.
    """
    edges = sorted(set(edges), key=repr)
    component, sizes = strongly_connected(nodes, edges)
    cyclic = {v for v in nodes if sizes[component[v]] > 1}
    cyclic |= {u for u, v in edges if u == v}

    predecessors: Dict[Hashable, set] = {v: set() for v in nodes}
    for u, v in edges:
        predecessors[v].add(u)

    # forward closure of the cyclic part
    successors: Dict[Hashable, set] = {v: set() for v in nodes}
    for u, v in edges:
        successors[u].add(v)
    infinite = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        u = frontier.pop()
        for v in successors[u]:
            if v not in infinite:
                infinite.add(v)
                frontier.append(v)

    lengths: Dict[Hashable, float] = {v: INF for v in infinite}
    finite = [v for v in nodes if v not in infinite]
    sorter = TopologicalSorter({v: {u for u in predecessors[v] if u not in infinite} for v in finite})
    for v in sorter.static_order():
        preds = [lengths[u] for u in predecessors[v] if u not in infinite]
        lengths[v] = 1 + max(preds) if preds else 0
    return lengths


def format_extended(value: float) -> str:
    """Render an extended natural: -inf, inf or a plain integer."""
    if value == NEG_INF:
        return "-inf"
    if value == INF:
        return "inf"
    return str(int(value))


def parse_extended(text: str) -> float:
    """Inverse of format_extended; integers come back as int."""
    token = text.strip().lower()
    if token in ("-inf", "-∞"):
        return NEG_INF
    if token in ("inf", "∞", "+inf"):
        return INF
    value = int(token)
    if value < 0:
        raise ValueError(f"extended natural must be -inf, inf or >= 0, got {text}")
    return value


def to_json_extended(value: float):
    """JSON form of an extended natural: an integer, or the strings "-inf"/"inf"."""
    return format_extended(value) if value in (NEG_INF, INF) else int(value)


def from_json_extended(value) -> float:
    return parse_extended(value) if isinstance(value, str) else int(value)


def minimum_satisfying(predicate: Callable[[int], bool], upper: int) -> Optional[int]:
    """Least n in 0..upper with predicate(n), or None."""
    for n in range(upper + 1):
        if predicate(n):
            return n
    return None
