"""
Finite colimits of presheaves, computed stagewise.

Coequalizer classes come from connected components of the relation
p(a) ~ q(a) at each stage; a class is named after its least element (in
stage order), so results are reproducible.
"""

import logging
from typing import Dict, List, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from model.errors import MalformedInput, NotNatural
from model.presheaf.presheaf import Presheaf, PresheafMap, compose_maps, make_presheaf

logger = logging.getLogger(__name__)


def _require_natural(*maps: PresheafMap) -> None:
    for m in maps:
        square = m.naturality_failure()
        if square is not None:
            raise NotNatural(f"{m.name or 'map'} is not natural at {square[0]} on element {square[1]}",
                             square=square)


def coproduct(X: Presheaf, Y: Presheaf, name: str = "") -> Tuple[Presheaf, PresheafMap, PresheafMap]:
    """X + Y with element ids ``0.x`` and ``1.y``; returns the sum and both injections."""
    if X.base is not Y.base:
        raise MalformedInput("coproduct of presheaves on different bases")
    base = X.base
    elements = {c: tuple(f"0.{x}" for x in X.elements[c]) + tuple(f"1.{y}" for y in Y.elements[c])
                for c in base.objects}
    actions = []
    for f in range(base.n_morphisms):
        shift = X.size(base.dom(f))
        actions.append(tuple(X.action[f]) + tuple(v + shift for v in Y.action[f]))
    total = make_presheaf(base, elements, actions, name=name or f"{X.name}+{Y.name}", check=False)
    left = PresheafMap(X, total, {c: tuple(range(X.size(c))) for c in base.objects}, name="inl")
    right = PresheafMap(Y, total, {c: tuple(range(X.size(c), X.size(c) + Y.size(c))) for c in base.objects},
                        name="inr")
    return total, left, right


def _classes(n: int, pairs: List[Tuple[int, int]]) -> np.ndarray:
    """Class of each of n points under the equivalence generated by pairs, numbered by least member."""
    if n == 0:
        return np.zeros(0, dtype=int)
    rows = np.array([p for p, _ in pairs], dtype=int)
    cols = np.array([q for _, q in pairs], dtype=int)
    graph = coo_matrix((np.ones(len(pairs), dtype=np.int8), (rows, cols)), shape=(n, n))
    _, labels = connected_components(graph, directed=False)
    # renumber so that class k is the k-th distinct label in element order
    renumber: Dict[int, int] = {}
    for label in labels:
        renumber.setdefault(int(label), len(renumber))
    return np.array([renumber[int(label)] for label in labels], dtype=int)


def coequalizer(p: PresheafMap, q: PresheafMap, name: str = "") -> Tuple[Presheaf, PresheafMap]:
    """
    Coequalizer of p, q: A ⇉ X; returns the quotient and the quotient map.

    Raises:
        MalformedInput: p and q are not parallel
        NotNatural: p or q fails a naturality square
    """
    if p.source is not q.source or p.target is not q.target:
        raise MalformedInput("coequalizer needs two parallel maps")
    _require_natural(p, q)
    A, X = p.source, p.target
    base = X.base

    class_of: Dict[str, np.ndarray] = {}
    representatives: Dict[str, List[int]] = {}
    for c in base.objects:
        pairs = [(p.apply(c, a), q.apply(c, a)) for a in range(A.size(c))]
        class_of[c] = _classes(X.size(c), pairs)
        reps: List[int] = []
        for i, k in enumerate(class_of[c]):
            if k == len(reps):
                reps.append(i)
        representatives[c] = reps

    elements = {c: tuple(X.elements[c][i] for i in representatives[c]) for c in base.objects}
    actions = []
    for f in range(base.n_morphisms):
        c = base.dom(f)
        actions.append(tuple(int(class_of[c][X.restrict(i, f)]) for i in representatives[base.cod(f)]))
    quotient = make_presheaf(base, elements, actions, name=name or f"coeq({X.name})", check=False)
    projection = PresheafMap(X, quotient, {c: tuple(int(k) for k in class_of[c]) for c in base.objects},
                             name="quotient")
    logger.debug("coequalizer %s -> %s", X.describe(), quotient.describe())
    return quotient, projection


def pushout(f: PresheafMap, g: PresheafMap, name: str = "") -> Tuple[Presheaf, PresheafMap, PresheafMap]:
    """
    Pushout of f: A → X and g: A → Y, as the coequalizer of the two maps into X + Y.
    Returns the pushout and the maps from X and from Y.
    """
    if f.source is not g.source:
        raise MalformedInput("pushout needs maps with a common source")
    _require_natural(f, g)
    total, left, right = coproduct(f.target, g.target)
    quotient, projection = coequalizer(compose_maps(left, f), compose_maps(right, g), name=name)
    return quotient, compose_maps(projection, left), compose_maps(projection, right)
