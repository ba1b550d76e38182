"""
Category of elements.

Objects are named ``x@C`` for x ∈ X(C); a morphism (x, C) → (y, D) is a base
morphism f: C → D with y·f = x, labelled ``f|x@C->y@D``.
"""

import logging
from typing import Dict, Iterable, List, Optional, Tuple

from model.errors import MalformedInput
from model.fincat.category import FinCategory, build_category
from model.presheaf.presheaf import Presheaf

logger = logging.getLogger(__name__)

RESERVED = ("@", "|", "->")


def element_name(x: str, c: str) -> str:
    return f"{x}@{c}"


def split_element_name(name: str) -> Tuple[str, str]:
    x, c = name.rsplit("@", 1)
    return x, c


def _check_separators(X: Presheaf, chosen: Iterable[Tuple[str, int]]) -> None:
    """
    Raises:
        MalformedInput: a chosen element id or its object uses a separator of the label scheme
    """
    for c, i in chosen:
        for name in (X.elements[c][i], c):
            if any(token in name for token in RESERVED):
                raise MalformedInput(f"element {X.elements[c][i]!r} at {c}: {name!r} contains one of {RESERVED}")
    for f in range(X.base.n_morphisms):
        if "|" in X.base.label(f):
            raise MalformedInput(f"morphism label {X.base.label(f)!r} contains '|'")


def figure_subcategory(X: Presheaf, figures: Iterable[Tuple[str, int]], name: Optional[str] = None) -> FinCategory:
    """Full subcategory of the category of elements on the given (object, index) figures."""
    base = X.base
    chosen = set(figures)
    _check_separators(X, chosen)
    objects = [element_name(X.elements[c][i], c) for c in base.objects for i in range(X.size(c)) if (c, i) in chosen]
    morphisms: List[Tuple[str, str, str]] = []
    underlying: Dict[str, Tuple[int, str, str]] = {}
    for f in range(base.n_morphisms):
        c, d = base.dom(f), base.cod(f)
        for j in range(X.size(d)):
            i = X.restrict(j, f)
            if (d, j) not in chosen or (c, i) not in chosen:
                continue
            source, target = element_name(X.elements[c][i], c), element_name(X.elements[d][j], d)
            label = f"{base.label(f)}|{source}->{target}"
            morphisms.append((label, source, target))
            underlying[label] = (f, source, target)
    identities = {}
    for c in base.objects:
        for i in range(X.size(c)):
            if (c, i) in chosen:
                figure = element_name(X.elements[c][i], c)
                identities[figure] = f"{base.label(base.identities[c])}|{figure}->{figure}"

    def composite(outer: str, inner: str) -> str:
        g, _, target = underlying[outer]
        f, source, _ = underlying[inner]
        return f"{base.label(base.compose(g, f))}|{source}->{target}"

    category = build_category(name or f"el({X.name})", objects, morphisms, identities, composite)
    logger.debug("figure category %s", category.describe())
    return category


def elements_category(X: Presheaf) -> FinCategory:
    return figure_subcategory(X, X.iter_elements())


def underlying_morphism(X: Presheaf, label: str) -> int:
    """Base morphism id beneath a morphism label of elements_category(X)."""
    return X.base.index(label.split("|", 1)[0])
