"""
Minimal and preterminal figures, strong regularity and non-singularity.

A figure is an element x ∈ X(C), addressed by (C, index). Every test works
directly on the presheaf: a morphism of the category of elements into (x, C)
is a base map f: B → C, with domain (x·f, B).
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from model.fincat.morphisms import mono_mask
from model.presheaf.presheaf import Presheaf

logger = logging.getLogger(__name__)

Figure = Tuple[str, int]


def figure_label(X: Presheaf, figure: Figure) -> str:
    c, i = figure
    return f"{X.elements[c][i]}@{c}"


def degeneracy_witness(X: Presheaf, c: str, i: int) -> Optional[Tuple[int, int]]:
    """A non-monic f: C → D and y ∈ X(D) with y·f = x, or None when x is minimal."""
    base = X.base
    mono = mono_mask(base)
    for f in base.out_of(c):
        if mono[f]:
            continue
        for j in range(X.size(base.cod(f))):
            if X.restrict(j, f) == i:
                return f, j
    return None


def is_minimal_element(X: Presheaf, c: str, i: int) -> bool:
    return degeneracy_witness(X, c, i) is None


def minimal_figures(X: Presheaf) -> List[Figure]:
    return [(c, i) for c, i in X.iter_elements() if is_minimal_element(X, c, i)]


def minimal_elements(X: Presheaf) -> List[Tuple[str, str]]:
    """Minimal figures as (element id, object) pairs."""
    return [(X.elements[c][i], c) for c, i in minimal_figures(X)]


def collapsing_pair(X: Presheaf, c: str, i: int) -> Optional[Tuple[int, int]]:
    """Distinct parallel g, h: B → C with x·g = x·h, or None when x is preterminal."""
    base = X.base
    for b in base.objects:
        seen = {}
        for g in base.hom(b, c):
            value = X.restrict(i, g)
            if value in seen:
                return seen[value], g
            seen[value] = g
    return None


def is_preterminal_element(X: Presheaf, c: str, i: int) -> bool:
    return collapsing_pair(X, c, i) is None


def preterminal_figures(X: Presheaf) -> List[Figure]:
    return [(c, i) for c, i in X.iter_elements() if is_preterminal_element(X, c, i)]


def preterminal_elements(X: Presheaf) -> List[Tuple[str, str]]:
    return [(X.elements[c][i], c) for c, i in preterminal_figures(X)]


def is_preterminal_by_coequalizers(X: Presheaf, c: str, i: int) -> bool:
    """
    Minimal, and every parallel pair g, h into (x, C) is coequalised by some
    map k out of (x, C): k∘g = k∘h.
    """
    if not is_minimal_element(X, c, i):
        return False
    base = X.base
    outgoing = [k for k in base.out_of(c)
                if any(X.restrict(j, k) == i for j in range(X.size(base.cod(k))))]
    for b in base.objects:
        arrows = base.hom(b, c)
        for g in arrows:
            for h in arrows:
                if g >= h or X.restrict(i, g) != X.restrict(i, h):
                    continue
                if not any(int(base.table[k, g]) == int(base.table[k, h]) for k in outgoing):
                    return False
    return True


def is_figure_mono(X: Presheaf, c: str, i: int, f: int) -> bool:
    """
    Whether f: B → C, seen as (x·f, B) → (x, C), is monic in the category of
    elements: no distinct a, b: A → B with w·a = w·b but f∘a = f∘b.
    """
    base = X.base
    b = base.dom(f)
    w = X.restrict(i, f)
    for a_obj in base.objects:
        arrows = base.hom(a_obj, b)
        for p in arrows:
            for q in arrows:
                if p < q and X.restrict(w, p) == X.restrict(w, q) and base.table[f, p] == base.table[f, q]:
                    return False
    return True


@dataclass
class RegularityReport:
    strongly_regular: bool
    non_singular: bool
    strong_regularity_witness: Optional[Tuple[str, str, str]] = None
    singularity_witness: Optional[Tuple[str, str, str]] = None
    subpreterminal_violations: List[Tuple[str, str, str]] = field(default_factory=list)


def strong_regularity_witness(X: Presheaf) -> Optional[Tuple[str, str, str]]:
    """(map, non-minimal domain figure, minimal codomain figure) of a failing mono, or None."""
    base = X.base
    for c, i in minimal_figures(X):
        for f in base.into(c):
            b, w = base.dom(f), X.restrict(i, f)
            if is_figure_mono(X, c, i, f) and not is_minimal_element(X, b, w):
                return base.label(f), figure_label(X, (b, w)), figure_label(X, (c, i))
    return None


def singularity_witness(X: Presheaf) -> Optional[Tuple[str, str, str]]:
    """(minimal figure, g, h) with g ≠ h collapsed by the figure, or None."""
    base = X.base
    for c, i in minimal_figures(X):
        pair = collapsing_pair(X, c, i)
        if pair is not None:
            return figure_label(X, (c, i)), base.label(pair[0]), base.label(pair[1])
    return None


def is_strongly_regular(X: Presheaf) -> bool:
    """Every monic figure map with minimal codomain has minimal domain."""
    return strong_regularity_witness(X) is None


def is_non_singular(X: Presheaf) -> bool:
    """Every minimal figure is preterminal."""
    return singularity_witness(X) is None


def subpreterminal_violations(X: Presheaf) -> List[Tuple[str, str, str]]:
    """Figure monos into a preterminal figure whose domain is not preterminal; always empty."""
    base = X.base
    violations = []
    for c, i in preterminal_figures(X):
        for f in base.into(c):
            b, w = base.dom(f), X.restrict(i, f)
            if is_figure_mono(X, c, i, f) and not is_preterminal_element(X, b, w):
                violations.append((base.label(f), figure_label(X, (b, w)), figure_label(X, (c, i))))
    return violations


def regularity_report(X: Presheaf) -> RegularityReport:
    strong = strong_regularity_witness(X)
    singular = singularity_witness(X)
    return RegularityReport(
        strongly_regular=strong is None,
        non_singular=singular is None,
        strong_regularity_witness=strong,
        singularity_witness=singular,
        subpreterminal_violations=subpreterminal_violations(X),
    )
