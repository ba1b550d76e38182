"""
Object-level structure of a finite category: iso-classes, heights, extreme and
minimal objects, and the full subcategories built from them.
"""

import logging
from typing import Dict, List, Optional, Tuple

from model.errors import TheoremViolation
from model.fincat.category import FinCategory, build_category, full_subcategory
from model.fincat.morphisms import iso_mask, mono_mask
from model.order import INF, longest_walks

logger = logging.getLogger(__name__)


def iso_classes(cat: FinCategory) -> Dict[str, str]:
    """Representative (first object in list order) of each object's iso-class."""
    def compute():
        iso = iso_mask(cat)
        rep: Dict[str, str] = {}
        for c in cat.objects:
            if c in rep:
                continue
            rep[c] = c
            for f in cat.out_of(c):
                if iso[f]:
                    rep.setdefault(cat.cod(f), c)
        return rep
    return cat.memo("iso_classes", compute)


def non_iso_mono_edges(cat: FinCategory) -> List[Tuple[str, str]]:
    mono, iso = mono_mask(cat), iso_mask(cat)
    return [(cat.dom(f), cat.cod(f)) for f in range(cat.n_morphisms) if mono[f] and not iso[f]]


def heights(cat: FinCategory) -> Dict[str, float]:
    """
    Height of every object: the longest chain of non-iso monos ending there.

    In a finite category non-iso monos cannot close a cycle, so every value is
    finite; an infinite value means the composition table is not a finite
    category and is reported as a TheoremViolation.
    """
    def compute():
        values = longest_walks(cat.objects, non_iso_mono_edges(cat))
        broken = [c for c, v in values.items() if v == INF]
        if broken:
            raise TheoremViolation(f"non-iso monos form a cycle through {', '.join(broken)}")
        return {c: int(v) for c, v in values.items()}
    return cat.memo("heights", compute)


def height(cat: FinCategory, c: str) -> int:
    cat.check_object(c)
    return heights(cat)[c]


def is_extreme(cat: FinCategory, c: str) -> bool:
    """Every map out of c is an isomorphism."""
    iso = iso_mask(cat)
    return all(iso[f] for f in cat.out_of(c))


def is_minimal_object(cat: FinCategory, c: str) -> bool:
    """Every map out of c is monic."""
    mono = mono_mask(cat)
    return all(mono[f] for f in cat.out_of(c))


def minimal_objects(cat: FinCategory) -> List[str]:
    return [c for c in cat.objects if is_minimal_object(cat, c)]


def extreme_objects(cat: FinCategory) -> List[str]:
    return [c for c in cat.objects if is_extreme(cat, c)]


def min_full_subcategory(cat: FinCategory) -> FinCategory:
    """The full subcategory on the minimal objects; all of its maps are monic in cat."""
    def compute():
        sub = full_subcategory(cat, minimal_objects(cat), name=f"min({cat.name})" if cat.name else "min")
        mono = mono_mask(cat)
        for m in sub.morphisms:
            if not mono[cat.index(m.id)]:
                raise TheoremViolation(f"{m.id} in the minimal subcategory is not monic")
        return sub
    return cat.memo("min_full_subcategory", compute)


def monic_endomorphisms_are_isos(cat: FinCategory) -> List[int]:
    """Monic endomorphisms that are not isos; always empty for a finite category."""
    mono, iso = mono_mask(cat), iso_mask(cat)
    return [f for f in range(cat.n_morphisms) if cat.dom(f) == cat.cod(f) and mono[f] and not iso[f]]


def height_subcategory(cat: FinCategory, n: float) -> List[str]:
    """Objects of height at most n, in object order."""
    hs = heights(cat)
    return [c for c in cat.objects if hs[c] <= n]


def terminal_object(cat: FinCategory) -> Optional[str]:
    """First object receiving exactly one morphism from every object, if any."""
    for t in cat.objects:
        if all(len(cat.hom(d, t)) == 1 for d in cat.objects):
            return t
    return None


def is_preorder(cat: FinCategory) -> bool:
    """At most one morphism between any two objects."""
    return all(len(cat.hom(a, b)) <= 1 for a in cat.objects for b in cat.objects)


def poset_reflection(cat: FinCategory) -> Dict[str, List[str]]:
    """Objects reachable by a morphism from each object (including itself)."""
    return {a: [b for b in cat.objects if cat.hom(a, b)] for a in cat.objects}


def slice_category(cat: FinCategory, c: str) -> FinCategory:
    """
    The slice cat/c: objects are morphisms into c (named by their labels),
    a morphism f → g is some h with g∘h = f, labelled ``h:f->g``.
    """
    cat.check_object(c)
    arrows = cat.into(c)
    objects = [cat.label(f) for f in arrows]
    morphisms = []
    underlying: Dict[str, int] = {}
    for f in arrows:
        for g in arrows:
            for h in cat.hom(cat.dom(f), cat.dom(g)):
                if int(cat.table[g, h]) == f:
                    label = f"{cat.label(h)}:{cat.label(f)}->{cat.label(g)}"
                    morphisms.append((label, cat.label(f), cat.label(g)))
                    underlying[label] = h
    identities = {
        cat.label(f): f"{cat.label(cat.identities[cat.dom(f)])}:{cat.label(f)}->{cat.label(f)}" for f in arrows
    }
    record = {label: (dom, cod) for label, dom, cod in morphisms}

    def composite(outer: str, inner: str) -> str:
        h = cat.compose(underlying[outer], underlying[inner])
        return f"{cat.label(h)}:{record[inner][0]}->{record[outer][1]}"

    return build_category(f"{cat.name}/{c}", objects, morphisms, identities, composite)
