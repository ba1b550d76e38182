"""
Combinatorial characterisations of the bounded-depth sentences and of
internally widespread subterminals, plus the Higgs object.
"""

import logging
from typing import Dict, Optional, Union

from model.fincat.category import FinCategory
from model.fincat.morphisms import iso_mask
from model.fincat.structure import is_extreme
from model.logic.forcing import ForcingEvaluator
from model.logic.formula import ConstSubterminal, ForallOmega, Var, gamma
from model.order import INF, NEG_INF, longest_walks
from model.presheaf.lattice import Subpresheaf, subpresheaf
from model.presheaf.omega import ObjectSieve, classifying_point, omega, sieves_on
from model.presheaf.presheaf import PresheafMap

logger = logging.getLogger(__name__)


def non_iso_depths(cat: FinCategory) -> Dict[str, float]:
    """Longest composable chain of non-isomorphisms ending at each object (INF through a cycle)."""
    def compute():
        iso = iso_mask(cat)
        edges = [(cat.dom(f), cat.cod(f)) for f in range(cat.n_morphisms) if not iso[f]]
        return longest_walks(cat.objects, edges)
    return cat.memo("non_iso_depths", compute)


def ibd_sieve_char(cat: FinCategory, n: Union[int, float]) -> ObjectSieve:
    """
    Objects D such that every chain of n+1 composable maps ending at D
    contains an isomorphism.
    """
    if n == NEG_INF:
        return ObjectSieve(cat, frozenset())
    if n == INF:
        return ObjectSieve(cat, frozenset(cat.objects))
    depths = non_iso_depths(cat)
    return ObjectSieve(cat, frozenset(d for d in cat.objects if depths[d] <= n))


def meaning_sieve(cat: FinCategory, u: ObjectSieve) -> ObjectSieve:
    """Objects D such that every c: C → D has C ∈ u or is an isomorphism."""
    iso = iso_mask(cat)
    return ObjectSieve(cat, frozenset(
        d for d in cat.objects if all(cat.dom(c) in u or iso[c] for c in cat.into(d))
    ))


def internally_widespread(cat: FinCategory, u: ObjectSieve) -> bool:
    """Every object outside u is extreme."""
    return all(is_extreme(cat, c) for c in cat.objects if c not in u)


def widespread_sentence(u: ObjectSieve, label: str = "U"):
    """∀x. γ(x, U)."""
    return ForallOmega("x", gamma(Var("x"), ConstSubterminal(u, label)))


def higgs_sentence():
    """∀x. γ(x, y), with y free."""
    return ForallOmega("x", gamma(Var("x"), Var("y")))


def higgs_object(cat: FinCategory, evaluator: Optional[ForcingEvaluator] = None) -> Subpresheaf:
    """Sieves S on D such that D forces ∀x. γ(x, y) with y bound to S."""
    evaluator = evaluator or ForcingEvaluator(cat)
    Omega = omega(cat)
    phi = higgs_sentence()
    carrier = {}
    for d in cat.objects:
        carrier[d] = {k for k, s in enumerate(sieves_on(cat, d)) if evaluator.forces(d, {"y": s}, phi)}
    return subpresheaf(Omega, carrier)


def factors_through(point: PresheafMap, sub: Subpresheaf) -> bool:
    """Whether a map into sub.parent lands inside sub."""
    return all(point.apply(d, i) in sub.at(d)
               for d in point.source.base.objects for i in range(point.source.size(d)))


def point_factors_through_higgs(cat: FinCategory, u: ObjectSieve, higgs: Optional[Subpresheaf] = None) -> bool:
    higgs = higgs if higgs is not None else higgs_object(cat)
    return factors_through(classifying_point(u), higgs)


def is_boolean_site(cat: FinCategory) -> bool:
    """Every morphism is an isomorphism."""
    return bool(iso_mask(cat).all())


def depth_of_site(cat: FinCategory) -> float:
    """Least n for which every object forces ibd(n); -inf for the empty site."""
    if not cat.objects:
        return NEG_INF
    return max(non_iso_depths(cat).values())
