"""
Sieves, object sieves and the subobject classifier Ω.
"""

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional

from model.errors import BudgetExceeded, MalformedInput
from model.fincat.category import FinCategory
from model.order import enumerate_down_sets
from model.presheaf.lattice import Subpresheaf, subpresheaf
from model.presheaf.presheaf import Presheaf, PresheafMap, make_presheaf, terminal_presheaf

logger = logging.getLogger(__name__)

DEFAULT_SIEVE_BUDGET = 100000


@dataclass(frozen=True)
class Sieve:
    """Morphisms into ``apex`` closed under precomposition."""
    base: FinCategory = field(compare=False, repr=False)
    apex: str
    members: FrozenSet[int]

    def is_maximal(self) -> bool:
        return self.base.identities[self.apex] in self.members

    def pullback(self, f: int) -> "Sieve":
        """f*S = { g : f∘g ∈ S }, a sieve on dom f."""
        base = self.base
        c = base.dom(f)
        return Sieve(base, c, frozenset(g for g in base.into(c) if int(base.table[f, g]) in self.members))

    def labels(self) -> List[str]:
        return sorted(self.base.label(f) for f in self.members)

    def element_id(self) -> str:
        return "{" + ",".join(self.labels()) + "}"


@dataclass(frozen=True)
class ObjectSieve:
    """A set of objects closed downward along morphisms; the value of a closed sentence."""
    base: FinCategory = field(compare=False, repr=False)
    members: FrozenSet[str]

    def __contains__(self, c: str) -> bool:
        return c in self.members

    def covers_all(self) -> bool:
        return self.members == frozenset(self.base.objects)

    def ordered(self) -> List[str]:
        return [c for c in self.base.objects if c in self.members]


def object_sieve(cat: FinCategory, members: Iterable[str]) -> ObjectSieve:
    """
    Raises:
        MalformedInput: the set is not downward closed
    """
    members = frozenset(cat.check_object(c) for c in members)
    for f in range(cat.n_morphisms):
        if cat.cod(f) in members and cat.dom(f) not in members:
            raise MalformedInput(f"{cat.label(f)} leaves the object sieve {{{', '.join(sorted(members))}}}")
    return ObjectSieve(cat, members)


def object_sieves(cat: FinCategory) -> List[ObjectSieve]:
    """All downward-closed object sets."""
    below = {d: frozenset(e for e in cat.objects if cat.hom(e, d)) for d in cat.objects}
    return [ObjectSieve(cat, s) for s in enumerate_down_sets(cat.objects, below, what="object sieves")]


def _check_budget(count: int, budget: int, what: str) -> None:
    # cached results were built under whatever budget came first
    if count > budget:
        raise BudgetExceeded(f"more than {budget} {what}")


def sieves_on(cat: FinCategory, d: str, budget: int = DEFAULT_SIEVE_BUDGET) -> List[Sieve]:
    """
    Every sieve on d, cached on the category.

    Raises:
        BudgetExceeded: more than ``budget`` sieves
    """
    cat.check_object(d)

    def compute():
        arrows = cat.into(d)
        below = {g: frozenset(int(cat.table[g, h]) for h in cat.into(cat.dom(g))) for g in arrows}
        sets = enumerate_down_sets(arrows, below, budget=budget, what=f"sieves on {d}")
        logger.debug("%d sieves on %s in %s", len(sets), d, cat.name)
        return [Sieve(cat, d, s) for s in sets]

    result = cat.memo(f"sieves:{d}", compute)
    _check_budget(len(result), budget, f"sieves on {d}")
    return result


def maximal_sieve(cat: FinCategory, d: str) -> Sieve:
    return Sieve(cat, d, frozenset(cat.into(d)))


def empty_sieve(cat: FinCategory, d: str) -> Sieve:
    return Sieve(cat, d, frozenset())


def omega(cat: FinCategory, budget: int = DEFAULT_SIEVE_BUDGET) -> Presheaf:
    """The presheaf of sieves; f acts by pullback."""
    def compute():
        stages = {d: sieves_on(cat, d, budget) for d in cat.objects}
        position = {d: {s.members: k for k, s in enumerate(ss)} for d, ss in stages.items()}
        actions = []
        for f in range(cat.n_morphisms):
            c = cat.dom(f)
            actions.append(tuple(position[c][s.pullback(f).members] for s in stages[cat.cod(f)]))
        elements = {d: tuple(s.element_id() for s in ss) for d, ss in stages.items()}
        return make_presheaf(cat, elements, actions, name="Ω", check=False)
    result = cat.memo("omega", compute)
    for d in cat.objects:
        _check_budget(result.size(d), budget, f"sieves on {d}")
    return result


def sieve_index(cat: FinCategory, s: Sieve) -> int:
    """Position of s among sieves_on(cat, s.apex)."""
    positions = cat.memo(f"sieve_positions:{s.apex}",
                         lambda: {t.members: k for k, t in enumerate(sieves_on(cat, s.apex))})
    if s.members in positions:
        return positions[s.members]
    raise MalformedInput(f"{s.element_id()} is not a sieve on {s.apex}")


def characteristic(u: Subpresheaf) -> PresheafMap:
    """χ_u: x at D ↦ { f : x·f ∈ u }."""
    X = u.parent
    cat = X.base
    Omega = omega(cat)
    components = {}
    for d in cat.objects:
        row = []
        for i in range(X.size(d)):
            s = Sieve(cat, d, frozenset(f for f in cat.into(d) if X.restrict(i, f) in u.at(cat.dom(f))))
            row.append(sieve_index(cat, s))
        components[d] = tuple(row)
    return PresheafMap(X, Omega, components, name="χ")


def classified_subobject(chi: PresheafMap) -> Subpresheaf:
    """Inverse of characteristic: the elements sent to maximal sieves."""
    X = chi.source
    cat = X.base
    carrier = {}
    for d in cat.objects:
        sieves = sieves_on(cat, d)
        carrier[d] = {i for i in range(X.size(d)) if sieves[chi.apply(d, i)].is_maximal()}
    return subpresheaf(X, carrier)


def classifying_point(u: ObjectSieve, terminal: Optional[Presheaf] = None) -> PresheafMap:
    """The map 1 → Ω of an object sieve: at D, the sieve of maps whose domain lies in u."""
    cat = u.base
    one = terminal if terminal is not None else terminal_presheaf(cat)
    Omega = omega(cat)
    components = {}
    for d in cat.objects:
        s = Sieve(cat, d, frozenset(f for f in cat.into(d) if cat.dom(f) in u))
        components[d] = (sieve_index(cat, s),)
    return PresheafMap(one, Omega, components, name="point")


def point_to_object_sieve(point: PresheafMap) -> ObjectSieve:
    """Objects at which the point is the maximal sieve."""
    cat = point.source.base
    return ObjectSieve(cat, frozenset(d for d in cat.objects if sieves_on(cat, d)[point.apply(d, 0)].is_maximal()))
