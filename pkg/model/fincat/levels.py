"""
Levels of a presheaf topos as idempotent two-sided ideals of the site.

Ideals are the down-sets of the divisibility preorder (f ⊑ g iff f = a∘g∘b);
the idempotent ones are kept, and each is matched against the full
subcategory on the objects whose identities it contains.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional

from model.errors import BudgetExceeded
from model.fincat.category import FinCategory
from model.fincat.morphisms import mono_mask
from model.order import enumerate_down_sets

logger = logging.getLogger(__name__)

DEFAULT_LEVEL_BUDGET = 40


@dataclass(frozen=True)
class Level:
    """An idempotent ideal, with its generating full subcategory when it has one."""
    ideal: FrozenSet[int]
    full_subcategory: Optional[FrozenSet[str]]
    all_monic: bool = False
    level_e: bool = False

    def to_dict(self, cat: FinCategory) -> Dict:
        return {
            "ideal": sorted(cat.label(f) for f in self.ideal),
            "full_subcategory": None if self.full_subcategory is None
            else [c for c in cat.objects if c in self.full_subcategory],
            "all_monic": self.all_monic,
            "level_e": self.level_e,
        }


def divisors(cat: FinCategory) -> Dict[int, FrozenSet[int]]:
    """Every morphism of the form a∘g∘b, for each g."""
    below: Dict[int, FrozenSet[int]] = {}
    for g in range(cat.n_morphisms):
        left = {int(cat.table[a, g]) for a in cat.out_of(cat.cod(g))}
        below[g] = frozenset(int(cat.table[h, b]) for h in left for b in cat.into(cat.dom(g)))
    return below


def is_idempotent(cat: FinCategory, ideal: FrozenSet[int]) -> bool:
    squares = {int(cat.table[g, f]) for f in ideal for g in ideal if cat.cod(f) == cat.dom(g)}
    return squares == set(ideal)


def generated_by_objects(cat: FinCategory, objects: FrozenSet[str]) -> FrozenSet[int]:
    """Morphisms factoring through one of the given objects."""
    result = set()
    for c in objects:
        for b in cat.into(c):
            for a in cat.out_of(c):
                result.add(int(cat.table[a, b]))
    return frozenset(result)


def enumerate_levels(cat: FinCategory, budget: int = DEFAULT_LEVEL_BUDGET) -> List[Level]:
    """
    All idempotent two-sided ideals of cat.

    Raises:
        BudgetExceeded: cat has more than ``budget`` morphisms
    """
    if cat.n_morphisms > budget:
        raise BudgetExceeded(f"{cat.name or 'category'} has {cat.n_morphisms} morphisms, level budget is {budget}")

    ideals = enumerate_down_sets(range(cat.n_morphisms), divisors(cat), what="ideals")
    mono = mono_mask(cat)
    drafts = []
    for ideal in ideals:
        if not is_idempotent(cat, ideal):
            continue
        objects = frozenset(c for c in cat.objects if cat.identities[c] in ideal)
        generating = objects if generated_by_objects(cat, objects) == ideal else None
        all_monic = generating is not None and all(
            mono[f] for f in range(cat.n_morphisms) if cat.dom(f) in objects and cat.cod(f) in objects
        )
        drafts.append((ideal, generating, all_monic))

    largest = None
    for ideal, generating, all_monic in drafts:
        if all_monic and (largest is None or len(generating) > len(largest)):
            largest = generating

    levels = [
        Level(ideal=ideal, full_subcategory=generating, all_monic=all_monic,
              level_e=all_monic and generating == largest)
        for ideal, generating, all_monic in drafts
    ]
    levels.sort(key=lambda level: (len(level.ideal), sorted(level.ideal)))
    logger.debug("%s: %d ideals, %d levels", cat.name, len(ideals), len(levels))
    return levels


def level_e(levels: List[Level]) -> Optional[Level]:
    for level in levels:
        if level.level_e:
            return level
    return None
