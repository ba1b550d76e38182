"""
The site of minimal figures, and the level-é site of a category.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from model.errors import HypothesisFailed, TheoremViolation
from model.fincat.category import FinCategory, full_subcategory
from model.fincat.hypotheses import cached_hypotheses
from model.fincat.levels import DEFAULT_LEVEL_BUDGET, enumerate_levels, level_e
from model.fincat.morphisms import mono_mask
from model.fincat.structure import is_preorder, min_full_subcategory, minimal_objects, poset_reflection
from model.geometry.figures import minimal_figures
from model.presheaf.elements import element_name, figure_subcategory
from model.presheaf.presheaf import Presheaf

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MinSite:
    """Full subcategory of the category of elements on the minimal figures."""
    site: FinCategory
    labels: Dict[str, Tuple[str, str]]
    parent: Presheaf

    @property
    def localic(self) -> bool:
        return is_preorder(self.site)

    @property
    def etendue(self) -> bool:
        return bool(mono_mask(self.site).all())

    def poset_reflection(self) -> Dict[str, List[str]]:
        return poset_reflection(self.site)

    def __len__(self) -> int:
        return len(self.site.objects)


def min_site(X: Presheaf) -> MinSite:
    """
    Raises:
        TheoremViolation: some map between minimal figures is not monic
    """
    figures = minimal_figures(X)
    site = figure_subcategory(X, figures, name=f"min(el({X.name}))")
    labels = {element_name(X.elements[c][i], c): (X.elements[c][i], c) for c, i in figures}
    result = MinSite(site=site, labels=labels, parent=X)
    if not result.etendue:
        raise TheoremViolation(f"minimal-figure site of {X.describe()} has a non-monic map")
    logger.debug("min site of %s: %s, localic=%s", X.name, site.describe(), result.localic)
    return result


def level_e_site(cat: FinCategory, level_budget: int = DEFAULT_LEVEL_BUDGET) -> FinCategory:
    """
    The full subcategory on the minimal objects, checked to be the largest
    full subcategory all of whose maps are monic.

    Raises:
        HypothesisFailed: split-epi/mono factorisation or ACC fails for cat
        TheoremViolation: a larger all-monic full subcategory exists
    """
    report = cached_hypotheses(cat)
    if not (report.split_epi_mono_factorization and report.acc):
        raise HypothesisFailed(f"{cat.name} lacks split-epi/mono factorization or ACC", report=report)
    site = min_full_subcategory(cat)
    minimal = set(minimal_objects(cat))
    for c in cat.objects:
        if c in minimal:
            continue
        alone = full_subcategory(cat, [c])
        if mono_mask(alone).all():
            raise TheoremViolation(f"{c} is not minimal but its endomorphisms are all monic")
    if cat.n_morphisms <= level_budget:
        top = level_e(enumerate_levels(cat, level_budget))
        if top is None or top.full_subcategory != frozenset(site.objects):
            raise TheoremViolation(f"level enumeration of {cat.name} disagrees with the minimal subcategory")
    return site
