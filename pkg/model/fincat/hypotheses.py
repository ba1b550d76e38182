"""
Site hypotheses: epi/mono factorisations, ACC on monos and well-foundedness
on strong epis, each decided from its definition with counterexample
witnesses.
"""

import logging
from dataclasses import dataclass, field, asdict
from typing import Any, Dict, List, Optional

import numpy as np

from model.fincat.category import FinCategory
from model.fincat.morphisms import (FactorizationMode, factorization_failures, iso_mask, mono_mask,
                                    strong_epi_mask)
from model.fincat.structure import iso_classes

logger = logging.getLogger(__name__)


@dataclass
class HypothesisReport:
    """Outcome of check_hypotheses; witnesses are keyed by the failing flag."""
    split_epi_mono_factorization: bool
    strong_epi_mono_factorization: bool
    acc: bool
    well_founded: bool
    witnesses: Dict[str, List[Any]] = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return (self.split_epi_mono_factorization and self.strong_epi_mono_factorization
                and self.acc and self.well_founded)

    def failed(self) -> List[str]:
        return [name for name in ("split_epi_mono_factorization", "strong_epi_mono_factorization",
                                  "acc", "well_founded") if not getattr(self, name)]

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def long_chain(cat: FinCategory, allowed: np.ndarray, length: int) -> Optional[List[int]]:
    """
    A composable chain f_1, ..., f_length of allowed morphisms (cod f_i = dom f_{i+1}),
    or None. Bounded breadth-first search, one witness chain per end object.
    """
    if length <= 0:
        return []
    candidates = [f for f in range(cat.n_morphisms) if allowed[f]]
    ending: Dict[str, List[int]] = {}
    for f in candidates:
        ending.setdefault(cat.cod(f), [f])
    for _ in range(length - 1):
        extended: Dict[str, List[int]] = {}
        for f in candidates:
            chain = ending.get(cat.dom(f))
            if chain is not None and cat.cod(f) not in extended:
                extended[cat.cod(f)] = chain + [f]
        if not extended:
            return None
        ending = extended
    for c in cat.objects:
        if c in ending:
            return ending[c]
    return None


def check_hypotheses(cat: FinCategory) -> HypothesisReport:
    """
    Decide the four site hypotheses for a finite category.

    Chain searches stop at (number of iso-classes + 1) steps: a longer chain of
    non-isos repeats an iso-class and so exists for every length.
    """
    witnesses: Dict[str, List[Any]] = {}

    split_failures = factorization_failures(cat, FactorizationMode.SPLIT_EPI)
    if split_failures:
        witnesses["split_epi_mono_factorization"] = [cat.label(f) for f in split_failures]
    strong_failures = factorization_failures(cat, FactorizationMode.STRONG_EPI)
    if strong_failures:
        witnesses["strong_epi_mono_factorization"] = [cat.label(f) for f in strong_failures]

    bound = len(set(iso_classes(cat).values())) + 1
    iso = iso_mask(cat)
    mono_chain = long_chain(cat, mono_mask(cat) & ~iso, bound)
    if mono_chain is not None:
        witnesses["acc"] = [cat.label(f) for f in mono_chain]
    epi_chain = long_chain(cat, strong_epi_mask(cat) & ~iso, bound)
    if epi_chain is not None:
        witnesses["well_founded"] = [cat.label(f) for f in epi_chain]

    report = HypothesisReport(
        split_epi_mono_factorization=not split_failures,
        strong_epi_mono_factorization=not strong_failures,
        acc=mono_chain is None,
        well_founded=epi_chain is None,
        witnesses=witnesses,
    )
    logger.debug("hypotheses of %s: failed=%s", cat.name, report.failed())
    return report


def cached_hypotheses(cat: FinCategory) -> HypothesisReport:
    """check_hypotheses, memoised on the category."""
    return cat.memo("hypotheses", lambda: check_hypotheses(cat))
