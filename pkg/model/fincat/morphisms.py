"""
Morphism classification and epi/mono factorisation.

All flags are computed from their definitions over the composition table:
mono/epi by injectivity of post/pre-composition, split flags by section and
retraction search, strong epi by diagonal fillers against every monomorphism.
"""

import logging
from dataclasses import dataclass, asdict
from enum import Enum
from typing import Dict, List, Tuple, Union

import numpy as np

from model.errors import NoFactorization
from model.fincat.category import FinCategory

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MorphismClass:
    """Classification flags of a single morphism."""
    mono: bool
    epi: bool
    split_mono: bool
    split_epi: bool
    strong_epi: bool
    iso: bool

    def to_dict(self) -> Dict[str, bool]:
        return asdict(self)


class FactorizationMode(str, Enum):
    SPLIT_EPI = "split_epi"
    STRONG_EPI = "strong_epi"


# ---- masks -------------------------------------------------------------------

def _distinct(values: np.ndarray) -> bool:
    return len(np.unique(values)) == len(values)


def mono_mask(cat: FinCategory) -> np.ndarray:
    """f is monic iff h ↦ f∘h is injective on morphisms into dom f."""
    def compute():
        mask = np.zeros(cat.n_morphisms, dtype=bool)
        for f in range(cat.n_morphisms):
            hs = np.array(cat.into(cat.dom(f)), dtype=int)
            mask[f] = _distinct(cat.table[f, hs])
        return mask
    return cat.memo("mono", compute)


def epi_mask(cat: FinCategory) -> np.ndarray:
    """f is epic iff g ↦ g∘f is injective on morphisms out of cod f."""
    def compute():
        mask = np.zeros(cat.n_morphisms, dtype=bool)
        for f in range(cat.n_morphisms):
            gs = np.array(cat.out_of(cat.cod(f)), dtype=int)
            mask[f] = _distinct(cat.table[gs, f])
        return mask
    return cat.memo("epi", compute)


def split_epi_mask(cat: FinCategory) -> np.ndarray:
    def compute():
        mask = np.zeros(cat.n_morphisms, dtype=bool)
        for f in range(cat.n_morphisms):
            sections = np.array(cat.hom(cat.cod(f), cat.dom(f)), dtype=int)
            if len(sections):
                mask[f] = bool(np.any(cat.table[f, sections] == cat.identities[cat.cod(f)]))
        return mask
    return cat.memo("split_epi", compute)


def split_mono_mask(cat: FinCategory) -> np.ndarray:
    def compute():
        mask = np.zeros(cat.n_morphisms, dtype=bool)
        for f in range(cat.n_morphisms):
            retractions = np.array(cat.hom(cat.cod(f), cat.dom(f)), dtype=int)
            if len(retractions):
                mask[f] = bool(np.any(cat.table[retractions, f] == cat.identities[cat.dom(f)]))
        return mask
    return cat.memo("split_mono", compute)


def iso_mask(cat: FinCategory) -> np.ndarray:
    def compute():
        mask = np.zeros(cat.n_morphisms, dtype=bool)
        for f in range(cat.n_morphisms):
            inverses = np.array(cat.hom(cat.cod(f), cat.dom(f)), dtype=int)
            if len(inverses):
                left = cat.table[inverses, f] == cat.identities[cat.dom(f)]
                right = cat.table[f, inverses] == cat.identities[cat.cod(f)]
                mask[f] = bool(np.any(left & right))
        return mask
    return cat.memo("iso", compute)


def monos(cat: FinCategory) -> Tuple[int, ...]:
    return cat.memo("mono_list", lambda: tuple(int(f) for f in np.nonzero(mono_mask(cat))[0]))


def is_left_orthogonal_to_monos(cat: FinCategory, f: int) -> bool:
    """
    Diagonal filler test: for every mono m: A→B and every commutative square
    m∘u = v∘f there is d: cod f→A with d∘f = u and m∘d = v.
    """
    source, target = cat.dom(f), cat.cod(f)
    for m in monos(cat):
        a, b = cat.dom(m), cat.cod(m)
        diagonals = cat.hom(target, a)
        # m is monic, so a filler is determined by m∘d
        filler_by_image = {int(cat.table[m, d]): d for d in diagonals}
        for u in cat.hom(source, a):
            mu = int(cat.table[m, u])
            for v in cat.hom(target, b):
                if int(cat.table[v, f]) != mu:
                    continue
                d = filler_by_image.get(v)
                if d is None or int(cat.table[d, f]) != u:
                    return False
    return True


def strong_epi_mask(cat: FinCategory, audit: bool = False) -> np.ndarray:
    """
    Strong epis: epis left orthogonal to every mono.

    Split epis are strong, so unless ``audit`` is set the filler search only
    runs on epis without a section.
    """
    def compute():
        epis, split = epi_mask(cat), split_epi_mask(cat)
        mask = np.zeros(cat.n_morphisms, dtype=bool)
        for f in range(cat.n_morphisms):
            if not epis[f]:
                continue
            if split[f] and not audit:
                mask[f] = True
            else:
                mask[f] = is_left_orthogonal_to_monos(cat, f)
        return mask
    return cat.memo("strong_epi_audit" if audit else "strong_epi", compute)


def classify_morphism(cat: FinCategory, f: Union[int, str], audit: bool = False) -> MorphismClass:
    """Classification flags of f (given by dense id or label)."""
    f = cat.index(f) if isinstance(f, str) else cat.check_morphism(f)
    return MorphismClass(
        mono=bool(mono_mask(cat)[f]),
        epi=bool(epi_mask(cat)[f]),
        split_mono=bool(split_mono_mask(cat)[f]),
        split_epi=bool(split_epi_mask(cat)[f]),
        strong_epi=bool(strong_epi_mask(cat, audit)[f]),
        iso=bool(iso_mask(cat)[f]),
    )


def is_mono(cat: FinCategory, f: int) -> bool:
    return bool(mono_mask(cat)[f])


def is_iso(cat: FinCategory, f: int) -> bool:
    return bool(iso_mask(cat)[f])


def is_strong_epi(cat: FinCategory, f: int) -> bool:
    return bool(strong_epi_mask(cat)[f])


# ---- factorisation -----------------------------------------------------------

def _epi_class(cat: FinCategory, mode: FactorizationMode) -> np.ndarray:
    return split_epi_mask(cat) if mode == FactorizationMode.SPLIT_EPI else strong_epi_mask(cat)


def factorize(cat: FinCategory, f: Union[int, str],
              mode: Union[FactorizationMode, str] = FactorizationMode.SPLIT_EPI) -> Tuple[int, int]:
    """
    Factor f as m∘e with m monic and e in the requested epi class.

    Returns:
        (e, m), the lexicographically smallest pair in morphism-id order.

    Raises:
        NoFactorization: no such pair exists for f.
    """
    f = cat.index(f) if isinstance(f, str) else cat.check_morphism(f)
    mode = FactorizationMode(mode)
    epis, mono = _epi_class(cat, mode), mono_mask(cat)
    target = cat.cod(f)
    for e in cat.out_of(cat.dom(f)):
        if not epis[e]:
            continue
        for m in cat.hom(cat.cod(e), target):
            if mono[m] and int(cat.table[m, e]) == f:
                return e, m
    raise NoFactorization(f"{cat.label(f)} has no {mode.value}/mono factorization", morphism=cat.label(f))


def factorization_failures(cat: FinCategory, mode: Union[FactorizationMode, str]) -> List[int]:
    """Morphisms that admit no factorisation of the given kind."""
    failures = []
    for f in range(cat.n_morphisms):
        try:
            factorize(cat, f, mode)
        except NoFactorization:
            failures.append(f)
    return failures
