"""
Widespread elements of an enumerated subobject lattice.

Three independent procedures: the definition (the up-set of w is a
complemented lattice), the γ-criterion (⊤ = v ∨ (v ⇒ w) for every v), and,
for sieves on a representable, the section criterion (every map outside w
has a section).
"""

import logging
from enum import Enum
from typing import Dict, Optional

from model.errors import MalformedInput, TheoremViolation
from model.fincat.category import FinCategory
from model.presheaf.lattice import SubobjectLattice, Subpresheaf, gamma
from model.presheaf.presheaf import yoneda

logger = logging.getLogger(__name__)


class WidespreadProcedure(str, Enum):
    DEFINITION = "definition"
    GAMMA = "gamma"
    SECTIONS = "sections"


def widespread_by_definition(lattice: SubobjectLattice, w: Subpresheaf) -> bool:
    """Every v ≥ w has a complement relative to [w, ⊤]."""
    up = lattice.up_set(w)
    return all(lattice.complement_in(v, up, w, lattice.top) is not None for v in up)


def widespread_by_gamma(lattice: SubobjectLattice, w: Subpresheaf) -> bool:
    lattice.check(w)
    return all(gamma(v, w).is_top() for v in lattice)


def representable_apex(cat: FinCategory, lattice: SubobjectLattice) -> Optional[str]:
    """The object c when the lattice's presheaf is cat(-, c) with morphism-label elements."""
    X = lattice.parent
    if X.base is not cat:
        return None
    for c in cat.objects:
        if all(X.elements[d] == tuple(cat.label(g) for g in cat.hom(d, c)) for d in cat.objects):
            if X.action == yoneda(cat, c).action:
                return c
    return None


def widespread_by_sections(cat: FinCategory, lattice: SubobjectLattice, w: Subpresheaf) -> bool:
    """
    For a sieve w on c (a subobject of cat(-, c)): every f ∉ w has a section.

    Raises:
        MalformedInput: the lattice is not that of a representable
    """
    lattice.check(w)
    c = representable_apex(cat, lattice)
    if c is None:
        raise MalformedInput("the section criterion needs the subobject lattice of a representable")
    for d in cat.objects:
        for i, f in enumerate(cat.hom(d, c)):
            if i in w.at(d):
                continue
            if not any(int(cat.table[f, s]) == cat.identities[c] for s in cat.hom(c, d)):
                return False
    return True


def widespread_element(lattice: SubobjectLattice, w: Subpresheaf,
                       cat: Optional[FinCategory] = None) -> Dict[str, bool]:
    """
    Run every applicable procedure and check that they agree.

    Returns:
        verdict per procedure name

    Raises:
        NotInLattice: w is not a member of the lattice
        TheoremViolation: the procedures disagree
    """
    lattice.check(w)
    verdicts = {
        WidespreadProcedure.DEFINITION.value: widespread_by_definition(lattice, w),
        WidespreadProcedure.GAMMA.value: widespread_by_gamma(lattice, w),
    }
    if cat is not None and representable_apex(cat, lattice) is not None:
        verdicts[WidespreadProcedure.SECTIONS.value] = widespread_by_sections(cat, lattice, w)
    if len(set(verdicts.values())) > 1:
        raise TheoremViolation(f"widespread procedures disagree on {w.describe()}: {verdicts}")
    return verdicts


def is_widespread(lattice: SubobjectLattice, w: Subpresheaf, cat: Optional[FinCategory] = None) -> bool:
    return next(iter(widespread_element(lattice, w, cat).values()))
