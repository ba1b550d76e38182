"""
Skeleta and dimension.

Sk_n X is generated by the elements living at objects of height ≤ n: x is in
it when x = y·f for some f: D → E through such an object. Under strong-epi /
mono factorisation the same subpresheaf is obtained from strong epis alone.
"""

import logging
from enum import Enum
from typing import Union

from model.errors import HypothesisFailed, TheoremViolation
from model.fincat.hypotheses import cached_hypotheses
from model.fincat.morphisms import strong_epi_mask
from model.fincat.structure import height_subcategory, heights
from model.order import INF, NEG_INF
from model.presheaf.lattice import Subpresheaf, bottom, generated, subpresheaf, top
from model.presheaf.presheaf import Presheaf

logger = logging.getLogger(__name__)


class SkeletonMethod(str, Enum):
    GENERAL = "general"
    STRONG_EPI = "strong_epi"


def _general(X: Presheaf, n: float) -> Subpresheaf:
    low = set(height_subcategory(X.base, n))
    return generated(X, [(c, i) for c, i in X.iter_elements() if c in low])


def _strong_epi(X: Presheaf, n: float) -> Subpresheaf:
    base = X.base
    report = cached_hypotheses(base)
    if not report.strong_epi_mono_factorization:
        raise HypothesisFailed(f"{base.name} lacks strong-epi/mono factorization", report=report)
    hs = heights(base)
    strong = strong_epi_mask(base)
    carrier = {c: set() for c in base.objects}
    for g in range(base.n_morphisms):
        if strong[g] and hs[base.cod(g)] <= n:
            for j in range(X.size(base.cod(g))):
                carrier[base.dom(g)].add(X.restrict(j, g))
    return subpresheaf(X, carrier)


def skeleton(X: Presheaf, n: Union[int, float],
             method: Union[SkeletonMethod, str] = SkeletonMethod.GENERAL) -> Subpresheaf:
    """Sk_n X for an extended natural n."""
    if n == NEG_INF:
        return bottom(X)
    if n == INF:
        return top(X)
    if SkeletonMethod(method) == SkeletonMethod.STRONG_EPI:
        return _strong_epi(X, n)
    return _general(X, n)


def skeleta_agree(X: Presheaf, n: Union[int, float]) -> bool:
    return skeleton(X, n, SkeletonMethod.GENERAL) == skeleton(X, n, SkeletonMethod.STRONG_EPI)


def dim(X: Presheaf) -> float:
    """Least n with Sk_n X = X; -inf exactly for the empty presheaf."""
    if X.is_empty():
        return NEG_INF
    bound = max(heights(X.base).values())
    for n in range(bound + 1):
        if skeleton(X, n).is_top():
            logger.debug("dim %s = %d", X.name, n)
            return n
    raise TheoremViolation(f"Sk_{bound} of {X.describe()} is not everything")
