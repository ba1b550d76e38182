"""
Depth, minimal covers and the dimension theorem verifier.

dim X ≤ n is compared with IBD_n on the site of minimal figures: the forward
direction holds for every presheaf over a hypothesis-satisfying base, the
converse under strong regularity.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from model.errors import HypothesisFailed, TheoremViolation, UnknownElement
from model.fincat.hypotheses import cached_hypotheses
from model.fincat.morphisms import strong_epi_mask
from model.fincat.structure import heights
from model.geometry.figures import is_minimal_element, minimal_figures, regularity_report
from model.geometry.minsite import MinSite, min_site
from model.geometry.skeleton import dim as dimension
from model.logic.characterizations import depth_of_site, ibd_sieve_char
from model.logic.forcing import ForcingEvaluator, satisfies
from model.logic.formula import ibd
from model.order import INF, NEG_INF, from_json_extended, to_json_extended
from model.presheaf.presheaf import Presheaf

logger = logging.getLogger(__name__)

EQUIVALENT = "equivalent"
ONE_WAY_ONLY = "one_way_only"


def depth(X: Presheaf, cross_check: bool = True, site: Optional[MinSite] = None) -> float:
    """
    Least n such that IBD_n holds on the minimal-figure site; -inf for the
    empty presheaf.

    Raises:
        TheoremViolation: the chain characterisation and forcing disagree
    """
    site = site or min_site(X)
    d = depth_of_site(site.site)
    if d == INF:
        raise TheoremViolation(f"minimal-figure site of {X.describe()} has a cycle of non-isomorphisms")
    if cross_check and d != NEG_INF:
        evaluator = ForcingEvaluator(site.site)
        if not satisfies(site.site, ibd(d), evaluator):
            raise TheoremViolation(f"{site.site.name} does not force ibd({d})")
        if satisfies(site.site, ibd(d - 1 if d > 0 else NEG_INF), evaluator):
            raise TheoremViolation(f"{site.site.name} already forces ibd below {d}")
    return d


def heights_bound_figures(X: Presheaf, n: float) -> bool:
    """Every minimal figure lives at an object of height ≤ n."""
    hs = heights(X.base)
    return all(hs[c] <= n for c, _ in minimal_figures(X))


def minimal_cover(X: Presheaf, c: str, x: str) -> Tuple[str, Tuple[str, str]]:
    """
    A strong epi e: C → D and a minimal (y, D) with y·e = x, first in morphism
    then element order; (identity, (x, C)) when x is already minimal.

    Raises:
        HypothesisFailed: the base lacks strong-epi/mono factorisation
        UnknownElement: x is not in X(C)
    """
    base = X.base
    report = cached_hypotheses(base)
    if not report.strong_epi_mono_factorization:
        raise HypothesisFailed(f"{base.name} lacks strong-epi/mono factorization", report=report)
    i = X.position(c, x)
    if is_minimal_element(X, c, i):
        return base.label(base.identity(c)), (x, c)
    strong = strong_epi_mask(base)
    for e in base.out_of(c):
        if not strong[e]:
            continue
        d = base.cod(e)
        for j in range(X.size(d)):
            if X.restrict(j, e) == i and is_minimal_element(X, d, j):
                return base.label(e), (X.elements[d][j], d)
    raise TheoremViolation(f"{x}@{c} has no minimal cover in {X.describe()}")


def _row(n, dim_le_n: bool, ibd_n: bool) -> Dict[str, Any]:
    return {"n": n, "dim_le_n": dim_le_n, "ibd_n": ibd_n}


@dataclass
class DimensionReport:
    """Per-n comparison of dim X ≤ n with IBD_n on the minimal-figure site."""
    dim: float
    depth: float
    strongly_regular: bool
    non_singular: bool
    localic: bool
    etendue: bool
    table: List[Dict[str, Any]] = field(default_factory=list)
    witnesses: Dict[str, Any] = field(default_factory=dict)

    @property
    def theorem_status(self) -> str:
        if all(row["dim_le_n"] == row["ibd_n"] for row in self.table):
            return EQUIVALENT
        return ONE_WAY_ONLY

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dim": to_json_extended(self.dim),
            "depth": to_json_extended(self.depth),
            "strongly_regular": self.strongly_regular,
            "non_singular": self.non_singular,
            "localic": self.localic,
            "etendue": self.etendue,
            "table": [dict(row, n=to_json_extended(row["n"])) for row in self.table],
            "witnesses": self.witnesses,
        }

    @classmethod
    def from_dict(cls, raw: Dict[str, Any]) -> "DimensionReport":
        return cls(
            dim=from_json_extended(raw["dim"]),
            depth=from_json_extended(raw["depth"]),
            strongly_regular=raw["strongly_regular"],
            non_singular=raw["non_singular"],
            localic=raw["localic"],
            etendue=raw["etendue"],
            table=[dict(row, n=from_json_extended(row["n"])) for row in raw["table"]],
            witnesses=dict(raw.get("witnesses", {})),
        )


def _as_list(value):
    return list(value) if value is not None else None


def verify_dimension_theorem(X: Presheaf, n_max: Optional[int] = None,
                             cross_check: bool = True) -> DimensionReport:
    """
    Tabulate dim X ≤ n against IBD_n for n in -inf, 0..n_max, inf.

    n_max defaults to the number of minimal figures plus one. The -inf and
    inf rows are filled in by convention: empty X against the degenerate
    topos, and trivially true on both sides.

    Raises:
        HypothesisFailed: the base fails one of the site hypotheses
        TheoremViolation: an implication that must hold fails
    """
    base = X.base
    report = cached_hypotheses(base)
    if not report.all_hold:
        raise HypothesisFailed(f"{base.name} fails {', '.join(report.failed())}", report=report)

    site = min_site(X)
    regularity = regularity_report(X)
    d = dimension(X)
    dp = depth(X, cross_check=cross_check, site=site)
    if n_max is None:
        n_max = len(site) + 1

    table = [_row(NEG_INF, d == NEG_INF, dp == NEG_INF)]
    height_form = []
    for n in range(n_max + 1):
        ibd_n = ibd_sieve_char(site.site, n).covers_all()
        table.append(_row(n, d <= n, ibd_n))
        bounded = heights_bound_figures(X, n)
        height_form.append(bounded)
        if d <= n and not ibd_n:
            raise TheoremViolation(f"dim {X.describe()} <= {n} but IBD_{n} fails")
        if bounded and not ibd_n:
            raise TheoremViolation(f"minimal figures of {X.describe()} have height <= {n} but IBD_{n} fails")
        if regularity.strongly_regular and ibd_n and not (d <= n and bounded):
            raise TheoremViolation(f"{X.describe()} is strongly regular and satisfies IBD_{n} "
                                   f"but dim = {d}")
    table.append(_row(INF, True, True))

    if regularity.non_singular and not (regularity.strongly_regular and site.localic):
        raise TheoremViolation(f"{X.describe()} is non-singular but not strongly regular with a localic site")
    if regularity.subpreterminal_violations:
        raise TheoremViolation(f"mono into a preterminal figure from a non-preterminal one: "
                               f"{regularity.subpreterminal_violations[0]}")
    if dp > d:
        raise TheoremViolation(f"depth {dp} exceeds dim {d} for {X.describe()}")

    witnesses: Dict[str, Any] = {
        "heights_le_n": height_form,
        "extended_rows": "by convention",
    }
    if not regularity.strongly_regular:
        witnesses["strong_regularity"] = _as_list(regularity.strong_regularity_witness)
    if not regularity.non_singular:
        witnesses["singularity"] = _as_list(regularity.singularity_witness)
    if not site.localic:
        witnesses["poset_reflection"] = site.poset_reflection()

    result = DimensionReport(
        dim=d,
        depth=dp,
        strongly_regular=regularity.strongly_regular,
        non_singular=regularity.non_singular,
        localic=site.localic,
        etendue=site.etendue,
        table=table,
        witnesses=witnesses,
    )
    logger.info("%s: dim=%s depth=%s %s", X.name, d, dp, result.theorem_status)
    return result
