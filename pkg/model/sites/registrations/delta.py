"""
Truncated simplex category Δ_≤k.

Objects are the ordinals [0], ..., [k]; morphisms are all monotone maps,
labelled ``d<n>:<values>`` (``d1:001`` is [2]→[1] sending 0,1 ↦ 0 and 2 ↦ 1).
"""

from itertools import combinations_with_replacement
from typing import List, Tuple

from model.errors import BudgetExceeded
from model.fincat.category import FinCategory, build_category
from ..registry import GlobalRegistry, SiteTemplate

DELTA_MAX = 6


def ordinal(n: int) -> str:
    return f"[{n}]"


def monotone_label(cod: int, values: Tuple[int, ...]) -> str:
    return f"d{cod}:{''.join(str(v) for v in values)}"


def parse_monotone(label: str) -> Tuple[int, Tuple[int, ...]]:
    """Inverse of monotone_label: (codomain, values)."""
    head, values = label.split(":")
    return int(head[1:]), tuple(int(v) for v in values)


def build_delta(k: int, size_limit: int = DELTA_MAX) -> FinCategory:
    """
    Δ_≤k with morphisms ordered by (domain, codomain, value sequence).

    Raises:
        BudgetExceeded: k above ``size_limit``
    """
    if k > size_limit:
        raise BudgetExceeded(f"Δ_≤{k} exceeds the size guard {size_limit}")
    objects = [ordinal(n) for n in range(k + 1)]
    morphisms: List[Tuple[str, str, str]] = []
    for m in range(k + 1):
        for n in range(k + 1):
            for values in combinations_with_replacement(range(n + 1), m + 1):
                morphisms.append((monotone_label(n, values), ordinal(m), ordinal(n)))
    identities = {ordinal(n): monotone_label(n, tuple(range(n + 1))) for n in range(k + 1)}

    def composite(g: str, f: str) -> str:
        n, g_values = parse_monotone(g)
        _, f_values = parse_monotone(f)
        return monotone_label(n, tuple(g_values[v] for v in f_values))

    return build_category(f"delta:{k}", objects, morphisms, identities, composite)


def register_delta_site() -> None:
    """Register the Δ truncations."""
    GlobalRegistry.register_site(SiteTemplate(
        name="delta",
        description="monotone maps between [0], ..., [k]",
        builder=lambda k: build_delta(k, size_limit=k),
        sized=True,
        size_limit=DELTA_MAX,
    ))
