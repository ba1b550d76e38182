"""Finite non-empty sets 1, ..., k and all functions (labels ``f<n>:<values>``, values 0-based)."""

from itertools import product

from model.errors import BudgetExceeded
from model.fincat.category import FinCategory, build_category
from ..registry import GlobalRegistry, SiteTemplate

FINSET_MAX = 4


def function_label(cod: int, values) -> str:
    return f"f{cod}:{''.join(str(v) for v in values)}"


def build_finset(k: int, size_limit: int = FINSET_MAX) -> FinCategory:
    if k > size_limit:
        raise BudgetExceeded(f"𝔽_≤{k} exceeds the size guard {size_limit}")
    sizes = range(1, k + 1)
    objects = [str(m) for m in sizes]
    morphisms = [
        (function_label(n, values), str(m), str(n))
        for m in sizes for n in sizes for values in product(range(n), repeat=m)
    ]
    identities = {str(n): function_label(n, range(n)) for n in sizes}

    def composite(g: str, f: str) -> str:
        head, g_values = g.split(":")
        _, f_values = f.split(":")
        return f"{head}:{''.join(g_values[int(v)] for v in f_values)}"

    return build_category(f"finset:{k}", objects, morphisms, identities, composite)


def register_finset_site() -> None:
    """Register the finite-set truncations."""
    GlobalRegistry.register_site(SiteTemplate(
        name="finset",
        description="functions between the sets 1, ..., k",
        builder=lambda k: build_finset(k, size_limit=k),
        sized=True,
        size_limit=FINSET_MAX,
    ))
