"""
Small hand-made sites used as test and corpus fixtures.

terminal, two parallel arrows, the 2-chain, the cyclic group of order 4, the
two-element idempotent monoid {1, e} and the codiscrete groupoid on two
objects.
"""

from model.fincat.category import FinCategory, build_category
from ..registry import GlobalRegistry, SiteTemplate


def build_terminal() -> FinCategory:
    return build_category("terminal", ["*"], [("1", "*", "*")], {"*": "1"}, lambda g, f: "1")


def build_parallel_arrows() -> FinCategory:
    """a ⇉ b with arrows u, v."""
    morphisms = [("1a", "a", "a"), ("1b", "b", "b"), ("u", "a", "b"), ("v", "a", "b")]

    def composite(g: str, f: str) -> str:
        return f if g.startswith("1") else g

    return build_category("parallel_arrows", ["a", "b"], morphisms, {"a": "1a", "b": "1b"}, composite)


def build_chain2() -> FinCategory:
    """The ordinal 0 < 1 as a category."""
    morphisms = [("1_0", "0", "0"), ("1_1", "1", "1"), ("0<1", "0", "1")]

    def composite(g: str, f: str) -> str:
        return f if g.startswith("1_") else g

    return build_category("chain2", ["0", "1"], morphisms, {"0": "1_0", "1": "1_1"}, composite)


def build_cyclic_group(order: int = 4) -> FinCategory:
    """One object, morphisms r0 ... r(order-1) composing by addition."""
    morphisms = [(f"r{i}", "*", "*") for i in range(order)]

    def composite(g: str, f: str) -> str:
        return f"r{(int(g[1:]) + int(f[1:])) % order}"

    return build_category(f"cyclic{order}", ["*"], morphisms, {"*": "r0"}, composite)


def build_idempotent_monoid() -> FinCategory:
    """The monoid {1, e} with e∘e = e."""
    def composite(g: str, f: str) -> str:
        return "e" if "e" in (g, f) else "1"

    return build_category("idempotent", ["*"], [("1", "*", "*"), ("e", "*", "*")], {"*": "1"}, composite)


def build_iso_pair() -> FinCategory:
    """Two objects with exactly one morphism between any two of them."""
    objects = ["a", "b"]
    morphisms = [(f"{x}{y}", x, y) for x in objects for y in objects]

    def composite(g: str, f: str) -> str:
        return f"{f[0]}{g[1]}"

    return build_category("iso_pair", objects, morphisms, {"a": "aa", "b": "bb"}, composite)


def register_small_sites() -> None:
    """Register the hand-made fixture sites."""
    for name, description, builder in [
        ("terminal", "one object, one morphism", build_terminal),
        ("parallel_arrows", "two objects with two parallel arrows", build_parallel_arrows),
        ("chain2", "the two-element total order", build_chain2),
        ("cyclic4", "the cyclic group of order 4", build_cyclic_group),
        ("idempotent", "the monoid {1, e} with e∘e = e", build_idempotent_monoid),
        ("iso_pair", "codiscrete groupoid on two objects", build_iso_pair),
    ]:
        GlobalRegistry.register_site(SiteTemplate(name=name, description=description, builder=builder))
