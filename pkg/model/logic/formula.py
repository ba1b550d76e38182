"""
Formulas of the γ / bounded-depth fragment.

Bottom, Top, variables ranging over Ω, ∧, ∨, ⇒, ∀x:Ω and constant
subterminals. ``gamma(φ, ψ)`` is φ ∨ (φ ⇒ ψ) and ``ibd(n)`` is the tower
ibd(-inf) = ⊥, ibd(n+1) = ∀x. γ(x, ibd(n)), ibd(inf) = ⊤.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Union

from model.order import INF, NEG_INF, format_extended
from model.presheaf.omega import ObjectSieve


class Formula:
    """Base class of the abstract syntax."""
    __slots__ = ()

    def free_vars(self) -> FrozenSet[str]:
        return _free_vars(self)

    def is_closed(self) -> bool:
        return not self.free_vars()


@dataclass(frozen=True)
class Bottom(Formula):
    def __str__(self):
        return "bot"


@dataclass(frozen=True)
class Top(Formula):
    def __str__(self):
        return "top"


@dataclass(frozen=True)
class Var(Formula):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula

    def __str__(self):
        return f"({self.left} /\\ {self.right})"


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula

    def __str__(self):
        return f"({self.left} \\/ {self.right})"


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula

    def __str__(self):
        return f"({self.left} => {self.right})"


@dataclass(frozen=True)
class ForallOmega(Formula):
    var: str
    body: Formula

    def __str__(self):
        return f"(forall {self.var}. {self.body})"


@dataclass(frozen=True)
class ConstSubterminal(Formula):
    """A fixed object sieve used as a closed atom; ``label`` is its display name."""
    sieve: ObjectSieve
    label: str = "U"

    def __str__(self):
        return f"const({self.label})"


@lru_cache(maxsize=None)
def _free_vars(phi: Formula) -> FrozenSet[str]:
    if isinstance(phi, Var):
        return frozenset([phi.name])
    if isinstance(phi, (And, Or, Implies)):
        return _free_vars(phi.left) | _free_vars(phi.right)
    if isinstance(phi, ForallOmega):
        return _free_vars(phi.body) - {phi.var}
    return frozenset()


def gamma(phi: Formula, psi: Formula) -> Formula:
    return Or(phi, Implies(phi, psi))


def ibd(n: Union[int, float]) -> Formula:
    """The bounded-depth sentence for an extended natural n; bound variables are x0, x1, ..."""
    if n == NEG_INF:
        return Bottom()
    if n == INF:
        return Top()
    if n < 0 or int(n) != n:
        raise ValueError(f"ibd needs -inf, inf or a natural number, got {format_extended(n)}")
    phi: Formula = Bottom()
    for k in range(int(n) + 1):
        x = f"x{k}"
        phi = ForallOmega(x, gamma(Var(x), phi))
    return phi
