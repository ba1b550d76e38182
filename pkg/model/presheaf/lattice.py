"""
Subpresheaves and their Heyting / co-Heyting algebra.

A subpresheaf is a family of element-index sets, one per stage, closed under
the action. Meet and join are stagewise; implication quantifies over all maps
into the stage; subtraction is the subpresheaf generated by the elements of a
outside b, which is the least V with a ≤ b ∨ V.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from model.errors import ParentMismatch, UnknownElement, NotInLattice
from model.order import enumerate_down_sets
from model.presheaf.presheaf import Presheaf, PresheafMap, make_presheaf

logger = logging.getLogger(__name__)

DEFAULT_LATTICE_BUDGET = 2 ** 20


@dataclass(frozen=True)
class Subpresheaf:
    """Action-closed subfamily of ``parent``; carrier is indexed like parent.base.objects."""
    parent: Presheaf = field(compare=False, repr=False)
    carrier: Tuple[FrozenSet[int], ...]

    def at(self, c: str) -> FrozenSet[int]:
        return self.carrier[self.parent.base.object_index[c]]

    def contains(self, c: str, i: int) -> bool:
        return i in self.at(c)

    def ids_at(self, c: str) -> List[str]:
        return [self.parent.elements[c][i] for i in sorted(self.at(c))]

    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(s) for s in self.carrier)

    def leq(self, other: "Subpresheaf") -> bool:
        same_parent(self, other)
        return all(a <= b for a, b in zip(self.carrier, other.carrier))

    def is_top(self) -> bool:
        return self.sizes() == self.parent.sizes()

    def is_bottom(self) -> bool:
        return not any(self.carrier)

    def is_closed(self) -> bool:
        base = self.parent.base
        for f in range(base.n_morphisms):
            source = self.at(base.cod(f))
            target = self.at(base.dom(f))
            if any(self.parent.restrict(i, f) not in target for i in source):
                return False
        return True

    def as_presheaf(self, name: str = "") -> Tuple[Presheaf, PresheafMap]:
        """The subpresheaf as a presheaf in its own right, with its inclusion."""
        base = self.parent.base
        kept = {c: sorted(self.at(c)) for c in base.objects}
        new_index = {c: {old: new for new, old in enumerate(kept[c])} for c in base.objects}
        elements = {c: tuple(self.parent.elements[c][i] for i in kept[c]) for c in base.objects}
        actions = []
        for f in range(base.n_morphisms):
            c, d = base.dom(f), base.cod(f)
            actions.append(tuple(new_index[c][self.parent.restrict(i, f)] for i in kept[d]))
        sub = make_presheaf(base, elements, actions, name=name or f"sub({self.parent.name})", check=False)
        inclusion = PresheafMap(sub, self.parent, {c: tuple(kept[c]) for c in base.objects}, name="inclusion")
        return sub, inclusion

    def describe(self) -> str:
        base = self.parent.base
        return "{" + "; ".join(f"{c}: {','.join(self.ids_at(c))}" for c in base.objects if self.at(c)) + "}"


def same_parent(*args: Subpresheaf) -> Presheaf:
    parent = args[0].parent
    for other in args[1:]:
        if other.parent is not parent:
            raise ParentMismatch("subpresheaves of different presheaves cannot be combined")
    return parent


def subpresheaf(X: Presheaf, carrier: Mapping[str, Iterable[int]]) -> Subpresheaf:
    return Subpresheaf(X, tuple(frozenset(carrier.get(c, ())) for c in X.base.objects))


def top(X: Presheaf) -> Subpresheaf:
    return Subpresheaf(X, tuple(frozenset(range(X.size(c))) for c in X.base.objects))


def bottom(X: Presheaf) -> Subpresheaf:
    return Subpresheaf(X, tuple(frozenset() for _ in X.base.objects))


def meet(a: Subpresheaf, b: Subpresheaf) -> Subpresheaf:
    X = same_parent(a, b)
    return Subpresheaf(X, tuple(x & y for x, y in zip(a.carrier, b.carrier)))


def join(a: Subpresheaf, b: Subpresheaf) -> Subpresheaf:
    X = same_parent(a, b)
    return Subpresheaf(X, tuple(x | y for x, y in zip(a.carrier, b.carrier)))


def implies(u: Subpresheaf, w: Subpresheaf) -> Subpresheaf:
    """x ∈ (u ⇒ w)(D) iff for every f: E→D, x·f ∈ u(E) implies x·f ∈ w(E)."""
    X = same_parent(u, w)
    base = X.base
    carrier = []
    for d in base.objects:
        arrows = base.into(d)
        kept = set()
        for i in range(X.size(d)):
            if all(X.restrict(i, f) not in u.at(base.dom(f)) or X.restrict(i, f) in w.at(base.dom(f))
                   for f in arrows):
                kept.add(i)
        carrier.append(frozenset(kept))
    return Subpresheaf(X, tuple(carrier))


def negate(u: Subpresheaf) -> Subpresheaf:
    return implies(u, bottom(u.parent))


def image_of_element(X: Presheaf, x: str, k: str) -> Subpresheaf:
    """The image of the Yoneda map of x ∈ X(k): all restrictions x·g."""
    i = X.position(k, x)
    return principal(X, k, i)


def principal(X: Presheaf, k: str, i: int) -> Subpresheaf:
    base = X.base
    if not 0 <= i < X.size(k):
        raise UnknownElement(f"no element with index {i} at {k}")
    carrier: Dict[str, set] = {c: set() for c in base.objects}
    for g in base.into(k):
        carrier[base.dom(g)].add(X.restrict(i, g))
    return subpresheaf(X, carrier)


def generated(X: Presheaf, elements: Iterable[Tuple[str, int]]) -> Subpresheaf:
    """Least subpresheaf containing the given (object, index) elements."""
    result = bottom(X)
    for c, i in elements:
        result = join(result, principal(X, c, i))
    return result


def subtract(a: Subpresheaf, b: Subpresheaf) -> Subpresheaf:
    """Least V with a ≤ b ∨ V."""
    X = same_parent(a, b)
    outside = [(c, i) for c in X.base.objects for i in a.at(c) - b.at(c)]
    return generated(X, outside)


def boundary(a: Subpresheaf) -> Subpresheaf:
    """a ∧ (⊤ − a)."""
    return meet(a, subtract(top(a.parent), a))


def gamma(v: Subpresheaf, w: Subpresheaf) -> Subpresheaf:
    """v ∨ (v ⇒ w)."""
    return join(v, implies(v, w))


class HeytingOp(str, Enum):
    MEET = "meet"
    JOIN = "join"
    IMPLIES = "implies"
    NOT = "not"
    SUBTRACT = "subtract"
    BOUNDARY = "boundary"
    GAMMA = "gamma"


_UNARY = {HeytingOp.NOT: negate, HeytingOp.BOUNDARY: boundary}
_BINARY = {HeytingOp.MEET: meet, HeytingOp.JOIN: join, HeytingOp.IMPLIES: implies,
           HeytingOp.SUBTRACT: subtract, HeytingOp.GAMMA: gamma}


def heyting(op, *args: Subpresheaf) -> Subpresheaf:
    """Dispatch a lattice operation by name."""
    op = HeytingOp(op)
    same_parent(*args)
    if op in _UNARY:
        (a,) = args
        return _UNARY[op](a)
    a, b = args
    return _BINARY[op](a, b)


# ---- exhaustive lattice ------------------------------------------------------

def subobject_lattice(X: Presheaf, budget: int = DEFAULT_LATTICE_BUDGET) -> List[Subpresheaf]:
    """
    Every subpresheaf of X, as down-sets of the element preorder.

    Raises:
        BudgetExceeded: more than ``budget`` subpresheaves
    """
    items = list(X.iter_elements())
    below = {}
    for c, i in items:
        p = principal(X, c, i)
        below[(c, i)] = frozenset((d, j) for d in X.base.objects for j in p.at(d))
    down_sets = enumerate_down_sets(items, below, budget=budget, what="subpresheaves")
    lattice = []
    for s in down_sets:
        carrier: Dict[str, set] = {c: set() for c in X.base.objects}
        for c, i in s:
            carrier[c].add(i)
        lattice.append(subpresheaf(X, carrier))
    logger.debug("subobject lattice of %s has %d elements", X.describe(), len(lattice))
    return lattice


class SubobjectLattice:
    """An enumerated subobject lattice with order and complement queries."""

    def __init__(self, X: Presheaf, budget: int = DEFAULT_LATTICE_BUDGET):
        self.parent = X
        self.members = subobject_lattice(X, budget)
        self._index = {m.carrier: k for k, m in enumerate(self.members)}
        self.top = top(X)
        self.bottom = bottom(X)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, a: Subpresheaf) -> bool:
        return a.parent is self.parent and a.carrier in self._index

    def check(self, a: Subpresheaf) -> Subpresheaf:
        if a not in self:
            raise NotInLattice(f"{a.describe()} is not a member of this lattice")
        return a

    def up_set(self, w: Subpresheaf) -> List[Subpresheaf]:
        self.check(w)
        return [v for v in self.members if w.leq(v)]

    def complement_in(self, v: Subpresheaf, interval: Sequence[Subpresheaf],
                      low: Subpresheaf, high: Subpresheaf) -> Optional[Subpresheaf]:
        """Some u in the interval with v ∧ u = low and v ∨ u = high."""
        for u in interval:
            if meet(v, u) == low and join(v, u) == high:
                return u
        return None

    def is_boolean(self) -> bool:
        return all(self.complement_in(v, self.members, self.bottom, self.top) is not None for v in self.members)

    def implies_by_adjunction(self, u: Subpresheaf, w: Subpresheaf) -> Subpresheaf:
        """Largest v with v ∧ u ≤ w, found by search."""
        candidates = [v for v in self.members if meet(v, u).leq(w)]
        result = self.bottom
        for v in candidates:
            result = join(result, v)
        return result

    def subtract_by_adjunction(self, a: Subpresheaf, b: Subpresheaf) -> Subpresheaf:
        """Least v with a ≤ b ∨ v, found by search."""
        result = self.top
        for v in self.members:
            if a.leq(join(b, v)):
                result = meet(result, v)
        return result
