"""
Finite presheaves and natural transformations.

A Presheaf stores, per object of its base, an ordered tuple of element ids,
and per morphism f: C→D the restriction X(D)→X(C) as a tuple of indices.
Element ids only need to be unique within a stage; an element is addressed
as (object, id) or (object, index).
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations, product
from math import factorial, prod
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from model.errors import AxiomViolation, BudgetExceeded, MalformedInput, NotNatural, UnknownElement
from model.fincat.category import FinCategory

logger = logging.getLogger(__name__)

Action = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Presheaf:
    """
    A finite contravariant set-valued functor on ``base``.

    ``action[f][i]`` is the index in X(dom f) of (element i of X(cod f))·f.
    """
    base: FinCategory
    elements: Mapping[str, Tuple[str, ...]]
    action: Tuple[Action, ...] = field(repr=False)
    name: str = ""

    @cached_property
    def _positions(self) -> Dict[str, Dict[str, int]]:
        return {c: {x: i for i, x in enumerate(xs)} for c, xs in self.elements.items()}

    def at(self, c: str) -> Tuple[str, ...]:
        self.base.check_object(c)
        return self.elements[c]

    def size(self, c: str) -> int:
        return len(self.at(c))

    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(self.elements[c]) for c in self.base.objects)

    @property
    def total(self) -> int:
        return sum(self.sizes())

    def is_empty(self) -> bool:
        return self.total == 0

    def position(self, c: str, x: str) -> int:
        """Index of element x at stage c."""
        try:
            return self._positions[self.base.check_object(c)][x]
        except KeyError:
            raise UnknownElement(f"{x!r} is not an element of {self.name or 'presheaf'} at {c}")

    def restrict(self, i: int, f: int) -> int:
        """x·f for the element with index i at stage cod f."""
        return self.action[f][i]

    def act(self, x: str, f: str) -> str:
        """x·f by ids and morphism label."""
        m = self.base.index(f)
        return self.elements[self.base.dom(m)][self.action[m][self.position(self.base.cod(m), x)]]

    def iter_elements(self) -> Iterator[Tuple[str, int]]:
        """(object, index) pairs in object order."""
        for c in self.base.objects:
            for i in range(len(self.elements[c])):
                yield c, i

    def element_id(self, c: str, i: int) -> str:
        return self.elements[c][i]

    def describe(self) -> str:
        sizes = ", ".join(f"{c}:{len(self.elements[c])}" for c in self.base.objects)
        return f"{self.name or 'presheaf'} over {self.base.name} ({sizes})"

    def to_dict(self) -> Dict[str, Any]:
        """JSON form; identity actions are left out."""
        action: Dict[str, Dict[str, str]] = {}
        for f in range(self.base.n_morphisms):
            if self.base.is_identity(f):
                continue
            source, target = self.elements[self.base.cod(f)], self.elements[self.base.dom(f)]
            action[self.base.label(f)] = {y: target[self.action[f][j]] for j, y in enumerate(source)}
        return {
            "name": self.name,
            "base": self.base.name,
            "elements": {c: list(self.elements[c]) for c in self.base.objects},
            "action": action,
        }


def functor_violations(base: FinCategory, elements: Mapping[str, Sequence[str]],
                       action: Sequence[Action]) -> List[Tuple[str, Tuple[str, ...]]]:
    """Broken identity or contravariance laws, as (kind, witness) pairs."""
    violations: List[Tuple[str, Tuple[str, ...]]] = []
    for c in base.objects:
        i = base.identities[c]
        if tuple(action[i]) != tuple(range(len(elements[c]))):
            violations.append(("identity action", (base.label(i),)))
    for middle in base.objects:
        for f in base.into(middle):
            for g in base.out_of(middle):
                gf = base.compose(g, f)
                for j in range(len(elements[base.cod(g)])):
                    if action[gf][j] != action[f][action[g][j]]:
                        violations.append(("contravariance", (base.label(g), base.label(f), elements[base.cod(g)][j])))
                        break
    return violations


def make_presheaf(base: FinCategory, elements: Mapping[str, Sequence[str]],
                  action: Sequence[Action], name: str = "", check: bool = True) -> Presheaf:
    """Build from index actions; ``check`` validates the functor laws."""
    stages = {c: tuple(elements.get(c, ())) for c in base.objects}
    for c, xs in stages.items():
        if len(set(xs)) != len(xs):
            raise MalformedInput(f"duplicate element ids at {c}")
    actions = tuple(tuple(int(v) for v in a) for a in action)
    if len(actions) != base.n_morphisms:
        raise MalformedInput(f"expected {base.n_morphisms} actions, got {len(actions)}")
    if check:
        for f, a in enumerate(actions):
            if len(a) != len(stages[base.cod(f)]) or any(not 0 <= v < len(stages[base.dom(f)]) for v in a):
                raise MalformedInput(f"action of {base.label(f)} does not map {base.cod(f)} into {base.dom(f)}")
        violations = functor_violations(base, stages, actions)
        if violations:
            kind, witness = violations[0]
            raise AxiomViolation(f"{kind}: {', '.join(witness)}", violations)
    return Presheaf(base=base, elements=stages, action=actions, name=name)


def presheaf_from_dict(base: FinCategory, raw: Mapping[str, Any], name: str = "") -> Presheaf:
    """
    Validate a presheaf description against ``base``.

    Raises:
        MalformedInput: unknown objects, morphisms or elements, missing actions
        AxiomViolation: the functor laws fail
    """
    raw_elements = raw.get("elements", {})
    for c in raw_elements:
        base.check_object(c)
    stages = {c: tuple(str(x) for x in raw_elements.get(c, [])) for c in base.objects}
    positions = {c: {x: i for i, x in enumerate(xs)} for c, xs in stages.items()}
    raw_action = raw.get("action", {})
    for label in raw_action:
        base.index(label)

    actions: List[Action] = []
    for f in range(base.n_morphisms):
        source, target = stages[base.cod(f)], positions[base.dom(f)]
        if base.is_identity(f) and base.label(f) not in raw_action:
            actions.append(tuple(range(len(source))))
            continue
        table = raw_action.get(base.label(f))
        if table is None:
            if source:
                raise MalformedInput(f"no action given for {base.label(f)}")
            actions.append(())
            continue
        row = []
        for y in source:
            if y not in table:
                raise MalformedInput(f"action of {base.label(f)} misses element {y!r} at {base.cod(f)}")
            x = table[y]
            if x not in target:
                raise MalformedInput(f"{base.label(f)} sends {y!r} to {x!r}, not an element at {base.dom(f)}")
            row.append(target[x])
        actions.append(tuple(row))
    return make_presheaf(base, stages, actions, name=name or str(raw.get("name", "")))


def yoneda(cat: FinCategory, c: str) -> Presheaf:
    """The representable cat(-, c); elements are the morphism labels, action is precomposition."""
    cat.check_object(c)
    elements = {d: tuple(cat.label(g) for g in cat.hom(d, c)) for d in cat.objects}
    position = {g: i for d in cat.objects for i, g in enumerate(cat.hom(d, c))}
    actions = []
    for f in range(cat.n_morphisms):
        actions.append(tuple(position[int(cat.table[g, f])] for g in cat.hom(cat.cod(f), c)))
    return make_presheaf(cat, elements, actions, name=f"y({c})", check=False)


def terminal_presheaf(cat: FinCategory) -> Presheaf:
    return make_presheaf(cat, {c: ("*",) for c in cat.objects}, [(0,)] * cat.n_morphisms,
                         name="1", check=False)


def empty_presheaf(cat: FinCategory) -> Presheaf:
    return make_presheaf(cat, {}, [()] * cat.n_morphisms, name="0", check=False)


@dataclass(frozen=True, eq=False)
class PresheafMap:
    """A natural transformation; ``components[c][i]`` is the image index of element i at c."""
    source: Presheaf
    target: Presheaf
    components: Mapping[str, Tuple[int, ...]]
    name: str = ""

    def apply(self, c: str, i: int) -> int:
        return self.components[c][i]

    def naturality_failure(self) -> Optional[Tuple[str, str]]:
        """(morphism label, element id) of the first failing square, or None."""
        base = self.source.base
        for f in range(base.n_morphisms):
            c, d = base.dom(f), base.cod(f)
            for i in range(self.source.size(d)):
                left = self.components[c][self.source.restrict(i, f)]
                right = self.target.restrict(self.components[d][i], f)
                if left != right:
                    return base.label(f), self.source.element_id(d, i)
        return None

    def is_natural(self) -> bool:
        return self.naturality_failure() is None

    def is_mono(self) -> bool:
        return all(len(set(self.components[c])) == len(self.components[c]) for c in self.source.base.objects)

    def image_sizes(self) -> Tuple[int, ...]:
        return tuple(len(set(self.components[c])) for c in self.source.base.objects)


def make_map(source: Presheaf, target: Presheaf, components: Mapping[str, Sequence[int]],
             name: str = "", check: bool = True) -> PresheafMap:
    """
    Raises:
        MalformedInput: different bases or out-of-range components
        NotNatural: a naturality square fails; ``square`` names it
    """
    if source.base is not target.base:
        raise MalformedInput("presheaf map between presheaves on different bases")
    comps = {c: tuple(int(v) for v in components.get(c, ())) for c in source.base.objects}
    for c in source.base.objects:
        if len(comps[c]) != source.size(c) or any(not 0 <= v < target.size(c) for v in comps[c]):
            raise MalformedInput(f"component at {c} does not map {source.size(c)} into {target.size(c)} elements")
    result = PresheafMap(source=source, target=target, components=comps, name=name)
    if check:
        square = result.naturality_failure()
        if square is not None:
            raise NotNatural(f"naturality fails for {square[0]} at element {square[1]}", square=square)
    return result


def identity_map(X: Presheaf) -> PresheafMap:
    return PresheafMap(X, X, {c: tuple(range(X.size(c))) for c in X.base.objects}, name=f"1_{X.name}")


def compose_maps(g: PresheafMap, f: PresheafMap) -> PresheafMap:
    """g∘f."""
    if f.target is not g.source:
        raise MalformedInput("maps are not composable")
    base = f.source.base
    return PresheafMap(f.source, g.target,
                       {c: tuple(g.components[c][v] for v in f.components[c]) for c in base.objects})


def to_terminal(X: Presheaf, terminal: Presheaf) -> PresheafMap:
    return PresheafMap(X, terminal, {c: (0,) * X.size(c) for c in X.base.objects})


def global_element(X: Presheaf, terminal: Presheaf, t: str, x: str) -> PresheafMap:
    """
    The map 1 → X picking x ∈ X(t), where t is a terminal object of the base.
    At a stage D the component picks x·(D → t).
    """
    base = X.base
    i = X.position(t, x)
    components = {}
    for d in base.objects:
        (bang,) = base.hom(d, t)
        components[d] = (X.restrict(i, bang),)
    return make_map(terminal, X, components, name=f"point {x}")


# ---- isomorphism invariants --------------------------------------------------

CANONICAL_BUDGET = 200000


def canonical_form(X: Presheaf, budget: int = CANONICAL_BUDGET) -> Tuple:
    """
    A complete isomorphism invariant: the lexicographically least action
    table over all per-stage relabellings of the elements.

    Raises:
        BudgetExceeded: more than ``budget`` relabellings would be tried
    """
    base = X.base
    stages = base.objects
    count = prod(factorial(X.size(c)) for c in stages)
    if count > budget:
        raise BudgetExceeded(f"canonical form of {X.describe()} needs {count} relabellings")

    best = None
    for perms in product(*(permutations(range(X.size(c))) for c in stages)):
        new_of = dict(zip(stages, perms))
        old_of = {c: {new: old for old, new in enumerate(p)} for c, p in new_of.items()}
        encoded = []
        for f in range(base.n_morphisms):
            d, c = base.cod(f), base.dom(f)
            encoded.append(tuple(new_of[c][X.action[f][old_of[d][j]]] for j in range(X.size(d))))
        candidate = tuple(encoded)
        if best is None or candidate < best:
            best = candidate
    return X.sizes(), best


def is_isomorphic(X: Presheaf, Y: Presheaf) -> bool:
    return X.base is Y.base and X.sizes() == Y.sizes() and canonical_form(X) == canonical_form(Y)
