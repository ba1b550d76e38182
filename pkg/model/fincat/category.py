"""
Finite categories as explicit composition tables.

A FinCategory lists its objects, its morphisms (dense integer ids in list
order, each with a string label), the identity of every object and a total
composition table ``table[g, f] = g∘f`` holding -1 exactly on the
non-composable pairs. Values are immutable after construction; derived data
(hom-sets, classification masks) is memoised on the instance.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from model.errors import AxiomViolation, MalformedInput, UnknownMorphism, UnknownObject

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Morphism:
    """A morphism record: label, domain and codomain object ids."""
    id: str
    dom: str
    cod: str


@dataclass(frozen=True, eq=False)
class FinCategory:
    """A finite category with a dense composition table."""
    objects: Tuple[str, ...]
    morphisms: Tuple[Morphism, ...]
    identities: Mapping[str, int]
    table: np.ndarray = field(repr=False)
    name: str = ""
    _memo: Dict[str, Any] = field(default_factory=dict, init=False, repr=False, compare=False)

    def memo(self, key: str, compute: Callable[[], Any]) -> Any:
        """Memoise derived data on the instance; compute must be a pure function of the category."""
        if key not in self._memo:
            self._memo[key] = compute()
        return self._memo[key]

    # ---- sizes and lookups ---------------------------------------------

    @property
    def n_morphisms(self) -> int:
        return len(self.morphisms)

    @cached_property
    def _label_index(self) -> Dict[str, int]:
        return {m.id: i for i, m in enumerate(self.morphisms)}

    @cached_property
    def _object_set(self) -> frozenset:
        return frozenset(self.objects)

    @cached_property
    def object_index(self) -> Dict[str, int]:
        return {c: i for i, c in enumerate(self.objects)}

    def has_object(self, c: str) -> bool:
        return c in self._object_set

    def check_object(self, c: str) -> str:
        if c not in self._object_set:
            raise UnknownObject(f"unknown object {c!r} in category {self.name or '<anonymous>'}")
        return c

    def index(self, label: str) -> int:
        """Dense id of the morphism with the given label."""
        try:
            return self._label_index[label]
        except KeyError:
            raise UnknownMorphism(f"unknown morphism {label!r} in category {self.name or '<anonymous>'}")

    def check_morphism(self, f: int) -> int:
        if not 0 <= f < len(self.morphisms):
            raise UnknownMorphism(f"unknown morphism id {f} in category {self.name or '<anonymous>'}")
        return f

    def label(self, f: int) -> str:
        return self.morphisms[f].id

    def dom(self, f: int) -> str:
        return self.morphisms[f].dom

    def cod(self, f: int) -> str:
        return self.morphisms[f].cod

    def identity(self, c: str) -> int:
        self.check_object(c)
        return self.identities[c]

    @cached_property
    def identity_ids(self) -> frozenset:
        return frozenset(self.identities.values())

    def is_identity(self, f: int) -> bool:
        return f in self.identity_ids

    def compose(self, g: int, f: int) -> int:
        """The composite g∘f (first f, then g)."""
        result = int(self.table[g, f])
        if result < 0:
            raise MalformedInput(
                f"{self.label(g)} and {self.label(f)} are not composable "
                f"(cod {self.label(f)} = {self.cod(f)}, dom {self.label(g)} = {self.dom(g)})"
            )
        return result

    def compose_path(self, path: Sequence[int]) -> int:
        """Compose a path given first-to-last: [f, g, h] gives h∘g∘f."""
        result = path[0]
        for g in path[1:]:
            result = self.compose(g, result)
        return result

    # ---- hom-sets --------------------------------------------------------

    @cached_property
    def _homs(self) -> Dict[Tuple[str, str], Tuple[int, ...]]:
        homs: Dict[Tuple[str, str], List[int]] = {(a, b): [] for a in self.objects for b in self.objects}
        for i, m in enumerate(self.morphisms):
            homs[(m.dom, m.cod)].append(i)
        return {key: tuple(value) for key, value in homs.items()}

    @cached_property
    def _into(self) -> Dict[str, Tuple[int, ...]]:
        into: Dict[str, List[int]] = {c: [] for c in self.objects}
        for i, m in enumerate(self.morphisms):
            into[m.cod].append(i)
        return {c: tuple(v) for c, v in into.items()}

    @cached_property
    def _out(self) -> Dict[str, Tuple[int, ...]]:
        out: Dict[str, List[int]] = {c: [] for c in self.objects}
        for i, m in enumerate(self.morphisms):
            out[m.dom].append(i)
        return {c: tuple(v) for c, v in out.items()}

    def hom(self, a: str, b: str) -> Tuple[int, ...]:
        self.check_object(a)
        self.check_object(b)
        return self._homs[(a, b)]

    def into(self, c: str) -> Tuple[int, ...]:
        """All morphisms with codomain c, in id order."""
        self.check_object(c)
        return self._into[c]

    def out_of(self, c: str) -> Tuple[int, ...]:
        """All morphisms with domain c, in id order."""
        self.check_object(c)
        return self._out[c]

    def describe(self) -> str:
        return f"{self.name or 'category'}: {len(self.objects)} objects, {len(self.morphisms)} morphisms"


# ---- construction ----------------------------------------------------------

def _table_dtype(n: int):
    return np.int16 if n < np.iinfo(np.int16).max else np.int32


def build_category(name: str,
                   objects: Sequence[str],
                   morphisms: Sequence[Tuple[str, str, str]],
                   identities: Mapping[str, str],
                   composite: Callable[[str, str], str]) -> FinCategory:
    """
    Build a category from a composition function on labels.

    Used by generators whose composition is known to be lawful (function
    composition of monotone maps, of set maps, full subcategories).
    ``composite(g, f)`` is only called on composable pairs.
    """
    records = tuple(Morphism(label, dom, cod) for label, dom, cod in morphisms)
    index = {m.id: i for i, m in enumerate(records)}
    into: Dict[str, List[int]] = {c: [] for c in objects}
    out: Dict[str, List[int]] = {c: [] for c in objects}
    for i, m in enumerate(records):
        into[m.cod].append(i)
        out[m.dom].append(i)

    table = np.full((len(records), len(records)), -1, dtype=_table_dtype(len(records)))
    for middle in objects:
        for f in into[middle]:
            for g in out[middle]:
                table[g, f] = index[composite(records[g].id, records[f].id)]

    category = FinCategory(
        objects=tuple(objects),
        morphisms=records,
        identities=MappingProxyType({c: index[identities[c]] for c in objects}),
        table=table,
        name=name,
    )
    logger.debug("built %s", category.describe())
    return category


def full_subcategory(cat: FinCategory, objects: Iterable[str], name: Optional[str] = None) -> FinCategory:
    """Full subcategory on the given objects; morphism labels are kept as back-labels."""
    wanted = {cat.check_object(c) for c in objects}
    keep = [c for c in cat.objects if c in wanted]
    keep_set = set(keep)
    old_ids = [i for i, m in enumerate(cat.morphisms) if m.dom in keep_set and m.cod in keep_set]
    new_of = {old: new for new, old in enumerate(old_ids)}

    table = np.full((len(old_ids), len(old_ids)), -1, dtype=_table_dtype(len(old_ids)))
    if old_ids:
        sub = cat.table[np.ix_(old_ids, old_ids)]
        for (g, f), value in np.ndenumerate(sub):
            if value >= 0:
                table[g, f] = new_of[int(value)]

    return FinCategory(
        objects=tuple(keep),
        morphisms=tuple(cat.morphisms[i] for i in old_ids),
        identities=MappingProxyType({c: new_of[cat.identities[c]] for c in keep}),
        table=table,
        name=name or f"{cat.name}|{{{','.join(keep)}}}",
    )


# ---- validation --------------------------------------------------------------

def check_axioms(cat: FinCategory) -> List[Tuple[str, Tuple[str, ...]]]:
    """
    List every violated axiom of an already tabulated category.

    Returns:
        (kind, witness labels) pairs; kinds are "missing composite",
        "composite dom/cod", "left unit", "right unit", "associativity".
    """
    violations: List[Tuple[str, Tuple[str, ...]]] = []
    for middle in cat.objects:
        for f in cat.into(middle):
            for g in cat.out_of(middle):
                gf = int(cat.table[g, f])
                if gf < 0:
                    violations.append(("missing composite", (cat.label(g), cat.label(f))))
                elif cat.dom(gf) != cat.dom(f) or cat.cod(gf) != cat.cod(g):
                    violations.append(("composite dom/cod", (cat.label(g), cat.label(f), cat.label(gf))))
    if violations:
        return violations

    for f in range(cat.n_morphisms):
        left = int(cat.table[cat.identities[cat.cod(f)], f])
        right = int(cat.table[f, cat.identities[cat.dom(f)]])
        if left != f:
            violations.append(("left unit", (cat.label(cat.identities[cat.cod(f)]), cat.label(f))))
        if right != f:
            violations.append(("right unit", (cat.label(f), cat.label(cat.identities[cat.dom(f)]))))

    for g in range(cat.n_morphisms):
        fs = np.array(cat.into(cat.dom(g)), dtype=int)
        hs = np.array(cat.out_of(cat.cod(g)), dtype=int)
        if len(fs) == 0 or len(hs) == 0:
            continue
        gf = cat.table[g, fs].astype(int)
        hg = cat.table[hs, g].astype(int)
        left = cat.table[np.ix_(hg, fs)]
        right = cat.table[np.ix_(hs, gf)]
        for hi, fi in zip(*np.nonzero(left != right)):
            violations.append(("associativity", (cat.label(int(hs[hi])), cat.label(g), cat.label(int(fs[fi])))))
    return violations


def validate_category(raw: Mapping[str, Any], name: str = "") -> FinCategory:
    """
    Validate a category description and return the FinCategory.

    Args:
        raw: dictionary with "objects", "morphisms", "identities", "compose"
             (compose entries are [outer, inner, result]); identity entries
             may be omitted from "compose" and are filled in.

    Raises:
        MalformedInput: structurally broken input or dangling ids
        AxiomViolation: a category axiom fails; ``violations`` lists all of them
    """
    for key in ("objects", "morphisms", "identities"):
        if key not in raw:
            raise MalformedInput(f"category description lacks {key!r}")

    objects = list(raw["objects"])
    if len(set(objects)) != len(objects):
        raise MalformedInput("duplicate object ids")
    object_set = set(objects)

    records: List[Morphism] = []
    for entry in raw["morphisms"]:
        try:
            record = Morphism(str(entry["id"]), str(entry["dom"]), str(entry["cod"]))
        except (KeyError, TypeError):
            raise MalformedInput(f"morphism entry {entry!r} needs id, dom and cod")
        for end in (record.dom, record.cod):
            if end not in object_set:
                raise MalformedInput(f"morphism {record.id} refers to unknown object {end!r}")
        records.append(record)
    index = {m.id: i for i, m in enumerate(records)}
    if len(index) != len(records):
        raise MalformedInput("duplicate morphism ids")

    violations: List[Tuple[str, Tuple[str, ...]]] = []
    identities: Dict[str, int] = {}
    for c in objects:
        label = raw["identities"].get(c)
        if label is None:
            violations.append(("missing identity", (c,)))
            continue
        if label not in index:
            raise MalformedInput(f"identity {label!r} of {c} is not a listed morphism")
        if records[index[label]].dom != c or records[index[label]].cod != c:
            violations.append(("identity dom/cod", (label, c)))
        identities[c] = index[label]
    if violations:
        raise AxiomViolation(f"{violations[0][0]}: {', '.join(violations[0][1])}", violations)

    table = np.full((len(records), len(records)), -1, dtype=_table_dtype(len(records)))
    for c, i in identities.items():
        for f, m in enumerate(records):
            if m.cod == c:
                table[i, f] = f
            if m.dom == c:
                table[f, i] = f

    for entry in raw.get("compose", []):
        if len(entry) != 3:
            raise MalformedInput(f"compose entry {entry!r} must be [outer, inner, result]")
        for label in entry:
            if label not in index:
                raise MalformedInput(f"compose entry {entry!r} refers to unknown morphism {label!r}")
        g, f, gf = (index[label] for label in entry)
        if records[f].cod != records[g].dom:
            violations.append(("not composable", tuple(entry)))
            continue
        if records[gf].dom != records[f].dom or records[gf].cod != records[g].cod:
            violations.append(("composite dom/cod", tuple(entry)))
            continue
        previous = int(table[g, f])
        if previous >= 0 and previous != gf:
            unit = g in identities.values() or f in identities.values()
            kind = "non-unit identity" if unit else "conflicting composite"
            violations.append((kind, tuple(entry)))
            continue
        table[g, f] = gf

    category = FinCategory(
        objects=tuple(objects),
        morphisms=tuple(records),
        identities=MappingProxyType(identities),
        table=table,
        name=name or str(raw.get("name", "")),
    )
    if not violations:
        violations = check_axioms(category)
    if violations:
        kind, witness = violations[0]
        raise AxiomViolation(f"{kind}: {', '.join(witness)}", violations)
    return category


def category_to_dict(cat: FinCategory) -> Dict[str, Any]:
    """JSON form of a category; identity composites are left implicit."""
    compose = []
    identity_ids = cat.identity_ids
    for middle in cat.objects:
        for f in cat.into(middle):
            if f in identity_ids:
                continue
            for g in cat.out_of(middle):
                if g in identity_ids:
                    continue
                compose.append([cat.label(g), cat.label(f), cat.label(cat.compose(g, f))])
    return {
        "name": cat.name,
        "objects": list(cat.objects),
        "morphisms": [{"id": m.id, "dom": m.dom, "cod": m.cod} for m in cat.morphisms],
        "identities": {c: cat.label(i) for c, i in cat.identities.items()},
        "compose": compose,
    }
