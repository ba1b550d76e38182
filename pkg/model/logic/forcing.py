"""
Kripke–Joyal forcing over a finite site.

A binding is held lazily as (sieve, f): the sieve S at some stage D and the
map f: E → D along which it has been restricted, standing for f*S at E. Only
"is f*S maximal", i.e. f ∈ S, is ever needed, so sieves are never pulled
back explicitly. Results are memoised per evaluator on (formula, stage,
bindings of its free variables).
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Tuple

from model.errors import MalformedInput, TheoremViolation, UnboundVariable
from model.fincat.category import FinCategory
from model.logic.formula import (And, Bottom, ConstSubterminal, ForallOmega, Formula, Implies, Or, Top, Var)
from model.presheaf.omega import DEFAULT_SIEVE_BUDGET, ObjectSieve, Sieve, sieves_on

logger = logging.getLogger(__name__)

Binding = Tuple[Sieve, int]


@dataclass
class Environment:
    """Variable bindings at a stage; every bound sieve has apex = stage."""
    stage: str
    bindings: Dict[str, Sieve] = field(default_factory=dict)

    def __post_init__(self):
        for name, s in self.bindings.items():
            if s.apex != self.stage:
                raise MalformedInput(f"{name} is bound to a sieve on {s.apex}, not on stage {self.stage}")


class ForcingEvaluator:
    """Forcing relation of one site with a per-instance memo."""

    def __init__(self, cat: FinCategory, sieve_budget: int = DEFAULT_SIEVE_BUDGET):
        self.cat = cat
        self.sieve_budget = sieve_budget
        self._memo: Dict[tuple, bool] = {}

    def forces(self, stage: str, env: Optional[Mapping[str, Sieve]], phi: Formula) -> bool:
        """Does ``stage`` force phi with the given sieves (all on ``stage``)?"""
        self.cat.check_object(stage)
        Environment(stage, dict(env or {}))
        identity = self.cat.identities[stage]
        return self._forces(stage, {name: (s, identity) for name, s in (env or {}).items()}, phi)

    def _key(self, stage: str, env: Mapping[str, Binding], phi: Formula) -> tuple:
        bound = []
        for name in sorted(phi.free_vars()):
            if name not in env:
                raise UnboundVariable(f"variable {name} is not bound at stage {stage}")
            s, f = env[name]
            bound.append((name, s.apex, s.members, f))
        return phi, stage, tuple(bound)

    def _forces(self, stage: str, env: Mapping[str, Binding], phi: Formula) -> bool:
        if isinstance(phi, Top):
            return True
        if isinstance(phi, Bottom):
            return False
        if isinstance(phi, Var):
            if phi.name not in env:
                raise UnboundVariable(f"variable {phi.name} is not bound at stage {stage}")
            s, f = env[phi.name]
            return f in s.members
        if isinstance(phi, ConstSubterminal):
            return stage in phi.sieve
        if isinstance(phi, And):
            return self._forces(stage, env, phi.left) and self._forces(stage, env, phi.right)
        if isinstance(phi, Or):
            return self._forces(stage, env, phi.left) or self._forces(stage, env, phi.right)

        key = self._key(stage, env, phi)
        if key in self._memo:
            return self._memo[key]
        cat = self.cat
        if isinstance(phi, Implies):
            result = True
            for g in cat.into(stage):
                moved = self._restrict(env, g)
                source = cat.dom(g)
                if self._forces(source, moved, phi.left) and not self._forces(source, moved, phi.right):
                    result = False
                    break
        elif isinstance(phi, ForallOmega):
            result = True
            for g in cat.into(stage):
                source = cat.dom(g)
                moved = self._restrict(env, g)
                identity = cat.identities[source]
                for s in sieves_on(cat, source, self.sieve_budget):
                    moved[phi.var] = (s, identity)
                    if not self._forces(source, moved, phi.body):
                        result = False
                        break
                if not result:
                    break
        else:
            raise MalformedInput(f"not a formula: {phi!r}")
        self._memo[key] = result
        return result

    def _restrict(self, env: Mapping[str, Binding], g: int) -> Dict[str, Binding]:
        """Move every binding along g: composing the restriction path with g."""
        return {name: (s, int(self.cat.table[f, g])) for name, (s, f) in env.items()}

    def sentence_value(self, phi: Formula) -> ObjectSieve:
        """
        The object sieve of stages forcing a closed formula.

        Raises:
            UnboundVariable: phi has free variables
            TheoremViolation: the computed set is not downward closed
        """
        free = phi.free_vars()
        if free:
            raise UnboundVariable(f"sentence has free variables {', '.join(sorted(free))}")
        members = frozenset(d for d in self.cat.objects if self._forces(d, {}, phi))
        for f in range(self.cat.n_morphisms):
            if self.cat.cod(f) in members and self.cat.dom(f) not in members:
                raise TheoremViolation(f"forcing is not monotone along {self.cat.label(f)} for {phi}")
        return ObjectSieve(self.cat, members)


def forces(cat: FinCategory, stage: str, env: Optional[Mapping[str, Sieve]], phi: Formula) -> bool:
    return ForcingEvaluator(cat).forces(stage, env, phi)


def sentence_value(cat: FinCategory, phi: Formula, evaluator: Optional[ForcingEvaluator] = None) -> ObjectSieve:
    return (evaluator or ForcingEvaluator(cat)).sentence_value(phi)


def satisfies(cat: FinCategory, phi: Formula, evaluator: Optional[ForcingEvaluator] = None) -> bool:
    """Whether every object forces the closed formula phi."""
    return sentence_value(cat, phi, evaluator).covers_all()
