"""
Exhaustive generator of truncated simplicial sets.

Every presheaf on Δ_≤k is freely generated by its non-degenerate simplices
together with their codimension-one faces, subject to the simplicial
identities. The generator enumerates such data dimension by dimension,
keeps at most ``max_per_stage`` elements at every stage and deduplicates the
results up to isomorphism.
"""

import json
import logging
import time
from itertools import combinations_with_replacement, product
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple

from model.errors import MalformedInput
from model.fincat.morphisms import FactorizationMode, factorize, mono_mask, split_epi_mask
from model.presheaf.presheaf import Presheaf, canonical_form, make_presheaf
from model.sites.registrations.delta import build_delta, ordinal

logger = logging.getLogger(__name__)

# (non-degenerate simplex, epi from the element's stage onto its dimension)
Pair = Tuple[str, int]
Simplex = Tuple[str, int]

_PREFIXES = ("v", "e", "t")


class SimplicialGenerator:
    """Enumerates presheaves on Δ_≤max_dim with bounded stages, up to isomorphism."""

    def __init__(self, max_dim: int = 2, max_per_stage: int = 3, cap: int = 5000):
        if not 0 <= max_dim < len(_PREFIXES):
            raise MalformedInput(f"max_dim must be between 0 and {len(_PREFIXES) - 1}, got {max_dim}")
        self.max_dim = max_dim
        self.max_per_stage = max_per_stage
        self.cap = cap
        self.base = build_delta(max_dim)
        base = self.base
        mono, epi = mono_mask(base), split_epi_mask(base)
        self._mono = mono
        self._epis = {(n, d): [f for f in base.hom(ordinal(n), ordinal(d)) if epi[f]]
                      for n in range(max_dim + 1) for d in range(max_dim + 1)}
        self._codim1 = {d: [m for m in base.hom(ordinal(d - 1), ordinal(d)) if mono[m]]
                        for d in range(1, max_dim + 1)}
        self._proper_monos = {d: [m for m in base.into(ordinal(d)) if mono[m] and not base.is_identity(m)]
                              for d in range(max_dim + 1)}
        self.metrics = {
            'candidates': 0,
            'duplicates': 0,
            'kept': 0,
            'capped': False,
            'generation_time': 0.0,
        }

    # ---- simplicial data ------------------------------------------------

    def _restrict(self, faces: Dict[Tuple[str, int], Pair], x: Pair, f: int) -> Pair:
        """x·f in normal form."""
        y, s = x
        e, m = factorize(self.base, self.base.compose(s, f), FactorizationMode.SPLIT_EPI)
        if self.base.is_identity(m):
            return y, e
        z, t = faces[(y, m)]
        return z, self.base.compose(t, e)

    def _stage(self, simplices: List[Simplex], n: int) -> List[Pair]:
        return [(y, s) for y, d in simplices if d <= n for s in self._epis[(n, d)]]

    def _fits(self, simplices: List[Simplex]) -> bool:
        return all(len(self._stage(simplices, n)) <= self.max_per_stage for n in range(self.max_dim + 1))

    def _complete(self, codim1: Dict[int, Pair], faces: Dict[Tuple[str, int], Pair],
                  d: int) -> Optional[Dict[int, Pair]]:
        """All faces of a new d-simplex from its codimension-one faces; None if the identities fail."""
        base = self.base
        full = dict(codim1)
        for m in self._proper_monos[d]:
            if m in full:
                continue
            values = set()
            for m1, face in codim1.items():
                for m0 in base.hom(base.dom(m), ordinal(d - 1)):
                    if self._mono[m0] and int(base.table[m1, m0]) == m:
                        values.add(self._restrict(faces, face, m0))
            if len(values) != 1:
                return None
            full[m] = values.pop()
        return full

    def _face_candidates(self, simplices: List[Simplex], faces: Dict[Tuple[str, int], Pair],
                         d: int) -> List[Dict[int, Pair]]:
        if d == 0:
            return [{}]
        lower = self._stage(simplices, d - 1)
        monos = self._codim1[d]
        candidates = []
        for assignment in product(lower, repeat=len(monos)):
            full = self._complete(dict(zip(monos, assignment)), faces, d)
            if full is not None:
                candidates.append(full)
        return candidates

    def _extend(self, simplices: List[Simplex], faces: Dict[Tuple[str, int], Pair],
                d: int) -> Iterator[Tuple[List[Simplex], Dict[Tuple[str, int], Pair]]]:
        if d > self.max_dim:
            yield simplices, faces
            return
        candidates = self._face_candidates(simplices, faces, d)
        for count in range(self.max_per_stage + 1):
            names = [f"{_PREFIXES[d]}{i}" for i in range(count)]
            grown = simplices + [(name, d) for name in names]
            if not self._fits(grown):
                break
            for combo in combinations_with_replacement(range(len(candidates)), count):
                new_faces = dict(faces)
                for name, k in zip(names, combo):
                    for m, value in candidates[k].items():
                        new_faces[(name, m)] = value
                yield from self._extend(grown, new_faces, d + 1)

    # ---- presheaves -----------------------------------------------------

    def _element_id(self, x: Pair) -> str:
        y, s = x
        return y if self.base.is_identity(s) else f"{y}.{self.base.label(s)}"

    def to_presheaf(self, simplices: List[Simplex], faces: Dict[Tuple[str, int], Pair], name: str) -> Presheaf:
        base = self.base
        stages = {ordinal(n): self._stage(simplices, n) for n in range(self.max_dim + 1)}
        positions = {c: {x: i for i, x in enumerate(xs)} for c, xs in stages.items()}
        actions = []
        for f in range(base.n_morphisms):
            target = positions[base.dom(f)]
            actions.append(tuple(target[self._restrict(faces, x, f)] for x in stages[base.cod(f)]))
        elements = {c: [self._element_id(x) for x in xs] for c, xs in stages.items()}
        return make_presheaf(base, elements, actions, name=name)

    def generate(self) -> List[Presheaf]:
        """All presheaves within the bounds, one per isomorphism class, at most ``cap`` of them."""
        start = time.time()
        seen = set()
        kept: List[Presheaf] = []
        for simplices, faces in self._extend([], {}, 0):
            self.metrics['candidates'] += 1
            counts = [sum(1 for _, d in simplices if d == k) for k in range(self.max_dim + 1)]
            X = self.to_presheaf(simplices, faces, name="")
            key = canonical_form(X)
            if key in seen:
                self.metrics['duplicates'] += 1
                continue
            seen.add(key)
            label = "".join(f"{p}{c}" for p, c in zip(_PREFIXES, counts))
            kept.append(Presheaf(base=X.base, elements=X.elements, action=X.action,
                                 name=f"{label}#{len(kept)}"))
            if len(kept) >= self.cap:
                self.metrics['capped'] = True
                logger.warning("simplicial generator stopped at the cap of %d presheaves", self.cap)
                break
        self.metrics['kept'] = len(kept)
        self.metrics['generation_time'] = time.time() - start
        logger.info("generated %d presheaves on %s (%d candidates, %d duplicates)",
                    len(kept), self.base.name, self.metrics['candidates'], self.metrics['duplicates'])
        return kept

    def save(self, presheaves: List[Presheaf], output_dir: str) -> Path:
        """Write the presheaves as one JSON list, returning the file path."""
        out = Path(output_dir)
        out.mkdir(parents=True, exist_ok=True)
        path = out / f"simplicial_delta{self.max_dim}_n{self.max_per_stage}.json"
        with open(path, "w", encoding="utf-8") as f:
            json.dump([X.to_dict() for X in presheaves], f, indent=2, ensure_ascii=False)
        return path


def generate_presheaves(max_dim: int = 2, max_per_stage: int = 3, cap: int = 5000) -> List[Presheaf]:
    return SimplicialGenerator(max_dim, max_per_stage, cap).generate()
