"""
Corpus pipeline

Runs the dimension theorem verifier over a corpus of presheaves with a
worker pool, collecting per-instance reports and run metrics.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Any, Callable, Dict, Iterable, List, Optional

from model.errors import ToposError, TheoremViolation
from model.geometry.dimension import EQUIVALENT, verify_dimension_theorem
from model.presheaf.colimits import coproduct
from model.presheaf.presheaf import Presheaf
from model.sites import GlobalRegistry, example, register_all_sites

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusEntry:
    """A named presheaf, built lazily inside the worker that verifies it."""
    name: str
    build: Callable[[], Presheaf]


def _entry(name: str, build: Callable[[], Presheaf]) -> CorpusEntry:
    return CorpusEntry(name=name, build=build)


def seed_corpus() -> List[CorpusEntry]:
    """
    Representables over Δ_≤3 and 𝔽_≤2, boundary([2]), loop_Y and
    collapsed_Z over Δ_≤3, and the coproducts of every pair of presheaves
    sharing a base.
    """
    register_all_sites()
    families = [
        ("delta:3", ["representable(0)", "representable(1)", "representable(2)", "representable(3)",
                     "boundary(2)", "loop_Y", "collapsed_Z"]),
        ("finset:2", ["representable(1)", "representable(2)"]),
    ]
    entries: List[CorpusEntry] = []
    for ref, expressions in families:
        base = GlobalRegistry.build_ref(ref)
        for expr in expressions:
            entries.append(_entry(f"{expr} over {ref}", lambda b=base, e=expr: example(e, b)))
        for left, right in combinations_with_replacement(expressions, 2):
            def build(site=base, first=left, second=right):
                total, _, _ = coproduct(example(first, site), example(second, site), name=f"{first} + {second}")
                return total
            entries.append(_entry(f"{left} + {right} over {ref}", build))
    return entries


def presheaf_entries(presheaves: Iterable[Presheaf]) -> List[CorpusEntry]:
    return [_entry(X.name or f"#{k}", lambda X=X: X) for k, X in enumerate(presheaves)]


class CorpusPipeline:
    """
    Verify the dimension theorem for every entry of a corpus.
    """

    def __init__(self, entries: List[CorpusEntry], parallel_workers: int = 4,
                 n_max: Optional[int] = None, cross_check: bool = True):
        self.entries = entries
        self.parallel_workers = parallel_workers
        self.n_max = n_max
        self.cross_check = cross_check
        self.results: List[Dict[str, Any]] = []
        self.metrics = {
            'start_time': None,
            'end_time': None,
            'instances': 0,
            'equivalent': 0,
            'one_way_only': 0,
            'strongly_regular': 0,
            'non_singular': 0,
            'localic': 0,
            'violations': 0,
            'errors': 0,
        }

    def _verify(self, entry: CorpusEntry) -> Dict[str, Any]:
        try:
            X = entry.build()
            report = verify_dimension_theorem(X, n_max=self.n_max, cross_check=self.cross_check)
            return {'name': entry.name, 'sizes': list(X.sizes()), 'status': report.theorem_status,
                    'report': report.to_dict()}
        except TheoremViolation as e:
            logger.error("%s: %s", entry.name, e)
            return {'name': entry.name, 'violation': True, 'error': e.code, 'message': str(e)}
        except ToposError as e:
            logger.warning("%s: %s", entry.name, e)
            return {'name': entry.name, 'failed': True, 'error': e.code, 'message': str(e)}

    def run(self) -> Dict[str, Any]:
        """Verify every entry and return the run summary."""
        logger.info("verifying %d presheaves with %d workers", len(self.entries), self.parallel_workers)
        self.metrics['start_time'] = time.time()
        by_index: Dict[int, Dict[str, Any]] = {}
        with ThreadPoolExecutor(max_workers=self.parallel_workers) as executor:
            future_to_index = {executor.submit(self._verify, entry): k for k, entry in enumerate(self.entries)}
            completed = 0
            for future in as_completed(future_to_index):
                result = future.result()
                by_index[future_to_index[future]] = result
                completed += 1
                self._count(result)
                if completed % max(1, len(self.entries) // 10) == 0:
                    logger.info("progress: %d/%d", completed, len(self.entries))
        self.results = [by_index[k] for k in range(len(self.entries))]
        self.metrics['end_time'] = time.time()
        return self.summary()

    def _count(self, result: Dict[str, Any]) -> None:
        self.metrics['instances'] += 1
        if result.get('violation'):
            self.metrics['violations'] += 1
            return
        if result.get('failed'):
            self.metrics['errors'] += 1
            return
        report = result['report']
        self.metrics['equivalent' if result['status'] == EQUIVALENT else 'one_way_only'] += 1
        for flag in ('strongly_regular', 'non_singular', 'localic'):
            if report[flag]:
                self.metrics[flag] += 1

    def summary(self) -> Dict[str, Any]:
        total_time = (self.metrics['end_time'] or 0) - (self.metrics['start_time'] or 0)
        return {
            'success': self.metrics['violations'] == 0 and self.metrics['errors'] == 0,
            'total_time': total_time,
            'parallel_workers': self.parallel_workers,
            **{k: v for k, v in self.metrics.items() if k not in ('start_time', 'end_time')},
            'results': self.results,
        }

    def format_summary(self) -> List[str]:
        """Human-readable run report, one line per entry."""
        m = self.metrics
        total_time = (m['end_time'] or 0) - (m['start_time'] or 0)
        lines = ["=" * 70, "DIMENSION THEOREM CORPUS RESULTS", "=" * 70]
        for result in self.results:
            if result.get('violation'):
                lines.append(f"❌ {result['name']}: {result['message']}")
            elif result.get('failed'):
                lines.append(f"⚠️ {result['name']}: error[{result['error']}] {result['message']}")
            else:
                report = result['report']
                lines.append(f"✅ {result['name']}: dim={report['dim']} depth={report['depth']} "
                             f"{result['status']}")
        lines += [
            "",
            f"🕒 Total time: {total_time:.2f}s",
            f"👥 Workers used: {self.parallel_workers}",
            f"📊 Instances: {m['instances']} | equivalent: {m['equivalent']} | "
            f"one-way only: {m['one_way_only']}",
            f"   strongly regular: {m['strongly_regular']} | non-singular: {m['non_singular']} | "
            f"localic: {m['localic']}",
            f"❌ Violations: {m['violations']}",
            f"⚠️ Errors: {m['errors']}",
        ]
        if m['violations'] == 0 and m['errors'] == 0:
            lines.append("\n✅ Corpus verified without violations")
        else:
            lines.append("\n⚠️ Corpus finished with violations or errors")
        lines.append("=" * 70)
        return lines
