"""
Analysis front end

Loads categories and presheaves from JSON or registry references, runs the
dimension theorem verifier over corpora, and exposes the command line.
"""

from .config import Settings
from .loader import (dump_category, dump_presheaf, load_category, load_presheaf, resolve_presheaf,
                     resolve_site)
from .pipeline import CorpusEntry, CorpusPipeline, presheaf_entries, seed_corpus

__all__ = [
    'Settings',
    'load_category',
    'dump_category',
    'load_presheaf',
    'dump_presheaf',
    'resolve_site',
    'resolve_presheaf',
    'CorpusEntry',
    'CorpusPipeline',
    'presheaf_entries',
    'seed_corpus',
]
