"""
Finite-category core.

Composition tables, morphism classification and factorisation, heights,
minimal and extreme objects, site hypotheses and level enumeration.
"""

from .category import (FinCategory, Morphism, build_category, category_to_dict, check_axioms,
                       full_subcategory, validate_category)
from .morphisms import (FactorizationMode, MorphismClass, classify_morphism, factorize,
                        factorization_failures, is_iso, is_mono, is_strong_epi)
from .structure import (extreme_objects, height, height_subcategory, heights, is_extreme,
                        is_minimal_object, is_preorder, iso_classes, min_full_subcategory,
                        minimal_objects, monic_endomorphisms_are_isos, poset_reflection, slice_category,
                        terminal_object)
from .hypotheses import HypothesisReport, cached_hypotheses, check_hypotheses
from .levels import Level, enumerate_levels, level_e

__all__ = [
    'FinCategory',
    'Morphism',
    'build_category',
    'category_to_dict',
    'check_axioms',
    'full_subcategory',
    'validate_category',
    'FactorizationMode',
    'MorphismClass',
    'classify_morphism',
    'factorize',
    'factorization_failures',
    'is_iso',
    'is_mono',
    'is_strong_epi',
    'extreme_objects',
    'height',
    'height_subcategory',
    'heights',
    'is_extreme',
    'is_minimal_object',
    'is_preorder',
    'iso_classes',
    'min_full_subcategory',
    'minimal_objects',
    'monic_endomorphisms_are_isos',
    'poset_reflection',
    'slice_category',
    'terminal_object',
    'HypothesisReport',
    'cached_hypotheses',
    'check_hypotheses',
    'Level',
    'enumerate_levels',
    'level_e',
]
