"""
Figures of a presheaf, its minimal-figure site, skeleta, dimension and depth.
"""

from .figures import (RegularityReport, collapsing_pair, degeneracy_witness, figure_label, is_figure_mono,
                      is_minimal_element, is_non_singular, is_preterminal_by_coequalizers,
                      is_preterminal_element, is_strongly_regular, minimal_elements, minimal_figures,
                      preterminal_elements, preterminal_figures, regularity_report, singularity_witness,
                      strong_regularity_witness, subpreterminal_violations)
from .minsite import MinSite, level_e_site, min_site
from .skeleton import SkeletonMethod, dim, skeleta_agree, skeleton
from .dimension import (EQUIVALENT, ONE_WAY_ONLY, DimensionReport, depth, heights_bound_figures, minimal_cover,
                        verify_dimension_theorem)

__all__ = [
    'RegularityReport', 'collapsing_pair', 'degeneracy_witness', 'figure_label', 'is_figure_mono',
    'is_minimal_element', 'is_non_singular', 'is_preterminal_by_coequalizers',
    'is_preterminal_element', 'is_strongly_regular', 'minimal_elements', 'minimal_figures',
    'preterminal_elements', 'preterminal_figures', 'regularity_report', 'singularity_witness',
    'strong_regularity_witness', 'subpreterminal_violations',
    'MinSite', 'level_e_site', 'min_site',
    'SkeletonMethod', 'dim', 'skeleta_agree', 'skeleton',
    'EQUIVALENT', 'ONE_WAY_ONLY', 'DimensionReport', 'depth', 'heights_bound_figures', 'minimal_cover',
    'verify_dimension_theorem',
]
