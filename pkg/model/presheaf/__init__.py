"""
Finite presheaves: Yoneda, colimits, category of elements, subobject
lattices and the subobject classifier.
"""

from .presheaf import (Presheaf, PresheafMap, canonical_form, compose_maps, empty_presheaf, global_element,
                       identity_map, is_isomorphic, make_map, make_presheaf, presheaf_from_dict,
                       terminal_presheaf, to_terminal, yoneda)
from .colimits import coequalizer, coproduct, pushout
from .elements import (element_name, elements_category, figure_subcategory, split_element_name,
                       underlying_morphism)
from .lattice import (HeytingOp, SubobjectLattice, Subpresheaf, bottom, boundary, gamma, generated, heyting,
                      image_of_element, implies, join, meet, negate, principal, subobject_lattice, subpresheaf,
                      subtract, top)
from .omega import (ObjectSieve, Sieve, characteristic, classified_subobject, classifying_point,
                    empty_sieve, maximal_sieve, object_sieve, object_sieves, omega, point_to_object_sieve,
                    sieve_index, sieves_on)

__all__ = [
    'Presheaf', 'PresheafMap', 'canonical_form', 'compose_maps', 'empty_presheaf', 'global_element',
    'identity_map', 'is_isomorphic', 'make_map', 'make_presheaf', 'presheaf_from_dict',
    'terminal_presheaf', 'to_terminal', 'yoneda',
    'coequalizer', 'coproduct', 'pushout',
    'element_name', 'elements_category', 'figure_subcategory', 'split_element_name', 'underlying_morphism',
    'HeytingOp', 'SubobjectLattice', 'Subpresheaf', 'bottom', 'boundary', 'gamma', 'generated', 'heyting',
    'image_of_element', 'implies', 'join', 'meet', 'negate', 'principal', 'subobject_lattice', 'subpresheaf',
    'subtract', 'top',
    'ObjectSieve', 'Sieve', 'characteristic', 'classified_subobject', 'classifying_point',
    'empty_sieve', 'maximal_sieve', 'object_sieve', 'object_sieves', 'omega', 'point_to_object_sieve',
    'sieve_index', 'sieves_on',
]
