"""
Forcing semantics for the γ / bounded-depth fragment and its combinatorial
characterisations.
"""

from .formula import (And, Bottom, ConstSubterminal, ForallOmega, Formula, Implies, Or, Top, Var, gamma, ibd)
from .forcing import Environment, ForcingEvaluator, forces, satisfies, sentence_value
from .characterizations import (depth_of_site, factors_through, higgs_object, higgs_sentence, ibd_sieve_char,
                                internally_widespread, is_boolean_site, meaning_sieve, non_iso_depths,
                                point_factors_through_higgs, widespread_sentence)
from .widespread import (WidespreadProcedure, is_widespread, widespread_by_definition, widespread_by_gamma,
                         widespread_by_sections, widespread_element)
from .parser import parse_formula

__all__ = [
    'And', 'Bottom', 'ConstSubterminal', 'ForallOmega', 'Formula', 'Implies', 'Or', 'Top', 'Var', 'gamma', 'ibd',
    'Environment', 'ForcingEvaluator', 'forces', 'satisfies', 'sentence_value',
    'depth_of_site', 'factors_through', 'higgs_object', 'higgs_sentence', 'ibd_sieve_char',
    'internally_widespread', 'is_boolean_site', 'meaning_sieve', 'non_iso_depths',
    'point_factors_through_higgs', 'widespread_sentence',
    'WidespreadProcedure', 'is_widespread', 'widespread_by_definition', 'widespread_by_gamma',
    'widespread_by_sections', 'widespread_element',
    'parse_formula',
]
