"""
Site registry for the presheaf toolkit.

Registers the Δ truncations, the finite-set truncations and the small
hand-made test categories, and builds the example presheaves over them.
"""

from .registry import GlobalRegistry, SiteKind, SiteRegistry, SiteSpec, SiteTemplate
from .examples import EXAMPLES, boundary, collapsed_z, example, example_names, loop_y, representable

# Import all registration functions directly
from .registrations.delta import DELTA_MAX, build_delta, ordinal, register_delta_site
from .registrations.finset import FINSET_MAX, build_finset, register_finset_site
from .registrations.small import (build_chain2, build_cyclic_group, build_idempotent_monoid, build_iso_pair,
                                  build_parallel_arrows, build_terminal, register_small_sites)


def register_all_sites() -> None:
    """Register every bundled site family with the global registry.

    Safe to call more than once: later registrations replace earlier ones.
    """
    register_delta_site()
    register_finset_site()
    register_small_sites()


def get_registered_site_count() -> int:
    """Get the number of registered site families."""
    return len(GlobalRegistry.names())


__all__ = [
    'GlobalRegistry',
    'SiteKind',
    'SiteRegistry',
    'SiteSpec',
    'SiteTemplate',
    'EXAMPLES',
    'boundary',
    'collapsed_z',
    'example',
    'example_names',
    'loop_y',
    'representable',
    'DELTA_MAX',
    'build_delta',
    'ordinal',
    'FINSET_MAX',
    'build_finset',
    'build_chain2',
    'build_cyclic_group',
    'build_idempotent_monoid',
    'build_iso_pair',
    'build_parallel_arrows',
    'build_terminal',
    'register_all_sites',
    'get_registered_site_count',
]
