"""
Theorem Checks Module
Desk-scale checks of template inclusions, composite knots and connected sums
"""

from .catalog import CatalogEntry, PrimeCatalog, build_prime_catalog
from .composites import (
    CompositeReport,
    SumWitness,
    composites_for_negative_twists,
    find_composites,
    sum_factors,
    verify_connected_sum,
    verify_sum_grid,
)
from .inclusion import (
    InclusionMatch,
    InclusionReport,
    NegativeBraidWitness,
    negative_braid_witness,
    odd_twist_subtemplates,
    verify_inclusion,
    verify_inclusion_chain,
    verify_odd_twist_inclusions,
)
from .search import SearchHit, TemplateSearch

__all__ = [
    'CatalogEntry',
    'PrimeCatalog',
    'build_prime_catalog',
    'CompositeReport',
    'SumWitness',
    'composites_for_negative_twists',
    'find_composites',
    'sum_factors',
    'verify_connected_sum',
    'verify_sum_grid',
    'InclusionMatch',
    'InclusionReport',
    'NegativeBraidWitness',
    'negative_braid_witness',
    'odd_twist_subtemplates',
    'verify_inclusion',
    'verify_inclusion_chain',
    'verify_odd_twist_inclusions',
    'SearchHit',
    'TemplateSearch',
]
