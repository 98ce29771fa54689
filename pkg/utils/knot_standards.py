"""
Knot Standards
Search budgets, evidence levels and the small table of named knots used to label fingerprints
"""

from __future__ import annotations

from .laurent import LaurentPoly


class KnotStandards:
    """Budgets and reference knots shared by the invariant, search and CLI layers"""

    SCHEMA_VERSION = 1
    CACHE_DIR_ENV = 'TEMPLATE_KNOTS_CACHE_DIR'

    # Computation and search budgets (word lengths, strands, crossings)
    BUDGETS = {
        'jones_strands': 12,            # Temperley-Lieb transfer, Catalan(12) states
        'oracle_crossings': 18,         # brute-force 2^c state sum
        'inclusion_sub_len': 6,
        'inclusion_search_len': 12,
        'odd_twist_sub_len': 5,
        'odd_twist_search_len': 14,
        'sum_factor_len': 5,
        'sum_search_len': 14,
        'catalog_len': 8,
        'composite_search_len': 12,
        'negative_twist_search_len': 16,  # the square knot on L(0,-1)
        'census_len': 10,
    }

    # Weakest to strongest
    EVIDENCE_LEVELS = ('alexander_only', 'alexander_signature', 'full_jones')

    # Named knots keyed by normalized Alexander pairs and signature (positive trefoil has -2)
    NAMED_KNOTS = [
        {'name': 'unknot', 'alexander': [[0, 1]], 'signature': 0},
        {'name': '3_1 (positive trefoil)', 'alexander': [[-1, 1], [0, -1], [1, 1]], 'signature': -2},
        {'name': '3_1 (negative trefoil)', 'alexander': [[-1, 1], [0, -1], [1, 1]], 'signature': 2},
        {'name': '4_1 (figure eight)', 'alexander': [[-1, -1], [0, 3], [1, -1]], 'signature': 0},
        {'name': '5_1 T(2,5)', 'alexander': [[-2, 1], [-1, -1], [0, 1], [1, -1], [2, 1]], 'signature': -4},
        {'name': '5_1 T(2,5) mirror', 'alexander': [[-2, 1], [-1, -1], [0, 1], [1, -1], [2, 1]], 'signature': 4},
        {'name': '7_1 T(2,7)',
         'alexander': [[-3, 1], [-2, -1], [-1, 1], [0, -1], [1, 1], [2, -1], [3, 1]], 'signature': -6},
        {'name': '7_1 T(2,7) mirror',
         'alexander': [[-3, 1], [-2, -1], [-1, 1], [0, -1], [1, 1], [2, -1], [3, 1]], 'signature': 6},
        {'name': '8_19 T(3,4)', 'alexander': [[-3, 1], [-2, -1], [0, 1], [2, -1], [3, 1]], 'signature': -6},
        {'name': '8_19 T(3,4) mirror', 'alexander': [[-3, 1], [-2, -1], [0, 1], [2, -1], [3, 1]], 'signature': 6},
        {'name': '10_124 T(3,5)',
         'alexander': [[-4, 1], [-3, -1], [-1, 1], [0, -1], [1, 1], [3, -1], [4, 1]], 'signature': -8},
        {'name': '10_124 T(3,5) mirror',
         'alexander': [[-4, 1], [-3, -1], [-1, 1], [0, -1], [1, 1], [3, -1], [4, 1]], 'signature': 8},
    ]

    @classmethod
    def get_budget(cls, name: str) -> int:
        """Get a named budget"""
        if name not in cls.BUDGETS:
            raise KeyError(f"unknown budget '{name}'")
        return cls.BUDGETS[name]

    @classmethod
    def get_budgets(cls, **overrides) -> dict:
        """Get all budgets with CLI overrides applied (None means keep the default)"""
        budgets = dict(cls.BUDGETS)
        budgets.update({k: v for k, v in overrides.items() if v is not None})
        return budgets

    @classmethod
    def get_knot_name(cls, alexander: LaurentPoly, signature: int) -> str | None:
        """Name of a reference knot with this Alexander polynomial and signature"""
        pairs = alexander.to_pairs()
        for knot in cls.NAMED_KNOTS:
            if knot['alexander'] == pairs and knot['signature'] == signature:
                return knot['name']
        return None
