"""
Jones Polynomial
Kauffman bracket of a closed braid by Temperley-Lieb transfer, with a brute-force
state sum kept as an independent oracle
"""

from __future__ import annotations

import functools
import itertools
import logging
from collections import Counter

from .braids import BraidWord
from .exceptions import CrossingBudgetExceeded, NotAKnot, StrandBudgetExceeded
from .knot_standards import KnotStandards
from .laurent import LaurentPoly

logger = logging.getLogger(__name__)

# Polynomials in A until the final substitution A = t^(-1/4)
A = LaurentPoly.monomial(1)
A_INV = LaurentPoly.monomial(-1)
DELTA = LaurentPoly.from_dict({2: -1, -2: -1})  # value of a closed loop, -A^2 - A^-2


def _require_knot(braid: BraidWord):
    components = braid.components()
    if components != 1:
        raise NotAKnot(components)


@functools.lru_cache(maxsize=None)
def _delta_power(k: int) -> LaurentPoly:
    return DELTA ** k


def _bracket_to_jones(bracket: LaurentPoly, writhe: int) -> LaurentPoly:
    """(-A^3)^(-writhe) * bracket, then A^k -> t^(-k/4)"""
    framing = LaurentPoly.monomial(-3 * writhe, -1 if writhe % 2 else 1)
    return (framing * bracket).divide_exponents(-4)


# ---------------------------------------------------------------------- #
# Temperley-Lieb transfer
# ---------------------------------------------------------------------- #
# A diagram is a tuple of partners over 2l boundary points: top 0..l-1 and
# bottom l..2l-1. Generators act at the bottom.

def _identity_diagram(strands: int) -> tuple[int, ...]:
    return tuple(list(range(strands, 2 * strands)) + list(range(strands)))


def _apply_cup_cap(diagram: tuple[int, ...], a: int, b: int) -> tuple[tuple[int, ...], bool]:
    """Multiply by e_i at bottom points a, b; the flag reports a closed loop"""
    if diagram[a] == b:
        return diagram, True
    partners = list(diagram)
    pa, pb = partners[a], partners[b]
    partners[pa], partners[pb] = pb, pa
    partners[a], partners[b] = b, a
    return tuple(partners), False


def _closure_loops(diagram: tuple[int, ...], strands: int) -> int:
    """Loops left after joining top j to bottom l+j"""
    seen = [False] * (2 * strands)
    loops = 0
    for start in range(2 * strands):
        if seen[start]:
            continue
        loops += 1
        point = start
        while not seen[point]:
            seen[point] = True
            mate = diagram[point]
            seen[mate] = True
            point = mate + strands if mate < strands else mate - strands
    return loops


def jones_tl(braid: BraidWord, strand_limit: int | None = None) -> LaurentPoly:
    """
    Jones polynomial in t of the braid closure.

    The state is a map from planar matchings to bracket coefficients; each
    generator is one sparse update (sigma+ = A id + A^-1 e_i, sigma- = A^-1 id + A e_i).
    """
    limit = strand_limit if strand_limit is not None else KnotStandards.get_budget('jones_strands')
    _require_knot(braid)
    if braid.strands > limit:
        raise StrandBudgetExceeded(braid.strands, limit)

    l = braid.strands
    state: dict[tuple[int, ...], LaurentPoly] = {_identity_diagram(l): LaurentPoly.one()}
    for g in braid.gens:
        a = l + abs(g) - 1
        keep, splice = (A, A_INV) if g > 0 else (A_INV, A)
        updated: dict[tuple[int, ...], LaurentPoly] = {}
        for diagram, coeff in state.items():
            updated[diagram] = updated.get(diagram, LaurentPoly.zero()) + keep * coeff
            spliced, loop = _apply_cup_cap(diagram, a, a + 1)
            term = splice * coeff * DELTA if loop else splice * coeff
            updated[spliced] = updated.get(spliced, LaurentPoly.zero()) + term
        state = {d: c for d, c in updated.items() if not c.is_zero()}

    bracket = LaurentPoly.zero()
    for diagram, coeff in state.items():
        bracket = bracket + coeff * _delta_power(_closure_loops(diagram, l) - 1)
    logger.debug("TL transfer on %d strands finished with %d states", l, len(state))
    return _bracket_to_jones(bracket, braid.exponent_sum)


# ---------------------------------------------------------------------- #
# brute-force oracle
# ---------------------------------------------------------------------- #

def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _union(parent: list[int], x: int, y: int):
    rx, ry = _find(parent, x), _find(parent, y)
    if rx != ry:
        parent[rx] = ry


def _state_loops(braid: BraidWord, vertical: tuple[bool, ...]) -> int:
    """Loops of one smoothing; nodes are (level, position) with the last level glued to the first"""
    l, c = braid.strands, len(braid.gens)

    def node(level: int, position: int) -> int:
        return (level % c) * l + position if c else position

    parent = list(range(max(c, 1) * l))
    for k, g in enumerate(braid.gens):
        i = abs(g) - 1
        for j in range(l):
            if j not in (i, i + 1):
                _union(parent, node(k, j), node(k + 1, j))
        if vertical[k]:
            _union(parent, node(k, i), node(k + 1, i))
            _union(parent, node(k, i + 1), node(k + 1, i + 1))
        else:
            _union(parent, node(k, i), node(k, i + 1))
            _union(parent, node(k + 1, i), node(k + 1, i + 1))
    return len({_find(parent, x) for x in range(len(parent))})


def kauffman_oracle(braid: BraidWord, crossing_limit: int | None = None) -> LaurentPoly:
    """Jones polynomial by summing all 2^c Kauffman states of the closed-braid diagram"""
    limit = crossing_limit if crossing_limit is not None else KnotStandards.get_budget('oracle_crossings')
    _require_knot(braid)
    c = len(braid.gens)
    if c > limit:
        raise CrossingBudgetExceeded(c, limit)
    if c == 0:
        return LaurentPoly.one()

    states: Counter = Counter()
    for choice in itertools.product((True, False), repeat=c):
        # True = A-smoothing: vertical for a positive crossing, cup-cap for a negative one
        vertical = tuple(a_side == (g > 0) for a_side, g in zip(choice, braid.gens))
        a_count = sum(choice)
        loops = _state_loops(braid, vertical)
        states[(2 * a_count - c, loops)] += 1
    bracket = LaurentPoly.zero()
    for (a_power, loops), count in sorted(states.items()):
        bracket = bracket + LaurentPoly.monomial(a_power, count) * _delta_power(loops - 1)
    return _bracket_to_jones(bracket, braid.exponent_sum)
