"""
Template Search
Staged fingerprint search over the orbits of one template: determinant first, then
Alexander polynomial and signature, with Jones confirmation last
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from ..invariants import Fingerprint, OrbitKnot
from ..knot_standards import KnotStandards
from ..orbits import OrbitWord, TemplateSpec, enumerate_orbits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchHit:
    word: OrbitWord
    evidence_level: str


@dataclass
class SearchOutcome:
    hit: SearchHit | None = None
    demoted: list[OrbitWord] = field(default_factory=list)


class TemplateSearch:
    """Orbits of one template up to a length, indexed by determinant on first use"""

    def __init__(self, spec: TemplateSpec, max_len: int, jones_budget: int | None = None,
                 progress_callback=None):
        self.spec = spec
        self.max_len = max_len
        self.jones_budget = jones_budget if jones_budget is not None else KnotStandards.get_budget('jones_strands')
        self.progress_callback = progress_callback
        self.knots = [OrbitKnot(word, spec, self.jones_budget) for word in enumerate_orbits(max_len)]
        self._by_determinant: dict[int, list[OrbitKnot]] | None = None

    def _index(self) -> dict[int, list[OrbitKnot]]:
        if self._by_determinant is None:
            index: dict[int, list[OrbitKnot]] = {}
            total = max(len(self.knots), 1)
            for done, knot in enumerate(self.knots, 1):
                index.setdefault(knot.quick_determinant, []).append(knot)
                if self.progress_callback and (done % 256 == 0 or done == total):
                    self.progress_callback(f"Indexed {done}/{total} orbits of {self.spec.label}", 100 * done / total)
            self._by_determinant = index
            logger.debug("Indexed %d orbits of %s into %d determinant classes",
                         len(self.knots), self.spec.label, len(index))
        return self._by_determinant

    def candidates(self, determinant: int) -> list[OrbitKnot]:
        return self._index().get(determinant, [])

    def determinants(self) -> set[int]:
        return set(self._index())

    def find(self, target: Fingerprint, strongest: str = 'full_jones') -> SearchOutcome:
        """First orbit, in enumeration order, whose fingerprint matches target"""
        outcome = SearchOutcome()
        for knot in self.candidates(target.determinant):
            if knot.alexander != target.alexander:
                continue
            if strongest == 'alexander_only':
                outcome.hit = SearchHit(knot.word, 'alexander_only')
                return outcome
            if knot.signature != target.signature:
                continue
            if strongest == 'full_jones' and target.jones_computed:
                jones = knot.jones
                if jones is not None:
                    if jones == target.jones:
                        outcome.hit = SearchHit(knot.word, 'full_jones')
                        return outcome
                    logger.info("Demoted %s on %s: Alexander and signature agree but Jones differs",
                                knot.word, self.spec.label)
                    outcome.demoted.append(knot.word)
                    continue
            outcome.hit = SearchHit(knot.word, 'alexander_signature')
            return outcome
        return outcome
