"""
Composite Knot Search
Orbits whose fingerprint factors as a product of two nontrivial catalog knots, and
connected-sum witnesses searched inside a target template
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from ..cache import CompositeReportModel, SumWitnessModel
from ..invariants import Fingerprint, fingerprint
from ..knot_standards import KnotStandards
from ..orbits import OrbitWord, TemplateSpec, enumerate_orbits
from .catalog import CatalogEntry, PrimeCatalog
from .search import TemplateSearch

logger = logging.getLogger(__name__)

SUM_TARGET = TemplateSpec(0, -2)
SUM_LEFT = TemplateSpec(0, 2)
SUM_RIGHT = TemplateSpec(0, 2, mirrored=True)


@dataclass(frozen=True)
class CompositeReport:
    """Both factors are nontrivial and their product reproduces the orbit's match key"""

    template: TemplateSpec
    word: OrbitWord
    fingerprint: Fingerprint
    factors: tuple[CatalogEntry, CatalogEntry]
    evidence_level: str

    @property
    def name(self) -> str:
        return ' # '.join(entry.name for entry in self.factors)

    def product(self) -> Fingerprint:
        first, second = self.factors
        return first.fingerprint.connected_sum(second.fingerprint)

    def to_model(self) -> CompositeReportModel:
        return CompositeReportModel(
            template=self.template.label,
            word=self.word.letters,
            fingerprint=self.fingerprint.to_dict(),
            factors=[entry.name for entry in self.factors],
            factor_words=[f"{entry.word} on {entry.template}" for entry in self.factors],
            evidence_level=self.evidence_level,
        )


def _factor_products(catalog: PrimeCatalog) -> dict[tuple, list[tuple[CatalogEntry, CatalogEntry]]]:
    """Every unordered pair of nontrivial catalog entries, keyed by the product's match key"""
    primes = catalog.nontrivial()
    products: dict[tuple, list[tuple[CatalogEntry, CatalogEntry]]] = {}
    for i, first in enumerate(primes):
        for second in primes[i:]:
            key = first.fingerprint.connected_sum(second.fingerprint).key
            products.setdefault(key, []).append((first, second))
    return products


def find_composites(spec: TemplateSpec, max_len: int | None, catalog: PrimeCatalog,
                    jones_budget: int | None = None, strongest: str = 'full_jones',
                    limit: int | None = None, progress_callback=None,
                    search: TemplateSearch | None = None) -> list[CompositeReport]:
    """Orbits of spec whose fingerprint equals a product of two nontrivial catalog fingerprints"""
    if not len(catalog):
        raise ValueError("catalog is empty")
    max_len = max_len if max_len is not None else KnotStandards.get_budget('composite_search_len')
    products = _factor_products(catalog)
    determinants = {key[1] for key in products}
    if search is None:
        search = TemplateSearch(spec, max_len, jones_budget, progress_callback)

    reports: list[CompositeReport] = []
    for det in sorted(search.determinants() & determinants):
        for knot in search.candidates(det):
            if (knot.alexander, det, knot.signature) not in products:
                continue
            fp = knot.fingerprint(with_jones=strongest == 'full_jones')
            if catalog.lookup(fp) is not None:
                continue
            for first, second in products[fp.key]:
                level = first.fingerprint.connected_sum(second.fingerprint).match_level(fp, strongest)
                if level is not None:
                    reports.append(CompositeReport(spec, knot.word, fp, (first, second), level))
                    break
            else:
                logger.info("Demoted %s on %s: factor product fails Jones confirmation", knot.word, spec.label)
    reports.sort(key=lambda r: (r.word.length, r.word.letters))
    if limit is not None:
        reports = reports[:limit]
    logger.info("Found %d composite orbits on %s up to length %d", len(reports), spec.label, max_len)
    return reports


def composites_for_negative_twists(n_values, max_len: int | None, catalog: PrimeCatalog,
                                   jones_budget: int | None = None, strongest: str = 'full_jones',
                                   progress_callback=None,
                                   searches: dict[int, TemplateSearch] | None = None) -> dict[int, CompositeReport | None]:
    """
    First composite orbit found on each L(0,n) with n < 0, or None when none shows up at budget.

    searches maps n to a prebuilt index of L(0,n) that is reused when its length matches.
    """
    n_values = list(n_values)
    bad = [n for n in n_values if n >= 0]
    if bad:
        raise ValueError(f"n must be negative, got {bad[0]}")
    max_len = max_len if max_len is not None else KnotStandards.get_budget('negative_twist_search_len')
    found = {}
    for n in n_values:
        search = (searches or {}).get(n)
        if search is not None and search.max_len != max_len:
            search = None
        reports = find_composites(TemplateSpec(0, n), max_len, catalog, jones_budget, strongest,
                                  limit=1, progress_callback=progress_callback, search=search)
        found[n] = reports[0] if reports else None
        if found[n] is None:
            logger.info("No composite found on L(0,%d) up to length %d", n, max_len)
    return found


@dataclass(frozen=True)
class SumWitness:
    """
    Outcome of one connected-sum search. Swapping u and v gives the mirror of the
    product, which the target need not carry at the same length.
    """

    u: OrbitWord
    v: OrbitWord
    target: TemplateSpec
    search_len: int
    product: Fingerprint
    word: OrbitWord | None = None
    evidence_level: str | None = None

    @property
    def found(self) -> bool:
        return self.word is not None

    @property
    def status(self) -> str:
        return 'found' if self.found else 'not_found_at_budget'

    def to_model(self, budgets: dict | None = None) -> SumWitnessModel:
        return SumWitnessModel(
            u=self.u.letters, v=self.v.letters, target=self.target.label, search_len=self.search_len,
            product=self.product.to_dict(), status=self.status,
            witness=self.word.letters if self.word is not None else None,
            evidence_level=self.evidence_level, budgets=budgets or {},
        )


def verify_connected_sum(u: OrbitWord, v: OrbitWord, target: TemplateSpec | None = None,
                         search_len: int | None = None, jones_budget: int | None = None,
                         strongest: str = 'full_jones', search: TemplateSearch | None = None,
                         u_template: TemplateSpec = SUM_LEFT, v_template: TemplateSpec = SUM_RIGHT) -> SumWitness:
    """Search target for an orbit matching the connected sum of u (on L(0,2)) and v (on the mirror of L(0,2))"""
    target = target if target is not None else SUM_TARGET
    search_len = search_len if search_len is not None else KnotStandards.get_budget('sum_search_len')
    product = fingerprint(u, u_template, jones_budget).connected_sum(fingerprint(v, v_template, jones_budget))
    if search is None or search.spec != target or search.max_len != search_len:
        search = TemplateSearch(target, search_len, jones_budget)
    hit = search.find(product, strongest).hit
    if hit is None:
        logger.info("No witness for %s # %s in %s up to length %d", u, v, target.label, search_len)
        return SumWitness(u, v, target, search_len, product)
    return SumWitness(u, v, target, search_len, product, hit.word, hit.evidence_level)


def sum_factors(spec: TemplateSpec, max_len: int, jones_budget: int | None = None) -> list[OrbitWord]:
    """Orbits of spec up to max_len whose knot is nontrivial"""
    return [word for word in enumerate_orbits(max_len) if not fingerprint(word, spec, jones_budget).is_trivial()]


def verify_sum_grid(max_factor_len: int | None = None, target: TemplateSpec | None = None,
                    search_len: int | None = None, jones_budget: int | None = None,
                    strongest: str = 'full_jones', progress_callback=None,
                    search: TemplateSearch | None = None) -> list[SumWitness]:
    """
    Every ordered pair of nontrivial factors (u on L(0,2), v on its mirror) searched in
    one shared index of target. Pairs without a witness come back with status
    not_found_at_budget.
    """
    max_factor_len = max_factor_len if max_factor_len is not None else KnotStandards.get_budget('sum_factor_len')
    target = target if target is not None else SUM_TARGET
    if search is not None:
        target, search_len = search.spec, search.max_len
    search_len = search_len if search_len is not None else KnotStandards.get_budget('sum_search_len')
    left = sum_factors(SUM_LEFT, max_factor_len, jones_budget)
    right = sum_factors(SUM_RIGHT, max_factor_len, jones_budget)
    if search is None:
        search = TemplateSearch(target, search_len, jones_budget)
    pairs = list(itertools.product(left, right))
    witnesses = []
    for done, (u, v) in enumerate(pairs, 1):
        witnesses.append(verify_connected_sum(u, v, target, search_len, jones_budget, strongest, search))
        if progress_callback:
            progress_callback(f"Searched {done}/{len(pairs)} sums in {target.label}", 100 * done / len(pairs))
    found = sum(w.found for w in witnesses)
    logger.info("%d of %d sums found in %s up to length %d", found, len(witnesses), target.label, search_len)
    return witnesses
