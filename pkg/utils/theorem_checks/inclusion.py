"""
Template Inclusion Checks
Does every knot of one template appear in another? Checked orbit by orbit through
fingerprint search at explicit budgets
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from ..braids import BraidWord
from ..cache import InclusionMatchModel, InclusionReportModel
from ..invariants import Fingerprint, OrbitKnot, fingerprint_batch
from ..knot_standards import KnotStandards
from ..orbits import OrbitWord, TemplateSpec, enumerate_orbits
from .search import TemplateSearch

logger = logging.getLogger(__name__)

ODD_TWIST_HOST = TemplateSpec(0, -1)


@dataclass(frozen=True)
class InclusionMatch:
    word: OrbitWord
    match: OrbitWord
    evidence_level: str


@dataclass
class InclusionReport:
    """matched and unmatched together cover every enumerated sub-template orbit exactly once"""

    sub_template: TemplateSpec
    super_template: TemplateSpec
    sub_max_len: int
    super_search_len: int
    matched: list[InclusionMatch] = field(default_factory=list)
    unmatched: list[OrbitWord] = field(default_factory=list)
    demoted: list[OrbitWord] = field(default_factory=list)
    budgets: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return not self.unmatched

    def evidence_counts(self) -> dict[str, int]:
        counts = {level: 0 for level in KnotStandards.EVIDENCE_LEVELS}
        for item in self.matched:
            counts[item.evidence_level] += 1
        return counts

    def to_model(self) -> InclusionReportModel:
        return InclusionReportModel(
            sub_template=self.sub_template.label,
            super_template=self.super_template.label,
            sub_max_len=self.sub_max_len,
            super_search_len=self.super_search_len,
            budgets=self.budgets,
            matched=[InclusionMatchModel(word=m.word.letters, match=m.match.letters, evidence_level=m.evidence_level)
                     for m in self.matched],
            unmatched=[w.letters for w in self.unmatched],
            demoted=[w.letters for w in self.demoted],
        )


def verify_inclusion(sub_template: TemplateSpec, super_template: TemplateSpec,
                     sub_max_len: int | None = None, super_search_len: int | None = None,
                     jones_budget: int | None = None, strongest: str = 'full_jones',
                     workers: int = 1, progress_callback=None,
                     search: TemplateSearch | None = None) -> InclusionReport:
    """Search super_template for a fingerprint match of every sub_template orbit"""
    sub_max_len = sub_max_len if sub_max_len is not None else KnotStandards.get_budget('inclusion_sub_len')
    super_search_len = (super_search_len if super_search_len is not None
                        else KnotStandards.get_budget('inclusion_search_len'))
    if sub_max_len < 1 or super_search_len < 1:
        raise ValueError("search lengths must be at least 1")
    jones_budget = jones_budget if jones_budget is not None else KnotStandards.get_budget('jones_strands')

    report = InclusionReport(
        sub_template, super_template, sub_max_len, super_search_len,
        budgets={'jones_strands': jones_budget, 'sub_max_len': sub_max_len,
                 'super_search_len': super_search_len, 'strongest_evidence': strongest},
    )
    sub_fingerprints = fingerprint_batch(enumerate_orbits(sub_max_len), sub_template, jones_budget, workers=workers)
    if search is None or search.spec != super_template or search.max_len != super_search_len:
        search = TemplateSearch(super_template, super_search_len, jones_budget, progress_callback)

    total = max(len(sub_fingerprints), 1)
    for done, (word, fp) in enumerate(sub_fingerprints.items(), 1):
        outcome = search.find(fp, strongest)
        report.demoted.extend(outcome.demoted)
        if outcome.hit is not None:
            report.matched.append(InclusionMatch(word, outcome.hit.word, outcome.hit.evidence_level))
        else:
            logger.info("%s on %s not found in %s up to length %d",
                        word, sub_template.label, super_template.label, super_search_len)
            report.unmatched.append(word)
        if progress_callback:
            progress_callback(f"Checked {done}/{total} orbits of {sub_template.label}", 100 * done / total)
    logger.info("%s -> %s: %d matched, %d unmatched", sub_template.label, super_template.label,
                len(report.matched), len(report.unmatched))
    return report


def verify_inclusion_chain(n_values, sub_max_len: int | None = None, super_search_len: int | None = None,
                           jones_budget: int | None = None, strongest: str = 'full_jones',
                           workers: int = 1, progress_callback=None) -> list[InclusionReport]:
    """One report per link L(0,n) -> L(0,n-2), in the order the n values are given"""
    reports = []
    for n in n_values:
        reports.append(verify_inclusion(TemplateSpec(0, n), TemplateSpec(0, n - 2), sub_max_len,
                                        super_search_len, jones_budget, strongest, workers, progress_callback))
    return reports


def odd_twist_subtemplates(n: int) -> tuple[TemplateSpec, TemplateSpec]:
    """L(0,-4) and the mirror of L(1,-(2n-1)), both carried by L(0,-1)"""
    if n < 1:
        raise ValueError("n must be at least 1")
    return TemplateSpec(0, -4), TemplateSpec(1, -(2 * n - 1), mirrored=True)


def verify_odd_twist_inclusions(n: int = 1, sub_max_len: int | None = None, search_len: int | None = None,
                                jones_budget: int | None = None, strongest: str = 'full_jones',
                                workers: int = 1, progress_callback=None) -> list[InclusionReport]:
    sub_max_len = sub_max_len if sub_max_len is not None else KnotStandards.get_budget('odd_twist_sub_len')
    search_len = search_len if search_len is not None else KnotStandards.get_budget('odd_twist_search_len')
    search = TemplateSearch(ODD_TWIST_HOST, search_len, jones_budget, progress_callback)
    return [verify_inclusion(sub, ODD_TWIST_HOST, sub_max_len, search_len, jones_budget, strongest,
                             workers, progress_callback, search=search)
            for sub in odd_twist_subtemplates(n)]


@dataclass(frozen=True)
class NegativeBraidWitness:
    word: OrbitWord
    braid: BraidWord
    fingerprint: Fingerprint
    found_in: OrbitWord | None = None

    def to_dict(self) -> dict:
        return {
            'word': self.word.letters,
            'braid': self.braid.to_text(),
            'strands': self.braid.strands,
            'fingerprint': self.fingerprint.to_dict(),
            'found_in': self.found_in.letters if self.found_in is not None else None,
        }


def negative_braid_witness(spec: TemplateSpec, max_len: int, jones_budget: int | None = None,
                           against: TemplateSpec | None = None, search_len: int | None = None,
                           ) -> list[NegativeBraidWitness]:
    """
    Orbits whose simplified braid is nonempty and all-negative with a nontrivial
    fingerprint. With `against`, each witness is also searched for there.
    """
    search = None
    if against is not None:
        search_len = search_len if search_len is not None else KnotStandards.get_budget('inclusion_search_len')
        search = TemplateSearch(against, search_len, jones_budget)
    witnesses = []
    for word in enumerate_orbits(max_len):
        knot = OrbitKnot(word, spec, jones_budget)
        braid = knot.simplified
        if not braid.gens or not braid.is_negative():
            continue
        fp = knot.fingerprint()
        if fp.is_trivial():
            continue
        found = search.find(fp).hit if search is not None else None
        witnesses.append(NegativeBraidWitness(word, braid, fp, found.word if found else None))
    return witnesses
