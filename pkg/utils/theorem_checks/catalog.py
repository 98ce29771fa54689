"""
Prime Catalog
Fingerprints of Lorenz knots and their mirrors, used to name the factors of composite orbits
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from ..cache import CatalogEntryModel, CatalogModel
from ..invariants import Fingerprint, fingerprint_batch
from ..knot_standards import KnotStandards
from ..laurent import ONE
from ..orbits import TemplateSpec, enumerate_orbits

logger = logging.getLogger(__name__)

LORENZ = TemplateSpec(0, 0)
UNKNOT = Fingerprint(alexander=ONE, determinant=1, signature=0, exponent_sum=0, jones=ONE, jones_computed=True)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    word: str
    template: str
    fingerprint: Fingerprint

    def is_trivial(self) -> bool:
        return self.fingerprint.is_trivial()

    def to_model(self) -> CatalogEntryModel:
        return CatalogEntryModel(name=self.name, word=self.word, template=self.template,
                                 fingerprint=self.fingerprint.to_dict())


@dataclass
class PrimeCatalog:
    """Catalog entries keyed by fingerprint match key; the first entry for a key wins"""

    max_len: int = 0
    entries: dict[tuple, CatalogEntry] = field(default_factory=dict)

    def add(self, entry: CatalogEntry) -> bool:
        key = entry.fingerprint.key
        current = self.entries.get(key)
        if current is None:
            self.entries[key] = entry
            return True
        if current.fingerprint.jones_computed and entry.fingerprint.jones_computed \
                and current.fingerprint.jones != entry.fingerprint.jones:
            logger.info("Catalog key collision: %s and %s share Alexander and signature but not Jones",
                        current.name, entry.name)
        return False

    def lookup(self, fp: Fingerprint) -> CatalogEntry | None:
        entry = self.entries.get(fp.key)
        if entry is None:
            return None
        return entry if entry.fingerprint.match_level(fp) else None

    def nontrivial(self) -> list[CatalogEntry]:
        return [entry for entry in self.entries.values() if not entry.is_trivial()]

    def names(self) -> list[str]:
        return [entry.name for entry in self.entries.values()]

    @property
    def unknot(self) -> CatalogEntry:
        return self.entries[UNKNOT.key]

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, fp: Fingerprint) -> bool:
        return self.lookup(fp) is not None

    def to_model(self) -> CatalogModel:
        return CatalogModel(max_len=self.max_len, entries=[e.to_model() for e in self.entries.values()])

    @classmethod
    def from_model(cls, model: CatalogModel) -> PrimeCatalog:
        catalog = cls(max_len=model.max_len)
        for item in model.entries:
            catalog.add(CatalogEntry(item.name, item.word, item.template, Fingerprint.from_dict(item.fingerprint)))
        return catalog


def _entry_name(fp: Fingerprint, word: str, spec: TemplateSpec) -> str:
    known = KnotStandards.get_knot_name(fp.alexander, fp.signature)
    if known:
        return known
    return f"{spec.label} {word}"


def build_prime_catalog(max_len: int | None = None, jones_budget: int | None = None,
                        workers: int = 1, progress_callback=None,
                        templates: tuple[TemplateSpec, ...] = (LORENZ,)) -> PrimeCatalog:
    """
    Fingerprints of all orbits up to max_len plus their mirrors, unknot forced.

    The default reads L(0,0) only. Extra templates must carry prime knots, such as
    L(0,n) for n > 0 which sit inside the Lorenz template.
    """
    max_len = max_len if max_len is not None else KnotStandards.get_budget('catalog_len')
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    catalog = PrimeCatalog(max_len=max_len)
    catalog.add(CatalogEntry('unknot', 'x', LORENZ.label, UNKNOT))

    for spec in templates:
        fingerprints = fingerprint_batch(enumerate_orbits(max_len), spec, jones_budget,
                                         workers=workers, progress_callback=progress_callback)
        for word, fp in fingerprints.items():
            catalog.add(CatalogEntry(_entry_name(fp, word.letters, spec), word.letters, spec.label, fp))
            mirrored, image = fp.mirror(), spec.mirror()
            catalog.add(CatalogEntry(_entry_name(mirrored, word.letters, image), word.letters,
                                     image.label, mirrored))
    logger.info("Prime catalog up to length %d holds %d knot types", max_len, len(catalog))
    return catalog
