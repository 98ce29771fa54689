"""
Fingerprint Cache and Report Models
JSON Lines fingerprint cache plus the versioned JSON report documents written by the CLI
"""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import Iterable, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from .invariants import Fingerprint, OrbitKnot
from .knot_standards import KnotStandards
from .orbits import OrbitWord, TemplateSpec, enumerate_orbits

logger = logging.getLogger(__name__)

SCHEMA_VERSION = KnotStandards.SCHEMA_VERSION
EvidenceLevel = Literal['alexander_only', 'alexander_signature', 'full_jones']
SumStatus = Literal['found', 'not_found_at_budget']


class CacheRecord(BaseModel):
    """One fingerprinted orbit; unique by (m, n, mirrored, word)"""

    model_config = ConfigDict(frozen=True)

    schema_version: int = SCHEMA_VERSION
    m: int
    n: int
    mirrored: bool = False
    word: str
    alexander: list[list[int]]
    determinant: int
    signature: int
    exponent_sum: int
    jones: Optional[list[list[int]]] = None
    jones_computed: bool = False
    strands: Optional[int] = None
    crossings: Optional[int] = None

    @property
    def key(self) -> tuple:
        return (self.m, self.n, self.mirrored, self.word)

    @classmethod
    def from_fingerprint(cls, spec: TemplateSpec, word: str, fp: Fingerprint,
                         strands: int | None = None, crossings: int | None = None) -> CacheRecord:
        return cls(m=spec.m, n=spec.n, mirrored=spec.mirrored, word=str(word),
                   strands=strands, crossings=crossings, **fp.to_dict())

    def to_fingerprint(self) -> Fingerprint:
        return Fingerprint.from_dict(self.model_dump())

    @property
    def template(self) -> TemplateSpec:
        return TemplateSpec(self.m, self.n, self.mirrored)


class InclusionMatchModel(BaseModel):
    word: str
    match: str
    evidence_level: EvidenceLevel


class InclusionReportModel(BaseModel):
    schema_version: int = SCHEMA_VERSION
    sub_template: str
    super_template: str
    sub_max_len: int
    super_search_len: int
    budgets: dict = Field(default_factory=dict)
    matched: list[InclusionMatchModel] = Field(default_factory=list)
    unmatched: list[str] = Field(default_factory=list)
    demoted: list[str] = Field(default_factory=list)


class InclusionChainModel(BaseModel):
    schema_version: int = SCHEMA_VERSION
    budgets: dict = Field(default_factory=dict)
    links: list[InclusionReportModel] = Field(default_factory=list)


class CompositeReportModel(BaseModel):
    template: str
    word: str
    fingerprint: dict
    factors: list[str]
    factor_words: list[str]
    evidence_level: EvidenceLevel


class CompositeSearchModel(BaseModel):
    schema_version: int = SCHEMA_VERSION
    template: str
    max_len: int
    catalog_len: int
    budgets: dict = Field(default_factory=dict)
    composites: list[CompositeReportModel] = Field(default_factory=list)


class NegativeTwistCompositesModel(BaseModel):
    schema_version: int = SCHEMA_VERSION
    max_len: int
    catalog_len: int
    budgets: dict = Field(default_factory=dict)
    composites: dict[int, Optional[CompositeReportModel]] = Field(default_factory=dict)


class SumWitnessModel(BaseModel):
    schema_version: int = SCHEMA_VERSION
    u: str
    v: str
    target: str
    search_len: int
    product: dict
    status: SumStatus
    witness: Optional[str] = None
    evidence_level: Optional[EvidenceLevel] = None
    budgets: dict = Field(default_factory=dict)


class SumGridModel(BaseModel):
    schema_version: int = SCHEMA_VERSION
    target: str
    max_factor_len: int
    search_len: int
    budgets: dict = Field(default_factory=dict)
    pairs: list[SumWitnessModel] = Field(default_factory=list)


class CatalogEntryModel(BaseModel):
    name: str
    word: str
    template: str
    fingerprint: dict


class CatalogModel(BaseModel):
    schema_version: int = SCHEMA_VERSION
    max_len: int
    budgets: dict = Field(default_factory=dict)
    entries: list[CatalogEntryModel] = Field(default_factory=list)


class WitnessModel(BaseModel):
    schema_version: int = SCHEMA_VERSION
    template: str
    max_len: int
    budgets: dict = Field(default_factory=dict)
    witnesses: list[dict] = Field(default_factory=list)


# ---------------------------------------------------------------------- #
# building records
# ---------------------------------------------------------------------- #

def _record_task(word: OrbitWord, spec: TemplateSpec, jones_budget: int | None) -> CacheRecord:
    knot = OrbitKnot(word, spec, jones_budget)
    return CacheRecord.from_fingerprint(spec, word.letters, knot.fingerprint(),
                                        strands=knot.simplified.strands, crossings=len(knot.simplified))


def build_records(spec: TemplateSpec, max_len: int, jones_budget: int | None = None,
                  workers: int = 1, progress_callback=None) -> list[CacheRecord]:
    """One record per orbit of spec up to max_len, in enumeration order"""
    words = enumerate_orbits(max_len)
    task = partial(_record_task, spec=spec, jones_budget=jones_budget)
    total = max(len(words), 1)
    records: list[CacheRecord] = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(task, words, chunksize=16)
            for done, record in enumerate(results, 1):
                records.append(record)
                if progress_callback:
                    progress_callback(f"Recorded {done}/{total} orbits of {spec.label}", 100 * done / total)
    else:
        for done, word in enumerate(words, 1):
            records.append(task(word))
            if progress_callback:
                progress_callback(f"Recorded {done}/{total} orbits of {spec.label}", 100 * done / total)
    return records


# ---------------------------------------------------------------------- #
# cache files
# ---------------------------------------------------------------------- #

def resolve_cache_dir(flag: str | os.PathLike | None = None) -> Path | None:
    """--cache-dir wins over the environment variable; no default location"""
    value = flag or os.environ.get(KnotStandards.CACHE_DIR_ENV)
    return Path(value) if value else None


def cache_path(cache_dir: Path, spec: TemplateSpec) -> Path:
    suffix = '_mirror' if spec.mirrored else ''
    return Path(cache_dir) / f"L_{spec.m}_{spec.n}{suffix}.jsonl"


def _preferred(a: CacheRecord, b: CacheRecord) -> CacheRecord:
    """Pick one of two records sharing a key independently of argument order"""
    if a.jones_computed != b.jones_computed:
        return a if a.jones_computed else b
    return min(a, b, key=lambda r: r.model_dump_json())


def merge_records(*record_sets: Iterable[CacheRecord]) -> list[CacheRecord]:
    """Union of record sets, deduplicated by key and sorted; independent of argument order"""
    merged: dict[tuple, CacheRecord] = {}
    for records in record_sets:
        for record in records:
            current = merged.get(record.key)
            merged[record.key] = record if current is None else _preferred(current, record)
    return sorted(merged.values(), key=lambda r: (r.m, r.n, r.mirrored, len(r.word), r.word))


def write_records(path: str | os.PathLike, records: Iterable[CacheRecord]) -> int:
    """Write records as JSON Lines in merge order; returns the count written"""
    path = Path(path)
    ordered = merge_records(records)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open('w', encoding='utf-8') as handle:
        for record in ordered:
            handle.write(record.model_dump_json() + '\n')
    logger.info("Wrote %d records to %s", len(ordered), path)
    return len(ordered)


def read_records(path: str | os.PathLike) -> list[CacheRecord]:
    path = Path(path)
    if not path.exists():
        return []
    records = []
    with path.open(encoding='utf-8') as handle:
        for line_no, line in enumerate(handle, 1):
            line = line.strip()
            if not line:
                continue
            try:
                records.append(CacheRecord.model_validate(json.loads(line)))
            except (ValueError, TypeError) as exc:
                logger.warning("Skipping unreadable cache line %d in %s: %s", line_no, path, exc)
    return records


def update_cache(cache_dir: Path, spec: TemplateSpec, records: Iterable[CacheRecord]) -> Path:
    """Merge new records into the template's cache file"""
    path = cache_path(cache_dir, spec)
    write_records(path, merge_records(read_records(path), records))
    return path


def write_report(path: str | os.PathLike, model: BaseModel):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(model.model_dump_json(indent=2) + '\n', encoding='utf-8')
    logger.info("Wrote report to %s", path)
