"""
Report Tables
pandas summaries of fingerprint records and search reports for terminal output
"""

import pandas as pd

from .knot_standards import KnotStandards
from .laurent import LaurentPoly


def records_to_frame(records):
    rows = [record.model_dump() for record in records]
    return pd.DataFrame(rows)


class OrbitCensusAnalyzer:
    def __init__(self, records_df):
        self.records_df = records_df.copy()
        self._prepare_data()

    def _prepare_data(self):
        """Add derived columns used by the summaries"""
        if self.records_df.empty:
            return

        self.records_df['length'] = self.records_df['word'].str.len()
        self.records_df['is_unknot'] = self.records_df['alexander'].apply(lambda a: a == [[0, 1]]) \
            & (self.records_df['signature'] == 0)
        self.records_df['knot_type'] = self.records_df.apply(self._knot_type, axis=1)
        self.records_df['alexander_text'] = self.records_df['alexander'].apply(
            lambda a: LaurentPoly.from_pairs(a).pretty())

    @staticmethod
    def _knot_type(row):
        """Reference name when known, else the Alexander/signature key"""
        alexander = LaurentPoly.from_pairs(row['alexander'])
        name = KnotStandards.get_knot_name(alexander, int(row['signature']))
        return name or f"[{alexander.pretty()}] sig {row['signature']}"

    def get_length_analysis(self):
        """Census per word length"""
        if self.records_df.empty:
            return pd.DataFrame()

        length_stats = self.records_df.groupby('length').agg({
            'word': 'count',
            'is_unknot': 'sum',
            'knot_type': 'nunique',
            'strands': 'max',
            'crossings': 'max',
            'jones_computed': 'sum',
        })
        length_stats.columns = ['orbits', 'unknots', 'knot_types', 'max_strands', 'max_crossings', 'with_jones']
        return length_stats.reset_index()

    def get_knot_type_summary(self):
        """Orbits per knot type, with the shortest word carrying it"""
        if self.records_df.empty:
            return pd.DataFrame()

        ordered = self.records_df.sort_values(['length', 'word'])
        summary = ordered.groupby('knot_type', sort=False).agg(
            orbits=('word', 'count'),
            first_word=('word', 'first'),
            determinant=('determinant', 'first'),
            signature=('signature', 'first'),
            alexander=('alexander_text', 'first'),
        )
        return summary.sort_values(['orbits', 'determinant'], ascending=[False, True]).reset_index()


def inclusion_summary(reports):
    """One row per inclusion report with counts per evidence level"""
    rows = []
    for report in reports:
        row = {
            'sub': report.sub_template.label,
            'super': report.super_template.label,
            'sub_len': report.sub_max_len,
            'search_len': report.super_search_len,
            'matched': len(report.matched),
            'unmatched': len(report.unmatched),
        }
        row.update(report.evidence_counts())
        rows.append(row)
    return pd.DataFrame(rows)


def composite_summary(reports):
    rows = [{
        'template': r.template.label,
        'word': r.word.letters,
        'factors': r.name,
        'determinant': r.fingerprint.determinant,
        'signature': r.fingerprint.signature,
        'evidence': r.evidence_level,
    } for r in reports]
    return pd.DataFrame(rows)


def sum_grid_summary(witnesses):
    """One row per connected-sum pair; witness is empty when nothing turned up at budget"""
    rows = [{
        'u': w.u.letters,
        'v': w.v.letters,
        'determinant': w.product.determinant,
        'signature': w.product.signature,
        'status': w.status,
        'witness': w.word.letters if w.word is not None else '',
        'evidence': w.evidence_level or '',
    } for w in witnesses]
    return pd.DataFrame(rows)
