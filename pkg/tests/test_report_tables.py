import pandas as pd

from utils.cache import build_records
from utils.knot_standards import KnotStandards
from utils.laurent import T
from utils.orbits import TemplateSpec
from utils.report_tables import OrbitCensusAnalyzer, inclusion_summary, records_to_frame
from utils.theorem_checks import verify_inclusion


def test_length_analysis_counts_orbits():
    analyzer = OrbitCensusAnalyzer(records_to_frame(build_records(TemplateSpec(0, 0), 5)))
    table = analyzer.get_length_analysis()
    assert list(table['length']) == [1, 2, 3, 4, 5]
    assert list(table['orbits']) == [2, 1, 2, 3, 6]
    assert list(table['unknots']) == [2, 1, 2, 3, 4]
    assert table.loc[table['length'] == 5, 'knot_types'].item() == 2


def test_knot_type_summary_orders_by_frequency():
    analyzer = OrbitCensusAnalyzer(records_to_frame(build_records(TemplateSpec(0, 0), 5)))
    summary = analyzer.get_knot_type_summary()
    assert list(summary['knot_type']) == ['unknot', '3_1 (positive trefoil)']
    assert summary.loc[1, 'first_word'] == 'xxyxy'


def test_empty_frames():
    analyzer = OrbitCensusAnalyzer(pd.DataFrame())
    assert analyzer.get_length_analysis().empty
    assert analyzer.get_knot_type_summary().empty


def test_inclusion_summary_columns():
    report = verify_inclusion(TemplateSpec(0, 0), TemplateSpec(0, 0), 3, 3)
    table = inclusion_summary([report])
    assert table.loc[0, 'matched'] == 5
    assert set(KnotStandards.EVIDENCE_LEVELS) <= set(table.columns)


def test_knot_names():
    assert KnotStandards.get_knot_name(T - 1 + T ** -1, -2) == '3_1 (positive trefoil)'
    assert KnotStandards.get_knot_name(T - 1 + T ** -1, 0) is None
    budgets = KnotStandards.get_budgets(jones_strands=8, catalog_len=None)
    assert budgets['jones_strands'] == 8
    assert budgets['catalog_len'] == KnotStandards.get_budget('catalog_len')
    assert budgets['negative_twist_search_len'] == 16
