import json

import pytest

from template_knots import build_parser, main
from utils.cache import InclusionReportModel, NegativeTwistCompositesModel, SumGridModel, SumWitnessModel, read_records


@pytest.fixture(autouse=True)
def no_cache_env(monkeypatch):
    monkeypatch.delenv('TEMPLATE_KNOTS_CACHE_DIR', raising=False)


class TestEnumerate:
    @pytest.mark.parametrize("max_len, count", [(1, 2), (3, 5)])
    def test_writes_one_line_per_orbit(self, tmp_path, capsys, max_len, count):
        path = tmp_path / "orbits.jsonl"
        assert main(['enumerate', '--template', '0,0', '--max-len', str(max_len), '--output', str(path)]) == 0
        assert len(path.read_text(encoding='utf-8').splitlines()) == count
        assert f"{count} orbits of L(0,0)" in capsys.readouterr().out

    def test_cache_dir(self, tmp_path):
        assert main(['--cache-dir', str(tmp_path), 'enumerate', '--template', '~0,2', '--max-len', '3']) == 0
        records = read_records(tmp_path / "L_0_2_mirror.jsonl")
        assert len(records) == 5
        assert all(r.mirrored for r in records)

    def test_needs_somewhere_to_write(self, capsys):
        assert main(['enumerate', '--template', '0,0', '--max-len', '2']) == 2
        assert "TEMPLATE_KNOTS_CACHE_DIR" in capsys.readouterr().err


class TestInvariants:
    def test_non_primitive_word(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(['invariants', '--template', '0,0', '--word', 'xyxy'])
        assert info.value.code == 2
        assert "proper power of 'xy'" in capsys.readouterr().err

    def test_negative_trefoil(self, capsys):
        assert main(['invariants', '--template', '0,-2', '--word', 'xyyy', '--oracle']) == 0
        document = json.loads(capsys.readouterr().out)
        assert document['fingerprint']['alexander'] == [[-1, 1], [0, -1], [1, 1]]
        assert document['fingerprint']['exponent_sum'] == -3
        assert document['name'] == '3_1 (negative trefoil)'
        assert document['genus_bennequin'] == 1
        assert document['oracle_agrees'] is True

    def test_unknot(self, capsys):
        assert main(['invariants', '--template', '0,0', '--word', 'yx']) == 0
        document = json.loads(capsys.readouterr().out)
        assert document['word'] == 'xy'
        assert document['name'] == 'unknot'


class TestVerifyInclusion:
    def test_identity(self, tmp_path):
        path = tmp_path / "report.json"
        argv = ['verify-inclusion', '--sub', '0,0', '--super', '0,0', '--sub-len', '4', '--search-len', '4',
                '--output', str(path)]
        assert main(argv) == 0
        report = InclusionReportModel.model_validate_json(path.read_text(encoding='utf-8'))
        assert report.unmatched == []
        assert report.budgets['jones_strands'] == 12

    def test_negative_witness_fails(self, capsys):
        argv = ['verify-inclusion', '--sub', '0,-2', '--super', '0,0', '--sub-len', '4', '--search-len', '8']
        assert main(argv) == 1
        assert "unmatched: xyyy" in capsys.readouterr().out


def test_verify_sum_of_unknots(tmp_path, capsys):
    path = tmp_path / "sum.json"
    assert main(['verify-sum', '--u', 'x', '--v', 'x', '--search-len', '3', '--output', str(path)]) == 0
    assert "found in L(0,-2) as x" in capsys.readouterr().out
    assert SumWitnessModel.model_validate_json(path.read_text(encoding='utf-8')).status == 'found'


def test_sum_grid_reports_pairs_missing_at_budget(tmp_path, capsys):
    path = tmp_path / "grid.json"
    argv = ['sum-grid', '--max-factor-len', '3', '--target', '0,0', '--search-len', '6', '--output', str(path)]
    assert main(argv) == 1
    assert "0 of 1 sums found in L(0,0) up to length 6" in capsys.readouterr().out
    grid = SumGridModel.model_validate_json(path.read_text(encoding='utf-8'))
    assert [(p.u, p.v, p.status) for p in grid.pairs] == [("xyy", "xyy", 'not_found_at_budget')]
    assert grid.budgets['sum_factor_len'] == 3


def test_internal_value_errors_are_not_usage_errors(tmp_path, monkeypatch):
    def broken(*args, **kwargs):
        raise ValueError("arithmetic went wrong")

    monkeypatch.setattr('template_knots.verify_connected_sum', broken)
    path = tmp_path / "sum.json"
    with pytest.raises(ValueError, match="arithmetic"):
        main(['verify-sum', '--u', 'x', '--v', 'x', '--output', str(path)])
    assert not path.exists()


def test_emit_text_diagram(tmp_path, capsys):
    path = tmp_path / "xy.txt"
    assert main(['emit-diagram', '--template', '0,0', '--word', 'xy', '--format', 'text', '--output', str(path)]) == 0
    assert capsys.readouterr().out == "1 2\n| |\n X    s1+\n| |\n"
    assert path.exists()


def test_emit_svg_of_raw_braid(tmp_path):
    path = tmp_path / "xyyy.svg"
    assert main(['emit-diagram', '--template', '0,-2', '--word', 'xyyy', '--output', str(path)]) == 0
    assert path.read_text(encoding='utf-8').count('id="crossing-') == 9


def test_bad_template_leaves_no_output(tmp_path, capsys):
    path = tmp_path / "never.svg"
    with pytest.raises(SystemExit) as info:
        main(['emit-diagram', '--template', 'nonsense', '--word', 'xy', '--output', str(path)])
    assert info.value.code == 2
    assert not path.exists()
    assert "cannot parse template 'nonsense'" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ['enumerate', '--template', '0,0', '--max-len', '0'],
    ['find-composites', '--negative-twists', '0'],
    ['find-composites', '--template', '0,0', '--negative-twists', '-1'],
    ['find-composites', '--max-len', '4'],
    ['witness', '--against', 'L(0'],
])
def test_bad_arguments_exit_at_parse_time(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_build_catalog(tmp_path, capsys):
    path = tmp_path / "catalog.json"
    assert main(['build-catalog', '--max-len', '2', '--output', str(path)]) == 0
    assert capsys.readouterr().out.split() == ['unknot']
    assert json.loads(path.read_text(encoding='utf-8'))['budgets']['max_len'] == 2


def test_find_composites_with_saved_catalog(tmp_path):
    catalog = tmp_path / "catalog.json"
    assert main(['build-catalog', '--max-len', '5', '--output', str(catalog)]) == 0
    argv = ['find-composites', '--template', '0,0', '--max-len', '6', '--catalog', str(catalog), '--expect-none']
    assert main(argv) == 0
    argv[-1] = '--expect-some'
    assert main(argv) == 1


def test_negative_twists_without_composites_at_budget(tmp_path, capsys):
    catalog = tmp_path / "catalog.json"
    report = tmp_path / "negative.json"
    assert main(['build-catalog', '--max-len', '3', '--output', str(catalog)]) == 0
    argv = ['find-composites', '--negative-twists', '-1', '-2', '--max-len', '3', '--catalog', str(catalog),
            '--output', str(report)]
    assert main(argv) == 1
    out = capsys.readouterr().out
    assert "L(0,-1): no composite up to length 3" in out
    assert "L(0,-2): no composite up to length 3" in out
    model = NegativeTwistCompositesModel.model_validate_json(report.read_text(encoding='utf-8'))
    assert model.composites == {-1: None, -2: None}
    assert model.max_len == 3


def test_census(tmp_path, capsys):
    path = tmp_path / "census.csv"
    assert main(['census', '--template', '0,0', '--max-len', '5', '--output', str(path)]) == 0
    assert "positive trefoil" in capsys.readouterr().out
    assert path.read_text(encoding='utf-8').splitlines()[0].startswith("length,orbits,unknots")


def test_witness(capsys):
    argv = ['witness', '--template', '0,-2', '--max-len', '4', '--against', '0,0', '--search-len', '8']
    assert main(argv) == 0
    assert "xyyy: braid [-1 -1 -1] on 2 strands" in capsys.readouterr().out


def test_subcommand_is_required():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])
