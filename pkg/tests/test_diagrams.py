from utils.braids import BraidWord, build_braid
from utils.diagrams import crossing_ids, emit_diagram, render_svg, render_text
from utils.orbits import OrbitWord, TemplateSpec


def test_text_grid_for_single_crossing():
    assert render_text(BraidWord(2, (1,))) == "1 2\n| |\n X    s1+\n| |\n"


def test_text_grid_marks_negative_crossings():
    text = render_text(BraidWord(3, (-2,)))
    assert text.splitlines()[2].endswith("s2-")
    assert text.splitlines()[0] == "1 2 3"


def test_svg_is_deterministic():
    braid = build_braid(OrbitWord("xyyy"), TemplateSpec(0, -2))
    assert render_svg(braid) == render_svg(braid)


def test_svg_has_one_group_per_crossing():
    braid = build_braid(OrbitWord("xyxyy"), TemplateSpec(0, 0))
    svg = render_svg(braid, title="xyxyy")
    assert svg.lstrip().startswith("<?xml")
    assert crossing_ids(svg) == len(braid.gens)


def test_empty_braid_renders():
    assert crossing_ids(render_svg(BraidWord(1))) == 0
    assert render_text(BraidWord(1)) == "1\n|\n"


def test_emit_writes_file(tmp_path):
    path = tmp_path / "trefoil.txt"
    text = emit_diagram(BraidWord(2, (1, 1, 1)), path, fmt='text')
    assert path.read_text(encoding='utf-8') == text
    assert text.count("s1+") == 3
