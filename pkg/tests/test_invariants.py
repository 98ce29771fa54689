import itertools

import numpy as np
import pytest
import sympy as sp

from utils.braids import BraidWord, build_braid, connected_sum_braid, mirror_braid, simplify_braid
from utils.exceptions import InternalInvariantViolation, MixedSigns, NotAKnot
from utils.invariants import (
    Fingerprint,
    OrbitKnot,
    _symmetric_signature,
    alexander_burau,
    alexander_genus_bound,
    alexander_seifert,
    determinant,
    fingerprint,
    fingerprint_batch,
    genus_bennequin,
    integer_det,
    laurent_det,
    quick_determinant,
    seifert_determinant,
    seifert_matrix,
    signature,
)
from utils.laurent import ONE, T, LaurentPoly
from utils.orbits import OrbitWord, TemplateSpec, enumerate_orbits, swap_xy

FIGURE_EIGHT = BraidWord(3, (1, -2, 1, -2))
CHECK_TEMPLATES = [TemplateSpec(m, n) for m, n in itertools.product((-2, -1, 0, 1), repeat=2)]


class TestAlexander:
    def test_trefoil(self, trefoil_braid, trefoil_alexander):
        assert alexander_burau(trefoil_braid) == trefoil_alexander
        assert alexander_seifert(trefoil_braid) == trefoil_alexander

    def test_unknot(self):
        assert alexander_burau(BraidWord(1)) == ONE
        assert alexander_burau(BraidWord(2, (1,))) == ONE
        assert alexander_seifert(BraidWord(2, (-1,))) == ONE

    def test_figure_eight(self):
        expected = -T + 3 - T ** -1
        assert alexander_burau(FIGURE_EIGHT) == expected
        assert alexander_seifert(FIGURE_EIGHT) == expected

    def test_connected_sum_multiplies(self, trefoil_braid, trefoil_alexander):
        square = connected_sum_braid(trefoil_braid, mirror_braid(trefoil_braid))
        assert alexander_burau(square) == trefoil_alexander * trefoil_alexander

    def test_links_are_rejected(self):
        with pytest.raises(NotAKnot) as info:
            alexander_burau(BraidWord(2, (1, 1)))
        assert info.value.components == 2
        with pytest.raises(NotAKnot):
            seifert_matrix(BraidWord(3, (1, 1, 1)))


class TestSeifertForm:
    def test_trefoil_matrix(self, trefoil_braid):
        np.testing.assert_array_equal(seifert_matrix(trefoil_braid), np.array([[-1, 0], [1, -1]]))

    def test_figure_eight_matrix(self):
        np.testing.assert_array_equal(seifert_matrix(FIGURE_EIGHT), np.array([[-1, 1], [0, 1]]))

    def test_trivial_surfaces_are_empty(self):
        assert seifert_matrix(BraidWord(1)).shape == (0, 0)
        assert seifert_matrix(BraidWord(2, (1,))).shape == (0, 0)
        assert signature(BraidWord(1)) == 0

    def test_signature_sign_convention(self, trefoil_braid):
        assert signature(trefoil_braid) == -2
        assert signature(mirror_braid(trefoil_braid)) == 2
        assert signature(FIGURE_EIGHT) == 0

    def test_square_knot(self, trefoil_braid):
        square = connected_sum_braid(trefoil_braid, mirror_braid(trefoil_braid))
        assert signature(square) == 0
        assert determinant(square) == 9
        assert seifert_determinant(square) == 9

    def test_determinants(self, trefoil_braid):
        assert determinant(trefoil_braid) == 3
        assert determinant(FIGURE_EIGHT) == 5
        assert quick_determinant(FIGURE_EIGHT) == 5
        assert quick_determinant(trefoil_braid) == 3
        assert quick_determinant(BraidWord(1)) == 1


class TestExactDeterminants:
    def test_laurent_det_clears_negative_powers(self):
        assert laurent_det([[T, ONE], [-ONE, T ** -1]]) == LaurentPoly.constant(2)
        assert laurent_det([[T, ONE], [ONE, T ** -1]]).is_zero()
        assert laurent_det([]) == ONE

    def test_integer_det(self):
        assert integer_det(np.array([[2, 1], [1, 2]])) == 3
        assert integer_det([]) == 1

    def test_signature_ignores_zero_eigenvalues(self):
        assert _symmetric_signature(sp.Matrix([[0, 1], [1, 0]])) == 0
        assert _symmetric_signature(sp.diag(1, -1, 0, 2)) == 1
        assert _symmetric_signature(sp.zeros(3, 3)) == 0


class TestGenus:
    def test_positive_braids(self, trefoil_braid):
        assert genus_bennequin(BraidWord(2, (1,))) == 0
        assert genus_bennequin(trefoil_braid) == 1
        assert genus_bennequin(build_braid(OrbitWord("xyxyy"), TemplateSpec(0, 0))) == 1

    def test_mixed_signs(self):
        with pytest.raises(MixedSigns):
            genus_bennequin(FIGURE_EIGHT)

    def test_alexander_bound(self, trefoil_alexander):
        assert alexander_genus_bound(trefoil_alexander) == 1
        assert alexander_genus_bound(ONE) == 0


class TestTwoRoutesAgree:
    def test_alexander_and_determinant(self):
        for spec in CHECK_TEMPLATES:
            for word in enumerate_orbits(6):
                braid = simplify_braid(build_braid(word, spec))
                alexander = alexander_burau(braid)
                assert alexander_seifert(braid) == alexander, f"{word} on {spec.label}"
                det = determinant(braid)
                assert quick_determinant(braid) == det
                assert seifert_determinant(braid) == det

    def test_signature_flips_under_mirror(self):
        for spec in CHECK_TEMPLATES[:6]:
            for word in enumerate_orbits(6):
                braid = simplify_braid(build_braid(word, spec))
                assert signature(mirror_braid(braid)) == -signature(braid)


class TestFingerprint:
    def test_negative_trefoil_witness(self, trefoil_alexander, trefoil_jones):
        fp = fingerprint(OrbitWord("xyyy"), TemplateSpec(0, -2))
        assert fp.alexander == trefoil_alexander
        assert fp.determinant == 3
        assert fp.signature == 2
        assert fp.exponent_sum == -3
        assert fp.jones == trefoil_jones.invert_variable()
        assert fp.jones_computed

    def test_short_lorenz_orbits_are_unknots(self, lorenz):
        for letters in ("x", "y", "xy", "xyy", "xxy", "xyyy"):
            assert fingerprint(OrbitWord(letters), lorenz).is_trivial()

    def test_lorenz_trefoil(self, lorenz, trefoil_alexander):
        fp = fingerprint(OrbitWord("xyxyy"), lorenz)
        assert fp.key == (trefoil_alexander, 3, -2)
        assert fp.exponent_sum == 6

    def test_mirror_contract(self):
        for spec in (TemplateSpec(0, 0), TemplateSpec(0, -2), TemplateSpec(1, -1)):
            for word in enumerate_orbits(6):
                assert fingerprint(word, spec.mirror()) == fingerprint(word, spec).mirror()

    def test_letter_swap(self):
        for spec in (TemplateSpec(0, 0), TemplateSpec(0, -2), TemplateSpec(1, -2)):
            for word in enumerate_orbits(6):
                swapped = fingerprint(swap_xy(word.letters), spec.swapped())
                assert swapped.key == fingerprint(word, spec).key

    def test_jones_budget_leaves_jones_out(self):
        fp = fingerprint(OrbitWord("xyxyy"), TemplateSpec(0, 0), jones_budget=1)
        assert fp.jones is None
        assert not fp.jones_computed

    def test_match_levels(self, trefoil_alexander, trefoil_jones):
        positive = Fingerprint(trefoil_alexander, 3, -2, jones=trefoil_jones, jones_computed=True)
        negative = positive.mirror()
        bare = Fingerprint(trefoil_alexander, 3, -2)
        assert positive.match_level(positive) == 'full_jones'
        assert positive.match_level(bare) == 'alexander_signature'
        assert positive.match_level(negative) is None
        assert positive.match_level(negative, strongest='alexander_only') == 'alexander_only'
        wrong_jones = Fingerprint(trefoil_alexander, 3, -2, jones=ONE, jones_computed=True)
        assert positive.match_level(wrong_jones) is None
        assert positive.match_level(wrong_jones, strongest='alexander_signature') == 'alexander_signature'

    def test_connected_sum(self, trefoil_alexander, trefoil_jones):
        positive = Fingerprint(trefoil_alexander, 3, -2, exponent_sum=3, jones=trefoil_jones, jones_computed=True)
        square = positive.connected_sum(positive.mirror())
        assert square.key == (trefoil_alexander * trefoil_alexander, 9, 0)
        assert square.exponent_sum == 0
        assert square.jones == trefoil_jones * trefoil_jones.invert_variable()

    def test_normalization_check(self, trefoil_alexander):
        Fingerprint(trefoil_alexander, 3, -2).check_normalization()
        with pytest.raises(InternalInvariantViolation, match="normalization"):
            Fingerprint(T - 1 + T ** -1, 4, -1).check_normalization()

    def test_dict_round_trip(self, trefoil_alexander, trefoil_jones):
        fp = Fingerprint(trefoil_alexander, 3, -2, exponent_sum=3, jones=trefoil_jones, jones_computed=True)
        assert Fingerprint.from_dict(fp.to_dict()) == fp
        assert fp.to_dict()['alexander'] == [[-1, 1], [0, -1], [1, 1]]


class TestOrbitKnot:
    def test_lazy_values(self):
        knot = OrbitKnot(OrbitWord("xyyy"), TemplateSpec(0, -2))
        assert 'alexander' not in knot.__dict__
        assert knot.quick_determinant == 3
        assert knot.simplified == BraidWord(2, (-1, -1, -1))
        assert knot.fingerprint().determinant == 3
        assert repr(knot) == "OrbitKnot(xyyy, L(0,-2))"

    def test_batch_keeps_order_and_reports_progress(self, lorenz):
        words = enumerate_orbits(4)
        messages = []
        results = fingerprint_batch(words, lorenz, progress_callback=lambda msg, pct: messages.append(pct))
        assert list(results) == words
        assert len(messages) == len(words)
        assert messages[-1] == pytest.approx(100)
        assert all(fp.is_trivial() for fp in results.values())

    def test_polynomial_types(self):
        fp = fingerprint(OrbitWord("xy"), TemplateSpec(0, 0))
        assert isinstance(fp.alexander, LaurentPoly)
        assert fp.alexander == ONE
