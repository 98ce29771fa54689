from fractions import Fraction

import pytest
import sympy as sp

from utils.laurent import ONE, T, ZERO, LaurentPoly


def test_zero_coefficients_are_dropped():
    p = LaurentPoly.from_dict({0: 1, 1: 0, -2: 3})
    assert p.terms == ((-2, 3), (0, 1))
    assert LaurentPoly.from_dict({3: 0}) == ZERO


def test_arithmetic():
    p = T - 1 + T ** -1
    assert p.as_dict() == {-1: 1, 0: -1, 1: 1}
    assert (T + 1) * (T - 1) == T * T - 1
    assert -(T + 1) == LaurentPoly.from_dict({0: -1, 1: -1})
    assert 2 * T == T + T
    assert T ** 0 == ONE


def test_negative_power_only_for_units():
    assert T ** -3 == LaurentPoly.monomial(-3)
    with pytest.raises(ValueError):
        (T + 1) ** -1


def test_exact_divide():
    numerator = T ** 3 + 1
    assert numerator.exact_divide(T + 1) == T * T - T + 1
    assert LaurentPoly.monomial(-2, 6).exact_divide(LaurentPoly.monomial(1, 3)) == LaurentPoly.monomial(-3, 2)
    with pytest.raises(ArithmeticError):
        (T ** 2 + 1).exact_divide(T + 1)
    with pytest.raises(ZeroDivisionError):
        T.exact_divide(ZERO)


def test_symmetrize_centres_and_fixes_sign():
    p = -(T ** 2 - T + 1).shift(5)
    assert p.symmetrize() == T - 1 + T ** -1
    assert (T ** 2 - T + 1).symmetrize().evaluate(1) == 1
    with pytest.raises(ArithmeticError):
        (T + 1).symmetrize()


def test_evaluate_is_exact():
    p = T - 1 + T ** -1
    assert p.evaluate(1) == 1
    assert p.evaluate(-1) == -3
    assert p.evaluate(2) == Fraction(3, 2)


def test_substitutions():
    p = LaurentPoly.from_dict({-4: 1, 8: 2})
    assert p.divide_exponents(4) == LaurentPoly.from_dict({-1: 1, 2: 2})
    assert p.divide_exponents(-4) == LaurentPoly.from_dict({1: 1, -2: 2})
    assert LaurentPoly.from_dict({1: 1, 2: 1}).invert_variable() == LaurentPoly.from_dict({-1: 1, -2: 1})
    with pytest.raises(ArithmeticError):
        LaurentPoly.from_dict({3: 1}).divide_exponents(4)


def test_symmetry_and_span():
    p = T - 1 + T ** -1
    assert p.is_symmetric()
    assert not (T + 1).is_symmetric()
    assert p.span == 2
    assert ONE.span == 0


def test_pretty_and_pairs():
    p = T - 1 + T ** -1
    assert p.pretty() == "t - 1 + t^-1"
    assert str(ZERO) == "0"
    assert p.to_pairs() == [[-1, 1], [0, -1], [1, 1]]
    assert LaurentPoly.from_pairs(p.to_pairs()) == p


def test_sympy_boundary():
    t = sp.Symbol('t')
    assert sp.expand(LaurentPoly.from_dict({0: 1, 2: -3}).to_sympy(t) - (1 - 3 * t ** 2)) == 0
    assert LaurentPoly.from_sympy(t ** 3 - 3 * t, t, offset=-1) == LaurentPoly.from_dict({2: 1, 0: -3})
    assert LaurentPoly.from_sympy(sp.Integer(0), t).is_zero()
