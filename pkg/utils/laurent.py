"""
Exact Laurent Polynomials
Integer Laurent polynomials in one variable, the value type of every knot polynomial
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

import sympy as sp


def _trim(coeffs: Mapping[int, int]) -> dict[int, int]:
    """Remove all zero entries from a {exponent: coefficient} dictionary"""
    return {e: c for e, c in coeffs.items() if c != 0}


@dataclass(frozen=True)
class LaurentPoly:
    """
    Sparse Laurent polynomial with exact integer coefficients.

    Stored as a tuple of (exponent, coefficient) pairs sorted by exponent with no
    zero coefficients, so equality and hashing are literal coefficient equality.
    """

    terms: tuple[tuple[int, int], ...] = ()

    # ------------------------------------------------------------------ #
    # construction
    # ------------------------------------------------------------------ #
    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int]) -> LaurentPoly:
        return cls(tuple(sorted(_trim(coeffs).items())))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> LaurentPoly:
        coeffs: dict[int, int] = {}
        for e, c in pairs:
            coeffs[int(e)] = coeffs.get(int(e), 0) + int(c)
        return cls.from_dict(coeffs)

    @classmethod
    def from_sympy(cls, expr, symbol: sp.Symbol, offset: int = 0) -> LaurentPoly:
        """Read a polynomial expression in symbol, shifting every exponent by offset"""
        poly = sp.Poly(sp.expand(expr), symbol)
        return cls.from_dict({monom[0] + offset: int(coeff) for monom, coeff in poly.terms()})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls.from_dict({exponent: coeff})

    @classmethod
    def constant(cls, value: int) -> LaurentPoly:
        return cls.from_dict({0: value})

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls(())

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls(((0, 1),))

    # ------------------------------------------------------------------ #
    # inspection
    # ------------------------------------------------------------------ #
    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def to_sympy(self, symbol: sp.Symbol):
        return sp.Add(*[c * symbol ** e for e, c in self.terms])

    def to_pairs(self) -> list[list[int]]:
        """Ordered [exponent, coefficient] pairs, the serialized form"""
        return [[e, c] for e, c in self.terms]

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return self.terms[0][0]

    @property
    def max_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return self.terms[-1][0]

    @property
    def span(self) -> int:
        return self.max_degree - self.min_degree if self.terms else 0

    @property
    def leading_coefficient(self) -> int:
        return self.terms[-1][1]

    def evaluate(self, value):
        """Evaluate exactly at an integer or Fraction point"""
        total = 0
        for e, c in self.terms:
            total += c * (Fraction(value) ** e if e < 0 else value ** e)
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def is_symmetric(self) -> bool:
        """True when p(t) = p(1/t)"""
        return self == self.invert_variable()

    # ------------------------------------------------------------------ #
    # arithmetic
    # ------------------------------------------------------------------ #
    def __add__(self, other) -> LaurentPoly:
        other = _coerce(other)
        out = self.as_dict()
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return LaurentPoly.from_dict(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> LaurentPoly:
        return _coerce(other) - self

    def __mul__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if not self.terms or not other.terms:
            return LaurentPoly.zero()
        out: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(out)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> LaurentPoly:
        if power < 0:
            if len(self.terms) != 1 or abs(self.terms[0][1]) != 1:
                raise ValueError("only units may be raised to negative powers")
            (e, c), = self.terms
            return LaurentPoly.monomial(e * power, c ** (-power))
        result = LaurentPoly.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t^k"""
        return LaurentPoly(tuple((e + k, c) for e, c in self.terms))

    def invert_variable(self) -> LaurentPoly:
        """Substitute t -> 1/t"""
        return LaurentPoly(tuple(sorted((-e, c) for e, c in self.terms)))

    def divide_exponents(self, divisor: int) -> LaurentPoly:
        """Substitute t^divisor -> t; every exponent must be divisible"""
        out = {}
        for e, c in self.terms:
            if e % divisor:
                raise ArithmeticError(f"exponent {e} not divisible by {divisor}")
            out[e // divisor] = c
        return LaurentPoly.from_dict(out)

    def exact_divide(self, other: LaurentPoly) -> LaurentPoly:
        """Exact division in Z[t, 1/t]; raises ArithmeticError when a remainder is left"""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        offset = self.min_degree - other.min_degree
        num = {e - self.min_degree: c for e, c in self.terms}
        den = {e - other.min_degree: c for e, c in other.terms}
        den_deg = max(den)
        den_lead = den[den_deg]
        quotient: dict[int, int] = {}
        while num:
            top = max(num)
            if top < den_deg:
                raise ArithmeticError("division leaves a remainder")
            coeff, rem = divmod(num[top], den_lead)
            if rem:
                raise ArithmeticError("division is not exact over the integers")
            q_deg = top - den_deg
            quotient[q_deg] = coeff
            for e, c in den.items():
                key = e + q_deg
                value = num.get(key, 0) - coeff * c
                if value:
                    num[key] = value
                else:
                    num.pop(key, None)
        return LaurentPoly.from_dict(quotient).shift(offset)

    # ------------------------------------------------------------------ #
    # normal forms
    # ------------------------------------------------------------------ #
    def symmetrize(self) -> LaurentPoly:
        """
        Multiply by ±t^k so the polynomial is centred on exponent 0 and its
        value at 1 is positive. This is the Alexander normal form.
        """
        if self.is_zero():
            return self
        lo, hi = self.min_degree, self.max_degree
        if (lo + hi) % 2:
            raise ArithmeticError("odd span cannot be centred")
        centred = self.shift(-(lo + hi) // 2)
        value = sum(c for _, c in centred.terms)
        if value < 0 or (value == 0 and centred.leading_coefficient < 0):
            centred = -centred
        return centred

    # ------------------------------------------------------------------ #
    # display
    # ------------------------------------------------------------------ #
    def pretty(self, variable: str = "t") -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in reversed(self.terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = f"{mag}"
            else:
                power = variable if e == 1 else f"{variable}^{e}"
                body = power if mag == 1 else f"{mag}{power}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.pretty()


def _coerce(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.constant(value)
    raise TypeError(f"cannot combine LaurentPoly with {type(value).__name__}")


T = LaurentPoly.monomial(1)
ONE = LaurentPoly.one()
ZERO = LaurentPoly.zero()
