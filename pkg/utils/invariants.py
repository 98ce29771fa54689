"""
Knot Invariants
Exact invariants of closed braids: Alexander polynomial by two routes, Seifert form,
signature, determinant, genus, and the Fingerprint bundle used as knot-type evidence
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property, partial
from typing import Iterable, Sequence

import numpy as np
import sympy as sp
from sympy.polys.matrices import DomainMatrix

from .braids import BraidWord, build_braid, simplify_braid
from .exceptions import InternalInvariantViolation, MixedSigns, NotAKnot, StrandBudgetExceeded
from .jones import jones_tl
from .knot_standards import KnotStandards
from .laurent import LaurentPoly, ONE, T, ZERO
from .orbits import OrbitWord, TemplateSpec

logger = logging.getLogger(__name__)


def _require_knot(braid: BraidWord):
    components = braid.components()
    if components != 1:
        raise NotAKnot(components)


# ---------------------------------------------------------------------- #
# exact determinants
# ---------------------------------------------------------------------- #

_t = sp.Symbol('t')


def _sympy_det(matrix: sp.Matrix):
    """Fraction-free determinant over the ring sympy infers for the entries (ZZ or ZZ[t])"""
    dm = DomainMatrix.from_Matrix(matrix)
    return dm.domain.to_sympy(dm.det())


def laurent_det(matrix: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """
    Determinant over Z[t, 1/t].

    Entries are shifted by a common t^k into Z[t] first, and the result is
    shifted back by t^(-k size).
    """
    size = len(matrix)
    if size == 0:
        return ONE
    degrees = [entry.min_degree for row in matrix for entry in row if not entry.is_zero()]
    shift = -min(degrees, default=0)
    entries = sp.Matrix(size, size, lambda i, j: matrix[i][j].shift(shift).to_sympy(_t))
    return LaurentPoly.from_sympy(_sympy_det(entries), _t, offset=-shift * size)


def integer_det(matrix) -> int:
    if not len(matrix):
        return 1
    return int(_sympy_det(sp.Matrix(np.asarray(matrix).tolist())))


# ---------------------------------------------------------------------- #
# Alexander polynomial via reduced Burau
# ---------------------------------------------------------------------- #

def _burau_rows(braid: BraidWord, t, one, zero, inverse_t) -> list[list]:
    """
    Reduced Burau image of the braid, built by row operations on the identity.

    sigma_i:    row i <- t row(i-1) - t row(i) + row(i+1)
    sigma_i^-1: row i <- row(i-1) - t^-1 row(i) + t^-1 row(i+1)
    Rows outside 1..l-1 are dropped.
    """
    size = braid.strands - 1
    rows = [[one if r == c else zero for c in range(size)] for r in range(size)]
    for g in braid.gens:
        i = abs(g) - 1
        if g > 0:
            left, middle, right = t, -t, one
        else:
            left, middle, right = one, -inverse_t, inverse_t
        new_row = [middle * x for x in rows[i]]
        if i - 1 >= 0:
            new_row = [a + left * b for a, b in zip(new_row, rows[i - 1])]
        if i + 1 < size:
            new_row = [a + right * b for a, b in zip(new_row, rows[i + 1])]
        rows[i] = new_row
    return rows


def alexander_burau(braid: BraidWord) -> LaurentPoly:
    """Normalized Alexander polynomial det(I - rho(b)) / (1 + t + ... + t^(l-1))"""
    _require_knot(braid)
    if braid.strands == 1:
        return ONE
    rows = _burau_rows(braid, T, ONE, ZERO, LaurentPoly.monomial(-1))
    size = len(rows)
    reduced = [[(ONE if r == c else ZERO) - rows[r][c] for c in range(size)] for r in range(size)]
    det = laurent_det(reduced)
    cyclotomic = LaurentPoly.from_dict({k: 1 for k in range(braid.strands)})
    try:
        return det.exact_divide(cyclotomic).symmetrize()
    except ArithmeticError as exc:
        raise InternalInvariantViolation(f"Burau determinant not divisible for {braid.to_text()}") from exc


def quick_determinant(braid: BraidWord) -> int:
    """
    |Delta(-1)| from the integer Burau matrix at t = -1.

    An even strand count makes 1 + t + ... + t^(l-1) vanish at -1, so the braid is
    stabilized once first; the closure is unchanged.
    """
    _require_knot(braid)
    if braid.strands % 2 == 0:
        braid = BraidWord(braid.strands + 1, braid.gens + (braid.strands,))
    if braid.strands == 1:
        return 1
    rows = _burau_rows(braid, -1, 1, 0, -1)
    size = len(rows)
    reduced = [[(1 if r == c else 0) - rows[r][c] for c in range(size)] for r in range(size)]
    return abs(integer_det(reduced))


# ---------------------------------------------------------------------- #
# Seifert form
# ---------------------------------------------------------------------- #

@dataclass(frozen=True)
class _Loop:
    column: int
    low: int     # crossing index of the upper band
    high: int    # crossing index of the lower band
    low_sign: int
    high_sign: int


def _seifert_loops(braid: BraidWord) -> list[_Loop]:
    """One loop per pair of consecutive bands in each column of the braid diagram"""
    loops: list[_Loop] = []
    for column in range(1, braid.strands):
        bands = [(k, 1 if g > 0 else -1) for k, g in enumerate(braid.gens) if abs(g) == column]
        if not bands:
            raise NotAKnot(braid.components())
        for (k1, s1), (k2, s2) in zip(bands, bands[1:]):
            loops.append(_Loop(column, k1, k2, s1, s2))
    return loops


def seifert_matrix(braid: BraidWord) -> np.ndarray:
    """
    Seifert matrix of the surface built from the closed braid by Seifert's algorithm.

    Loops in one column sharing a band link according to that band's sign, loops
    in neighbouring columns link when their band intervals interleave.
    """
    _require_knot(braid)
    loops = _seifert_loops(braid)
    size = len(loops)
    matrix = np.zeros((size, size), dtype=np.int64)
    for a, first in enumerate(loops):
        matrix[a, a] = -(first.low_sign + first.high_sign) // 2
        for b, second in enumerate(loops):
            if a == b:
                continue
            if second.column == first.column and second.low == first.high:
                if first.high_sign > 0:
                    matrix[b, a] = 1
                else:
                    matrix[a, b] = -1
            elif second.column == first.column + 1:
                h1, h2, h3, h4 = first.low, first.high, second.low, second.high
                if h1 < h3 < h2 < h4:
                    matrix[a, b] = 1
                elif h3 < h1 < h4 < h2:
                    matrix[a, b] = -1
    return matrix


def alexander_seifert(braid: BraidWord) -> LaurentPoly:
    """Normalized det(V - t V^T), the second route to the Alexander polynomial"""
    matrix = seifert_matrix(braid).tolist()
    size = len(matrix)
    entries = [[LaurentPoly.constant(matrix[i][j]) - T * matrix[j][i] for j in range(size)]
               for i in range(size)]
    return laurent_det(entries).symmetrize() if size else ONE


def _sign_changes(coeffs) -> int:
    signs = [int(c) > 0 for c in coeffs if c != 0]
    return sum(a != b for a, b in zip(signs, signs[1:]))


def _symmetric_signature(matrix: sp.Matrix) -> int:
    """
    Signature of a symmetric integer matrix from its characteristic polynomial.

    Every root is real, so Descartes' rule counts the positive eigenvalues of M
    and of -M exactly.
    """
    if matrix.rows == 0:
        return 0
    coeffs = matrix.charpoly().all_coeffs()
    mirrored = [c if (len(coeffs) - 1 - k) % 2 == 0 else -c for k, c in enumerate(coeffs)]
    return _sign_changes(coeffs) - _sign_changes(mirrored)


def signature(braid: BraidWord) -> int:
    """Signature of V + V^T; the positive trefoil has signature -2"""
    matrix = seifert_matrix(braid)
    return _symmetric_signature(sp.Matrix((matrix + matrix.T).tolist()))


def determinant(braid: BraidWord) -> int:
    """|Delta(-1)| from the normalized Alexander polynomial"""
    return abs(alexander_burau(braid).evaluate(-1))


def seifert_determinant(braid: BraidWord) -> int:
    """|det(V + V^T)|, the Seifert-form route to the determinant"""
    matrix = seifert_matrix(braid)
    return abs(integer_det(matrix + matrix.T)) if len(matrix) else 1


def genus_bennequin(braid: BraidWord) -> int:
    """(c - l + 1) / 2, the genus of a positive or negative braid closure"""
    if not braid.is_homogeneous():
        raise MixedSigns(f"braid {braid.to_text()} has generators of both signs")
    _require_knot(braid)
    return (len(braid.gens) - braid.strands + 1) // 2


def alexander_genus_bound(poly: LaurentPoly) -> int:
    """Half the span of the Alexander polynomial, a lower bound for the genus"""
    return poly.span // 2


# ---------------------------------------------------------------------- #
# fingerprints
# ---------------------------------------------------------------------- #

@dataclass(frozen=True)
class Fingerprint:
    """Normalized invariant bundle of a knot; evidence of knot type, never proof of isotopy"""

    alexander: LaurentPoly
    determinant: int
    signature: int
    exponent_sum: int = 0
    jones: LaurentPoly | None = None
    jones_computed: bool = field(default=False)

    @property
    def key(self) -> tuple:
        """Match key; exponent_sum is diagram data and stays out of it"""
        return (self.alexander, self.determinant, self.signature)

    def is_trivial(self) -> bool:
        return self.alexander == ONE and self.signature == 0 and (self.jones is None or self.jones == ONE)

    def match_level(self, other: Fingerprint, strongest: str = 'full_jones') -> str | None:
        """
        Strongest evidence level at which the two fingerprints agree, or None.

        A Jones disagreement rejects the match even when the weaker keys agree.
        """
        if (self.alexander, self.determinant) != (other.alexander, other.determinant):
            return None
        if strongest == 'alexander_only':
            return 'alexander_only'
        if self.signature != other.signature:
            return None
        if strongest == 'full_jones' and self.jones_computed and other.jones_computed:
            return 'full_jones' if self.jones == other.jones else None
        return 'alexander_signature'

    def connected_sum(self, other: Fingerprint) -> Fingerprint:
        """Fingerprint of the connected sum: polynomials multiply, signature adds"""
        both = self.jones_computed and other.jones_computed
        return Fingerprint(
            alexander=self.alexander * other.alexander,
            determinant=self.determinant * other.determinant,
            signature=self.signature + other.signature,
            exponent_sum=self.exponent_sum + other.exponent_sum,
            jones=self.jones * other.jones if both else None,
            jones_computed=both,
        )

    def mirror(self) -> Fingerprint:
        return Fingerprint(
            alexander=self.alexander,
            determinant=self.determinant,
            signature=-self.signature,
            exponent_sum=-self.exponent_sum,
            jones=self.jones.invert_variable() if self.jones is not None else None,
            jones_computed=self.jones_computed,
        )

    def check_normalization(self):
        """Raise InternalInvariantViolation unless every normalization rule holds"""
        problems = []
        if self.alexander.evaluate(1) != 1:
            problems.append("Delta(1) != 1")
        if not self.alexander.is_symmetric():
            problems.append("Delta not symmetric")
        if self.determinant % 2 == 0:
            problems.append("even determinant")
        if self.signature % 2:
            problems.append("odd signature")
        if self.jones is not None and self.jones.evaluate(1) != 1:
            problems.append("V(1) != 1")
        if problems:
            raise InternalInvariantViolation(f"fingerprint fails normalization: {', '.join(problems)}")

    def to_dict(self) -> dict:
        return {
            'alexander': self.alexander.to_pairs(),
            'determinant': self.determinant,
            'signature': self.signature,
            'exponent_sum': self.exponent_sum,
            'jones': self.jones.to_pairs() if self.jones is not None else None,
            'jones_computed': self.jones_computed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> Fingerprint:
        jones = data.get('jones')
        return cls(
            alexander=LaurentPoly.from_pairs(data['alexander']),
            determinant=int(data['determinant']),
            signature=int(data['signature']),
            exponent_sum=int(data.get('exponent_sum', 0)),
            jones=LaurentPoly.from_pairs(jones) if jones is not None else None,
            jones_computed=bool(data.get('jones_computed', jones is not None)),
        )


class OrbitKnot:
    """
    Lazily evaluated invariants of one orbit, cheapest first.

    Searches read quick_determinant for every candidate and only touch the
    polynomial invariants of the few that survive it.
    """

    def __init__(self, word: OrbitWord, spec: TemplateSpec, jones_budget: int | None = None):
        self.word = word
        self.spec = spec
        self.jones_budget = jones_budget if jones_budget is not None else KnotStandards.get_budget('jones_strands')

    @cached_property
    def braid(self) -> BraidWord:
        return build_braid(self.word, self.spec)

    @cached_property
    def simplified(self) -> BraidWord:
        return simplify_braid(self.braid)

    @cached_property
    def quick_determinant(self) -> int:
        return quick_determinant(self.simplified)

    @cached_property
    def alexander(self) -> LaurentPoly:
        return alexander_burau(self.simplified)

    @cached_property
    def signature(self) -> int:
        return signature(self.simplified)

    @cached_property
    def jones(self) -> LaurentPoly | None:
        try:
            return jones_tl(self.simplified, self.jones_budget)
        except StrandBudgetExceeded as exc:
            logger.info("Jones skipped for %s on %s: %s", self.word, self.spec.label, exc)
            return None

    def fingerprint(self, with_jones: bool = True) -> Fingerprint:
        jones = self.jones if with_jones else None
        fp = Fingerprint(
            alexander=self.alexander,
            determinant=abs(self.alexander.evaluate(-1)),
            signature=self.signature,
            exponent_sum=self.braid.exponent_sum,
            jones=jones,
            jones_computed=jones is not None,
        )
        fp.check_normalization()
        if 'quick_determinant' in self.__dict__ and self.quick_determinant != fp.determinant:
            raise InternalInvariantViolation(
                f"determinant routes disagree for {self.word} on {self.spec.label}: "
                f"{self.quick_determinant} vs {fp.determinant}"
            )
        return fp

    def __repr__(self) -> str:
        return f"OrbitKnot({self.word}, {self.spec.label})"


def fingerprint(word: OrbitWord, spec: TemplateSpec, jones_budget: int | None = None) -> Fingerprint:
    """Build, simplify and fingerprint one orbit; Jones is omitted when over the strand budget"""
    return OrbitKnot(word, spec, jones_budget).fingerprint()


def _fingerprint_task(word: OrbitWord, spec: TemplateSpec, jones_budget: int | None) -> Fingerprint:
    return fingerprint(word, spec, jones_budget)


def fingerprint_batch(words: Iterable[OrbitWord], spec: TemplateSpec, jones_budget: int | None = None,
                      workers: int = 1, progress_callback=None) -> dict[OrbitWord, Fingerprint]:
    """Fingerprint many orbits, optionally across a process pool; results keep input order"""
    words = list(words)
    results: dict[OrbitWord, Fingerprint] = {}
    total = max(len(words), 1)
    task = partial(_fingerprint_task, spec=spec, jones_budget=jones_budget)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for done, (word, fp) in enumerate(zip(words, pool.map(task, words, chunksize=16)), 1):
                results[word] = fp
                if progress_callback:
                    progress_callback(f"Fingerprinted {done}/{len(words)} orbits on {spec.label}", 100 * done / total)
    else:
        for done, word in enumerate(words, 1):
            results[word] = task(word)
            if progress_callback:
                progress_callback(f"Fingerprinted {done}/{len(words)} orbits on {spec.label}", 100 * done / total)
    return results
