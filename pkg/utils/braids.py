"""
Orbit Braids
Turns an orbit word on a template into a closed braid: twist blocks on the two
branch bundles followed by the positive permutation layer where the branches merge
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exceptions import InternalInvariantViolation
from .orbits import OrbitWord, TemplateSpec, rotate, sorted_itineraries

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BraidWord:
    """
    Word in the Artin generators on a fixed number of strands.

    Generators are signed integers: i stands for sigma_i and -i for its inverse,
    with 1 <= |i| <= strands - 1.
    """

    strands: int
    gens: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for g in self.gens:
            if g == 0 or abs(g) >= self.strands:
                raise ValueError(f"generator {g} is out of range on {self.strands} strands")

    @classmethod
    def from_text(cls, text: str, strands: int | None = None) -> BraidWord:
        """Parse '1 2 -1'; strands defaults to one more than the largest index"""
        gens = tuple(int(tok) for tok in text.replace(",", " ").split())
        if strands is None:
            strands = max((abs(g) for g in gens), default=0) + 1
        return cls(strands, gens)

    def to_text(self) -> str:
        return " ".join(str(g) for g in self.gens)

    def pairs(self) -> list[tuple[int, int]]:
        """Generators as (index, sign) pairs"""
        return [(abs(g), 1 if g > 0 else -1) for g in self.gens]

    @property
    def exponent_sum(self) -> int:
        """Writhe of the closed-braid diagram"""
        return sum(1 if g > 0 else -1 for g in self.gens)

    @property
    def crossing_count(self) -> int:
        return len(self.gens)

    def is_positive(self) -> bool:
        return all(g > 0 for g in self.gens)

    def is_negative(self) -> bool:
        return all(g < 0 for g in self.gens)

    def is_homogeneous(self) -> bool:
        return self.is_positive() or self.is_negative()

    def permutation(self) -> tuple[int, ...]:
        """perm[s] = final position of the strand starting at position s (0-based)"""
        at = list(range(self.strands))  # at[position] = starting position of the strand there
        for g in self.gens:
            i = abs(g) - 1
            at[i], at[i + 1] = at[i + 1], at[i]
        perm = [0] * self.strands
        for position, start in enumerate(at):
            perm[start] = position
        return tuple(perm)

    def components(self) -> int:
        """Number of components of the closure = number of permutation cycles"""
        perm = self.permutation()
        seen = [False] * self.strands
        cycles = 0
        for start in range(self.strands):
            if not seen[start]:
                cycles += 1
                k = start
                while not seen[k]:
                    seen[k] = True
                    k = perm[k]
        return cycles

    def is_knot(self) -> bool:
        return self.components() == 1

    def __len__(self) -> int:
        return len(self.gens)


def _sign(value: int) -> int:
    return (value > 0) - (value < 0)


def half_twist_block(k: int, count: int, offset: int = 0) -> tuple[int, ...]:
    """
    |count| copies of the half twist Delta_k = (s1)(s2 s1)...(s_{k-1}...s1) on a
    bundle of k strands starting after `offset` strands, every generator signed
    like count.
    """
    if k < 1:
        raise ValueError("a twist block needs at least one strand")
    sign = _sign(count)
    delta = [offset + j for top in range(1, k) for j in range(top, 0, -1)]
    return tuple(sign * g for g in delta) * abs(count)


def lorenz_permutation(word: OrbitWord, spec: TemplateSpec) -> tuple[int, ...]:
    """
    First-return action on the punctures: perm[i] is the branch-line position of
    the shift of the i-th itinerary (0-based). Always a single cycle.
    """
    order = sorted_itineraries(word, spec)
    position = {itinerary: i for i, itinerary in enumerate(order)}
    return tuple(position[rotate(itinerary, 1)] for itinerary in order)


def permutation_braid(targets: Sequence[int]) -> tuple[int, ...]:
    """Positive permutation braid moving position j to targets[j]; each pair crosses at most once"""
    arrangement = list(targets)
    gens: list[int] = []
    swapped = True
    while swapped:
        swapped = False
        for j in range(len(arrangement) - 1):
            if arrangement[j] > arrangement[j + 1]:
                arrangement[j], arrangement[j + 1] = arrangement[j + 1], arrangement[j]
                gens.append(j + 1)
                swapped = True
    return tuple(gens)


def _twist_reversal(p: int, q: int, spec: TemplateSpec) -> list[int]:
    """Permutation of an odd twist block: reverses its bundle"""
    tau = list(range(p + q))
    if spec.m % 2:
        tau[:p] = reversed(tau[:p])
    if spec.n % 2:
        tau[p:] = reversed(tau[p:])
    return tau


def merge_layer(word: OrbitWord, spec: TemplateSpec) -> list[int]:
    """Targets of the permutation layer applied after the twist blocks"""
    perm = lorenz_permutation(word, spec)
    tau = _twist_reversal(word.p, word.q, spec)
    return [perm[tau[j]] for j in range(word.length)]


def build_braid(word: OrbitWord, spec: TemplateSpec) -> BraidWord:
    """
    Closed braid of an orbit: twist block on the x-bundle (positions 1..p), twist
    block on the y-bundle (positions p+1..l), then the permutation layer in which
    x-strands cross in front of y-strands. Mirrored templates flip every sign.
    """
    p, q = word.p, word.q
    order = sorted_itineraries(word, spec)
    if any(it[0] != "x" for it in order[:p]):
        raise InternalInvariantViolation(f"x-itineraries of {word} are not contiguous on {spec.label}")

    gens = list(half_twist_block(p, spec.m, 0)) if p else []
    if q:
        gens.extend(half_twist_block(q, spec.n, p))
    gens.extend(permutation_braid(merge_layer(word, spec)))
    if spec.mirrored:
        gens = [-g for g in gens]

    braid = BraidWord(word.length, tuple(gens))
    components = braid.components()
    if components != 1:
        raise InternalInvariantViolation(
            f"braid of {word} on {spec.label} closes to {components} components"
        )
    return braid


def layer_inversions(word: OrbitWord, spec: TemplateSpec) -> int:
    """Crossings of the permutation layer counted directly as x/y pairs that change order"""
    targets = merge_layer(word, spec)
    p = word.p
    return sum(1 for i in range(p) for j in range(p, word.length) if targets[i] > targets[j])


def expected_exponent_sum(word: OrbitWord, spec: TemplateSpec) -> int:
    """Independent writhe count: layer crossings + m*p(p-1)/2 + n*q(q-1)/2, negated when mirrored"""
    p, q = word.p, word.q
    total = layer_inversions(word, spec) + spec.m * p * (p - 1) // 2 + spec.n * q * (q - 1) // 2
    return -total if spec.mirrored else total


def mirror_braid(braid: BraidWord) -> BraidWord:
    return BraidWord(braid.strands, tuple(-g for g in braid.gens))


def connected_sum_braid(first: BraidWord, second: BraidWord) -> BraidWord:
    """Braid whose closure is the connected sum: second is placed on the strands after first's last one"""
    shift = first.strands - 1
    gens = first.gens + tuple(g + shift if g > 0 else g - shift for g in second.gens)
    return BraidWord(first.strands + second.strands - 1, gens)


def _free_reduce(gens: Iterable[int]) -> list[int]:
    stack: list[int] = []
    for g in gens:
        if stack and stack[-1] == -g:
            stack.pop()
        else:
            stack.append(g)
    # cyclic cancellation is valid because only the closure matters
    while len(stack) >= 2 and stack[0] == -stack[-1]:
        stack = stack[1:-1]
    return stack


def _drop_strand(gens: list[int], index: int) -> list[int]:
    """Delete boundary strand 1 (index=1) or the last strand (index=0)"""
    if index == 1:
        return [g - 1 if g > 0 else g + 1 for g in gens]
    return gens


def simplify_braid(braid: BraidWord) -> BraidWord:
    """
    Free cancellation, unused boundary strand removal and boundary Markov
    destabilization, repeated to a fixed point. The closure's knot type is kept.
    """
    gens = list(braid.gens)
    strands = braid.strands
    changed = True
    while changed:
        changed = False
        reduced = _free_reduce(gens)
        if len(reduced) != len(gens):
            gens, changed = reduced, True
        if strands == 1:
            break
        last = strands - 1
        uses_first = sum(1 for g in gens if abs(g) == 1)
        uses_last = sum(1 for g in gens if abs(g) == last)
        if uses_last == 0:
            strands -= 1
            changed = True
        elif uses_first == 0:
            gens = _drop_strand(gens, 1)
            strands -= 1
            changed = True
        elif uses_last == 1:
            gens = [g for g in gens if abs(g) != last]
            strands -= 1
            changed = True
        elif uses_first == 1:
            gens = _drop_strand([g for g in gens if abs(g) != 1], 1)
            strands -= 1
            changed = True
    result = BraidWord(strands, tuple(gens))
    logger.debug("simplified %d strands / %d crossings to %d / %d",
                 braid.strands, len(braid.gens), result.strands, len(result.gens))
    return result
