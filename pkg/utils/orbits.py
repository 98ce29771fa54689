"""
Template Orbits
Lorenz-like templates L(m,n), their periodic orbits as {x, y} words, and the
twisted kneading order of orbit punctures on the branch line
"""

from __future__ import annotations

import functools
import logging
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .exceptions import EmptyWord, InvalidTemplate, InvalidWord, NonPrimitive

logger = logging.getLogger(__name__)

ALPHABET = ("x", "y")
_TEMPLATE_PATTERN = re.compile(
    r"^\s*(?P<tilde>~)?\s*(?:L(?P<ltilde>~)?\(\s*(?P<lm>-?\d+)\s*,\s*(?P<ln>-?\d+)\s*\)|(?P<m>-?\d+)\s*,\s*(?P<n>-?\d+))\s*$"
)


@dataclass(frozen=True)
class TemplateSpec:
    """Template L(m,n): m half twists on the X-branch, n on the Y-branch, left-handed positive"""

    m: int
    n: int
    mirrored: bool = False

    @classmethod
    def parse(cls, text: str) -> TemplateSpec:
        """Parse 'm,n' or '~m,n' (a leading '~' selects the mirror template)"""
        match = _TEMPLATE_PATTERN.match(str(text))
        if not match:
            raise InvalidTemplate(f"cannot parse template '{text}', expected 'm,n' or '~m,n'")
        mirrored = bool(match.group("tilde")) != bool(match.group("ltilde"))
        if match.group("lm") is not None:
            return cls(int(match.group("lm")), int(match.group("ln")), mirrored)
        return cls(int(match.group("m")), int(match.group("n")), mirrored)

    def twists(self, letter: str) -> int:
        return self.m if letter == "x" else self.n

    def epsilon(self, letter: str) -> int:
        """+1 if the letter's branch preserves orientation (even half twists), -1 if it reverses it"""
        return -1 if self.twists(letter) % 2 else 1

    def is_orientable(self) -> bool:
        return self.m % 2 == 0 and self.n % 2 == 0

    def swapped(self) -> TemplateSpec:
        """L(n,m), which carries the same knots as L(m,n) with letters exchanged"""
        return TemplateSpec(self.n, self.m, self.mirrored)

    def mirror(self) -> TemplateSpec:
        return TemplateSpec(self.m, self.n, not self.mirrored)

    @property
    def label(self) -> str:
        return f"{'L~' if self.mirrored else 'L'}({self.m},{self.n})"

    def __str__(self) -> str:
        return f"{'~' if self.mirrored else ''}{self.m},{self.n}"


@dataclass(frozen=True, order=True)
class OrbitWord:
    """Primitive cyclic word over {x, y} in canonical (least rotation) form"""

    letters: str

    @property
    def p(self) -> int:
        """Number of trips around the X-branch"""
        return self.letters.count("x")

    @property
    def q(self) -> int:
        """Number of trips around the Y-branch"""
        return self.letters.count("y")

    @property
    def length(self) -> int:
        return len(self.letters)

    def rotations(self) -> list[str]:
        w = self.letters
        return [w[k:] + w[:k] for k in range(len(w))]

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters


def _primitive_root(word: str) -> str:
    """Shortest u with word = u^k"""
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


def canonical_word(letters: str | Sequence[str]) -> OrbitWord:
    """Least rotation of a primitive {x, y} word"""
    word = "".join(letters).strip().lower()
    if not word:
        raise EmptyWord("orbit word has no letters")
    bad = set(word) - set(ALPHABET)
    if bad:
        raise InvalidWord(f"letters {sorted(bad)} are not in {{x, y}}")
    root = _primitive_root(word)
    if root != word:
        raise NonPrimitive(word, canonical_word(root).letters)
    return OrbitWord(min(word[k:] + word[:k] for k in range(len(word))))


def rotate(word: str | OrbitWord, k: int) -> str:
    w = str(word)
    k %= len(w)
    return w[k:] + w[:k]


def swap_xy(word: str | OrbitWord) -> OrbitWord:
    """Exchange the letters; pairs with TemplateSpec.swapped"""
    return canonical_word(str(word).translate(str.maketrans("xy", "yx")))


def _lyndon_words(max_len: int) -> Iterator[str]:
    """Duval's generation of all Lyndon words over x < y up to max_len, in lexicographic order"""
    w = [-1]
    while w:
        w[-1] += 1
        yield "".join(ALPHABET[i] for i in w)
        m = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - m])
        while w and w[-1] == len(ALPHABET) - 1:
            w.pop()


def enumerate_orbits(max_len: int) -> list[OrbitWord]:
    """All canonical primitive words of length <= max_len, ordered by (length, word)"""
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    words = sorted(_lyndon_words(max_len), key=lambda w: (len(w), w))
    logger.debug("Enumerated %d orbits up to length %d", len(words), max_len)
    return [OrbitWord(w) for w in words]


def orbits_by_length(max_len: int) -> dict[int, list[OrbitWord]]:
    """Enumeration partitioned by word length, the unit of work handed to batch workers"""
    grouped: dict[int, list[OrbitWord]] = {n: [] for n in range(1, max_len + 1)}
    for word in enumerate_orbits(max_len):
        grouped[word.length].append(word)
    return grouped


@functools.lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    result, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            result = -result
        k += 1
    return -result if n > 1 else result


def necklace_count(n: int, alphabet_size: int = 2) -> int:
    """Number of primitive necklaces of length n: (1/n) sum_{d|n} mu(d) k^(n/d)"""
    total = sum(_mobius(d) * alphabet_size ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n


def twisted_compare(s: str, t: str, spec: TemplateSpec) -> int:
    """
    Compare the periodic itineraries s^inf and t^inf in the kneading order of spec.

    At the first differing index k the letters are ordered x < y, reversed once
    for every orientation-reversing letter in the common prefix. Returns -1, 0 or 1.
    """
    s, t = str(s), str(t)
    sign = 1
    # two periodic sequences agreeing on len(s) + len(t) symbols are equal
    for k in range(len(s) + len(t)):
        a, b = s[k % len(s)], t[k % len(t)]
        if a != b:
            return sign * (-1 if a < b else 1)
        sign *= spec.epsilon(a)
    return 0


def sorted_itineraries(word: OrbitWord, spec: TemplateSpec) -> list[str]:
    """Cyclic shifts of the word in branch-line order"""
    return sorted(word.rotations(), key=functools.cmp_to_key(lambda a, b: twisted_compare(a, b, spec)))

