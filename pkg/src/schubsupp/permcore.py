"""
Permutations and compositions in one-line notation, pattern counting,
reduced words, layered permutations and Macdonald's reduced-word formula.

Everything is 1-based to match the usual combinatorial conventions:
``w(i)`` is the value in position ``i`` and ``s_i`` swaps positions
``i`` and ``i + 1``.

>>> w = Permutation.parse("1432")
>>> w(2), w.inverse(), w.length()
(4, Permutation(word=(1, 4, 3, 2)), 3)
>>> pattern_count(w, "132")
3
"""

from __future__ import annotations

import itertools
import math
import os
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "MAX_N", "Permutation", "Composition", "ReducedWord", "PermLike",
    "parse_word", "as_perm", "standardize",
    "pattern_count", "pattern_occurrences", "pattern_profile",
    "reduced_words", "macdonald_nu", "layered", "is_layered", "is_dominant",
]

# grid bound shared by permutations and diagrams; packed kernels need n <= 15
MAX_N = min(int(os.environ.get("SCHUBSUPP_MAX_N", "12")), 15)

# a reduced word (a_1, ..., a_l), letters in 1..n-1
ReducedWord = tuple[int, ...]


def parse_word(text: str) -> tuple[int, ...]:
    """
    Parse ``"1432"`` or ``"10,1,2,..."`` into a tuple of ints.

    A bare digit string is read one digit per entry; anything containing a
    comma is split on commas.  Errors name the offending position.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty word")
    if "," in s:
        parts = s.split(",")
        out = []
        for pos, p in enumerate(parts, 1):
            p = p.strip()
            if not p.isdigit():
                raise ValueError(f"bad entry {p!r} at position {pos}")
            out.append(int(p))
        return tuple(out)
    for pos, ch in enumerate(s, 1):
        if not ch.isdigit():
            raise ValueError(f"bad character {ch!r} at position {pos}")
    return tuple(int(ch) for ch in s)


def _format_word(word: Sequence[int]) -> str:
    if all(0 <= a <= 9 for a in word) and len(word) <= 9:
        return "".join(map(str, word))
    return ",".join(map(str, word))


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``[n]`` in one-line notation."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(a) for a in self.word)
        object.__setattr__(self, "word", word)
        n = len(word)
        if not 1 <= n <= MAX_N:
            raise ValueError(f"permutation size {n} outside 1..{MAX_N}")
        if sorted(word) != list(range(1, n + 1)):
            raise ValueError(f"{word} is not a permutation of 1..{n}")

    @classmethod
    def parse(cls, text: str) -> Permutation:
        return cls(parse_word(text))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def all(cls, n: int) -> Iterator[Permutation]:
        """All of ``S_n`` in lexicographic order."""
        for word in itertools.permutations(range(1, n + 1)):
            yield cls(word)

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __iter__(self):
        return iter(self.word)

    def __lt__(self, other: Permutation) -> bool:
        return self.word < other.word

    def __str__(self) -> str:
        return _format_word(self.word)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, a in enumerate(self.word, 1):
            inv[a - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        """Number of inversions."""
        w = self.word
        return sum(1 for a, b in itertools.combinations(w, 2) if a > b)

    def swap(self, i: int) -> Permutation:
        """``w s_i``: exchange the entries in positions ``i`` and ``i+1``."""
        w = list(self.word)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def ascents(self) -> list[int]:
        w = self.word
        return [i for i in range(1, self.n) if w[i - 1] < w[i]]

    def descents(self) -> list[int]:
        w = self.word
        return [i for i in range(1, self.n) if w[i - 1] > w[i]]


PermLike = Union[Permutation, Sequence[int], str]


def as_perm(w: PermLike) -> Permutation:
    if isinstance(w, Permutation):
        return w
    if isinstance(w, str):
        return Permutation.parse(w)
    return Permutation(tuple(w))


@dataclass(frozen=True)
class Composition:
    """A weak composition ``(alpha_1, ..., alpha_n)``."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(a) for a in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("composition needs at least one part")
        if any(a < 0 for a in parts):
            raise ValueError(f"negative part in {parts}")

    @classmethod
    def parse(cls, text: str) -> Composition:
        return cls(parse_word(text))

    @property
    def n(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def swap(self, i: int) -> Composition:
        a = list(self.parts)
        a[i - 1], a[i] = a[i], a[i - 1]
        return Composition(tuple(a))

    def is_weakly_decreasing(self) -> bool:
        a = self.parts
        return all(a[k] >= a[k + 1] for k in range(len(a) - 1))


def standardize(seq: Sequence[int]) -> tuple[int, ...]:
    """Replace the entries by their ranks, e.g. ``(4, 9, 2) -> (2, 3, 1)``."""
    order = sorted(range(len(seq)), key=seq.__getitem__)
    out = [0] * len(seq)
    for rank, k in enumerate(order, 1):
        out[k] = rank
    return tuple(out)


def _occurrences(w: tuple[int, ...], u: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    n, m = len(w), len(u)
    if m > n:
        return
    chosen: list[int] = []

    def extend(start: int) -> Iterator[tuple[int, ...]]:
        t = len(chosen)
        if t == m:
            yield tuple(i + 1 for i in chosen)
            return
        # leave room for the m - t - 1 entries still to come
        for i in range(start, n - (m - t) + 1):
            v = w[i]
            ut = u[t]
            if all((w[c] < v) == (u[s] < ut) for s, c in enumerate(chosen)):
                chosen.append(i)
                yield from extend(i + 1)
                chosen.pop()

    yield from extend(0)


def pattern_occurrences(w: PermLike, u: PermLike) -> list[tuple[int, ...]]:
    """Index tuples ``i_1 < ... < i_m`` (1-based) where ``w`` contains ``u``."""
    return list(_occurrences(as_perm(w).word, as_perm(u).word))


def pattern_count(w: PermLike, u: PermLike) -> int:
    """``p_u(w)``; zero when ``u`` is longer than ``w``."""
    return sum(1 for _ in _occurrences(as_perm(w).word, as_perm(u).word))


def pattern_profile(w: PermLike, max_len: int | None = None) -> Counter:
    """
    Count every pattern of ``w`` at once: maps each standardized subsequence
    word (length ``1..max_len``) to its number of occurrences.
    """
    word = as_perm(w).word
    top = len(word) if max_len is None else min(max_len, len(word))
    prof: Counter = Counter()
    for m in range(1, top + 1):
        for idx in itertools.combinations(range(len(word)), m):
            prof[standardize([word[i] for i in idx])] += 1
    return prof


def reduced_words(w: PermLike) -> list[ReducedWord]:
    """
    All reduced words of ``w``, sorted.  ``(a_1, ..., a_l)`` means
    ``w = s_{a_1} ... s_{a_l}``; the last letter is a right descent.
    """
    w = as_perm(w)

    def rec(v: Permutation) -> list[ReducedWord]:
        ds = v.descents()
        if not ds:
            return [()]
        out = []
        for i in ds:
            out.extend(word + (i,) for word in rec(v.swap(i)))
        return out

    return sorted(set(rec(w)))


def macdonald_nu(w: PermLike) -> int:
    """``(1/l!) * sum over reduced words of a_1 * ... * a_l``."""
    w = as_perm(w)
    ell = w.length()
    total = sum(math.prod(word) for word in reduced_words(w))
    q, r = divmod(total, math.factorial(ell))
    if r:
        raise ArithmeticError(
            f"Macdonald sum {total} for {w} not divisible by {ell}!")
    return q


def layered(blocks: Iterable[int]) -> Permutation:
    """
    Concatenate decreasing runs on consecutive intervals.

    >>> str(layered([2, 3, 2, 1]))
    '21543768'
    """
    blocks = list(blocks)
    if not blocks or any(b <= 0 for b in blocks):
        raise ValueError(f"layered needs positive block sizes, got {blocks}")
    word: list[int] = []
    top = 0
    for b in blocks:
        word.extend(range(top + b, top, -1))
        top += b
    return Permutation(tuple(word))


def is_layered(w: PermLike) -> bool:
    w = as_perm(w).word
    start = 0
    while start < len(w):
        end = w[start]  # a block starting here must run down to start + 1
        block = w[start:end]
        if end <= start or list(block) != list(range(end, start, -1)):
            return False
        start = end
    return True


def is_dominant(w: PermLike) -> bool:
    """132-avoiding."""
    return pattern_count(w, (1, 3, 2)) == 0
