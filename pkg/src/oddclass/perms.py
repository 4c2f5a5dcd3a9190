"""
Permutations of ``[n] = {1, ..., n}`` in one-line notation.

Positions and values are 1-indexed at every public entry point; the tuple
stored in ``Permutation.entries`` is the one-line word itself, so
``w.entries[i - 1] == w(i)``.

>>> w = parse("41325")
>>> w(1), w.degree, length(w), odd_length(w)
(4, 5, 4, 3)
>>> format_perm(inverse(w))
'2,4,3,1,5'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Iterator

__all__ = [
    "Permutation", "PositionTransposition", "ValueTransposition",
    "PermutationParseError", "DegreeMismatch",
    "parse", "format_perm", "identity", "longest", "all_perms",
    "inverse", "compose", "apply_transposition",
    "length", "length_bruteforce", "odd_length", "inversion_set",
    "weak_upper_covers", "weak_leq", "check_same_degree",
]


class PermutationParseError(ValueError):
    """Base class for text that is not a permutation."""


class EmptyPermutation(PermutationParseError):
    pass


class DuplicateValue(PermutationParseError):
    pass


class MissingValue(PermutationParseError):
    pass


class ValueOutOfRange(PermutationParseError):
    pass


class DegreeMismatch(ValueError):
    """Two permutations from different symmetric groups were combined."""


@dataclass(frozen=True, order=True)
class Permutation:
    entries: tuple[int, ...]

    def __post_init__(self):
        n = len(self.entries)
        if n < 1:
            raise EmptyPermutation("a permutation needs at least one entry")
        if sorted(self.entries) != list(range(1, n + 1)):
            raise PermutationParseError(
                f"{self.entries!r} is not a rearrangement of 1..{n}")

    @property
    def degree(self) -> int:
        return len(self.entries)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.entries):
            raise IndexError(f"position {i} outside [1, {self.degree}]")
        return self.entries[i - 1]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return format_perm(self)

    def __repr__(self) -> str:
        return f"Permutation({format_perm(self)!r})"


@dataclass(frozen=True, order=True)
class PositionTransposition:
    """The transposition ``(i j)`` acting on positions (right multiplication)."""
    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ValueError(f"need 1 <= i < j, got ({self.i}, {self.j})")

    def __str__(self) -> str:
        return f"({self.i} {self.j})"


@dataclass(frozen=True, order=True)
class ValueTransposition:
    """The transposition ``(a b)`` acting on values; ordered lexicographically."""
    a: int
    b: int

    def __post_init__(self):
        if not 1 <= self.a < self.b:
            raise ValueError(f"need 1 <= a < b, got ({self.a}, {self.b})")

    def __str__(self) -> str:
        return f"({self.a} {self.b})"


_DELIMITED = re.compile(r"[\s,]+")


def parse(text: str) -> Permutation:
    """
    Parse a compact digit string (degree at most 9) or a comma/space
    separated list of integers.

    >>> parse("10,3,1,2,4,5,6,7,8,9").degree
    10
    >>> parse("4135")
    Traceback (most recent call last):
    ...
    oddclass.perms.MissingValue: value 2 missing from a word of length 4
    """
    if isinstance(text, Permutation):
        return text
    stripped = text.strip()
    if not stripped:
        raise EmptyPermutation("empty permutation text")
    if stripped.isdigit():
        if len(stripped) >= 10:
            raise PermutationParseError(
                "compact form is ambiguous for degree >= 10; separate values with commas")
        values = [int(ch) for ch in stripped]
    else:
        tokens = [tok for tok in _DELIMITED.split(stripped) if tok]
        try:
            values = [int(tok) for tok in tokens]
        except ValueError:
            raise PermutationParseError(f"not an integer list: {text!r}") from None
        if not values:
            raise EmptyPermutation("empty permutation text")
    n = len(values)
    for value in values:
        if value < 1:
            raise ValueOutOfRange(f"value {value} outside [1, {n}]")
    seen = set()
    for value in values:
        if value in seen:
            raise DuplicateValue(f"value {value} appears more than once")
        seen.add(value)
    for value in range(1, n + 1):
        if value not in seen:
            raise MissingValue(f"value {value} missing from a word of length {n}")
    return Permutation(tuple(values))


def format_perm(w: Permutation) -> str:
    """Canonical text form: comma-separated, no whitespace."""
    return ",".join(map(str, w.entries))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def all_perms(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    for word in _itertools_permutations(range(1, n + 1)):
        yield Permutation(word)


def check_same_degree(u: Permutation, v: Permutation) -> None:
    if u.degree != v.degree:
        raise DegreeMismatch(f"degrees {u.degree} and {v.degree} differ")


def inverse(w: Permutation) -> Permutation:
    inv = [0] * w.degree
    for pos, value in enumerate(w.entries, 1):
        inv[value - 1] = pos
    return Permutation(tuple(inv))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """The product ``u v``, i.e. ``i -> u(v(i))``."""
    check_same_degree(u, v)
    return Permutation(tuple(u.entries[x - 1] for x in v.entries))


def apply_transposition(w: Permutation, t: PositionTransposition) -> Permutation:
    """``w (i j)``: swap the entries in positions ``i`` and ``j``."""
    if t.j > w.degree:
        raise IndexError(f"{t} outside positions [1, {w.degree}]")
    word = list(w.entries)
    word[t.i - 1], word[t.j - 1] = word[t.j - 1], word[t.i - 1]
    return Permutation(tuple(word))


def length_bruteforce(w: Permutation) -> int:
    """Quadratic inversion count; the reference for ``length``."""
    word = w.entries
    n = len(word)
    return sum(1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j])


def length(w: Permutation) -> int:
    """Coxeter length (number of inversions), via a Fenwick tree."""
    word = w.entries
    n = len(word)
    tree = [0] * (n + 1)
    count = 0
    for seen, value in enumerate(word):
        # entries already placed that are <= value
        k, below = value, 0
        while k > 0:
            below += tree[k]
            k -= k & -k
        count += seen - below
        k = value
        while k <= n:
            tree[k] += 1
            k += k & -k
    return count


def odd_length(w: Permutation) -> int:
    """Number of inversions ``(i, j)`` with ``j - i`` odd."""
    word = w.entries
    n = len(word)
    return sum(1 for i in range(n) for j in range(i + 1, n, 2) if word[i] > word[j])


def inversion_set(w: Permutation) -> frozenset[tuple[int, int]]:
    """Inverted value pairs ``(a, b)``, ``a < b``, with ``b`` left of ``a``."""
    word = w.entries
    n = len(word)
    return frozenset((word[j], word[i])
                     for i in range(n) for j in range(i + 1, n) if word[i] > word[j])


def weak_upper_covers(w: Permutation) -> list[Permutation]:
    """Right weak order covers ``w (i i+1)`` for each ascent ``i``."""
    word = w.entries
    covers = []
    for i in range(len(word) - 1):
        if word[i] < word[i + 1]:
            covers.append(apply_transposition(w, PositionTransposition(i + 1, i + 2)))
    return covers


def weak_leq(u: Permutation, v: Permutation) -> bool:
    """Right weak order: ``u <= v`` iff the inversion set of ``u`` lies in that of ``v``."""
    check_same_degree(u, v)
    return inversion_set(u) <= inversion_set(v)
