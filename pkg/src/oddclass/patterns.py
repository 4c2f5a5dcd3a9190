"""
Classical and vincular pattern containment.

A vincular pattern glues some neighbouring letters: an occurrence must use
consecutive host positions for them. Text syntax: a word with no hyphens is
classical (``"213"``); once a hyphen appears, hyphens mark the free gaps
and every other gap is glued, so ``"3-12"`` requires the ``1`` and ``2``
to be adjacent and ``"2-1-3"`` is classical again.

>>> from oddclass.perms import parse
>>> occurrences(parse("41325"), parse_pattern("321"))
[(1, 3, 4)]
>>> avoids(parse("41325"), PatternSpec((3, 2, 1), frozenset({1})))
True
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .perms import Permutation, all_perms

__all__ = [
    "PatternSpec", "parse_pattern", "format_pattern",
    "occurrences", "contains", "avoids", "avoiders",
    "P213", "P312", "P2_13", "P3_12",
]


@dataclass(frozen=True)
class PatternSpec:
    letters: tuple[int, ...]
    # gap p glues pattern positions p and p+1 (1-indexed)
    adjacent: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        k = len(self.letters)
        if sorted(self.letters) != list(range(1, k + 1)):
            raise ValueError(f"{self.letters!r} is not a permutation of 1..{k}")
        adjacent = frozenset(self.adjacent)
        if any(not 1 <= p <= k - 1 for p in adjacent):
            raise ValueError(f"adjacency gaps {sorted(adjacent)} outside [1, {k - 1}]")
        object.__setattr__(self, "adjacent", adjacent)

    @property
    def size(self) -> int:
        return len(self.letters)

    @property
    def is_classical(self) -> bool:
        return not self.adjacent

    def __str__(self) -> str:
        return format_pattern(self)


def parse_pattern(text: str) -> PatternSpec:
    text = text.strip()
    if "-" not in text:
        return PatternSpec(tuple(int(ch) for ch in text))
    letters: list[int] = []
    adjacent = set()
    for chunk_index, chunk in enumerate(text.split("-")):
        if not chunk:
            raise ValueError(f"empty block in pattern {text!r}")
        for offset, ch in enumerate(chunk):
            letters.append(int(ch))
            if offset > 0:
                adjacent.add(len(letters) - 1)
    return PatternSpec(tuple(letters), frozenset(adjacent))


def format_pattern(p: PatternSpec) -> str:
    if p.is_classical:
        return "".join(map(str, p.letters))
    out = [str(p.letters[0])]
    for gap, letter in enumerate(p.letters[1:], 1):
        if gap not in p.adjacent:
            out.append("-")
        out.append(str(letter))
    return "".join(out)


P213 = PatternSpec((2, 1, 3))
P312 = PatternSpec((3, 1, 2))
P2_13 = parse_pattern("2-13")
P3_12 = parse_pattern("3-12")


def _search(word, p: PatternSpec, first_only: bool) -> list[tuple[int, ...]]:
    n = len(word)
    k = p.size
    letters = p.letters
    glued = p.adjacent
    found: list[tuple[int, ...]] = []
    chosen: list[int] = []  # 0-indexed host positions

    def extend(t: int) -> bool:
        if t == k:
            found.append(tuple(x + 1 for x in chosen))
            return first_only
        # value window implied by letters already placed
        lo, hi = 0, n + 1
        for s in range(t):
            value = word[chosen[s]]
            if letters[s] < letters[t]:
                lo = max(lo, value)
            else:
                hi = min(hi, value)
        if lo >= hi - 1:
            return False
        start = chosen[-1] + 1 if chosen else 0
        stop = n - (k - t - 1)
        if t > 0 and t in glued:
            stop = min(stop, start + 1)
        for x in range(start, stop):
            if lo < word[x] < hi:
                chosen.append(x)
                if extend(t + 1):
                    return True
                chosen.pop()
        return False

    if k <= n:
        extend(0)
    return found


def occurrences(w: Permutation, p: PatternSpec) -> list[tuple[int, ...]]:
    """All occurrences as 1-indexed position tuples, in lexicographic order."""
    return _search(w.entries, p, first_only=False)


def contains(w: Permutation, p: PatternSpec) -> bool:
    return bool(_search(w.entries, p, first_only=True))


def avoids(w: Permutation, p: PatternSpec) -> bool:
    return not _search(w.entries, p, first_only=True)


def avoiders(n: int, p: PatternSpec) -> list[Permutation]:
    """``Av_n(p)`` in lexicographic order."""
    return [w for w in all_perms(n) if avoids(w, p)]
