"""
Odd diagram classes: which transpositions keep the odd diagram fixed, how
to walk between members, and how to build the Bruhat-extreme members
directly from the diagram.

A transposition ``(i j)`` of positions is *legal* for ``v`` when
``v (i j)`` has the same odd diagram. With ``m < M`` the two swapped
values, that happens exactly when

* ``i`` and ``j`` have the same parity,
* every value at positions ``i+1, i+3, ..., j-1`` is below ``m``, and
* no value at positions ``j+1, j+3, ...`` lies in ``[m, M]``.

>>> from oddclass.perms import parse
>>> c = class_of(parse("7461325"))
>>> len(c.members), str(c.min_element), str(c.max_element), c.rank
(18, '5,4,3,1,6,2,7', '7,4,6,1,5,2,3', 5)
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .bruhat import MaximalChain, make_chain
from .diagrams import OddDiagram, canonical_key, odd_diagram, odd_row_masks
from .perms import (
    Permutation, PositionTransposition, apply_transposition,
    check_same_degree, inverse, length,
)

__all__ = [
    "DiagramClass", "SwapType", "NotInSameClass", "GuardExceeded",
    "same_class", "is_legal_transposition", "legal_edges", "pattern_swap_type",
    "intermediate", "parity_vector", "extreme_member", "class_min", "class_max",
    "class_of", "legal_cover", "class_chain", "partition", "PARTITION_GUARD",
]

PARTITION_GUARD = 11


class NotInSameClass(ValueError):
    pass


class GuardExceeded(ValueError):
    pass


class SwapType(enum.Enum):
    TWO_ONE_THREE = "213"
    THREE_ONE_TWO = "312"
    NOT_A_PATTERN_SWAP = "none"


@dataclass(frozen=True)
class DiagramClass:
    key: OddDiagram
    members: frozenset[Permutation]
    min_element: Permutation
    max_element: Permutation
    parity_vector: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def rank(self) -> int:
        return length(self.max_element) - length(self.min_element)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, w) -> bool:
        return w in self.members

    def record(self, members: bool = False) -> dict:
        """JSON class record with a fixed field order."""
        from .perms import format_perm
        out = {
            "key": canonical_key(self.key),
            "n": self.key.degree,
            "size": self.size,
            "min": format_perm(self.min_element),
            "max": format_perm(self.max_element),
            "rank": self.rank,
        }
        if members:
            out["members"] = [format_perm(w) for w in sorted(self.members)]
        return out


def same_class(v: Permutation, w: Permutation) -> bool:
    check_same_degree(v, w)
    return odd_row_masks(v.entries) == odd_row_masks(w.entries)


def _legal(word, i: int, j: int) -> bool:
    """0-indexed positions ``i < j``."""
    if (j - i) % 2:
        return False
    a, b = word[i], word[j]
    m, big = (a, b) if a < b else (b, a)
    for x in range(i + 1, j, 2):
        if word[x] >= m:
            return False
    for y in range(j + 1, len(word), 2):
        if m <= word[y] <= big:
            return False
    return True


def is_legal_transposition(v: Permutation, t: PositionTransposition) -> bool:
    if t.j > v.degree:
        raise IndexError(f"{t} outside positions [1, {v.degree}]")
    return _legal(v.entries, t.i - 1, t.j - 1)


def legal_edges(v: Permutation) -> list[PositionTransposition]:
    word = v.entries
    n = len(word)
    return [PositionTransposition(i + 1, j + 1)
            for i in range(n) for j in range(i + 2, n, 2) if _legal(word, i, j)]


def pattern_swap_type(v: Permutation, t: PositionTransposition) -> SwapType:
    """The pattern formed by positions ``i, j-1, j`` of ``v``, if it is 213 or 312."""
    if t.j > v.degree:
        raise IndexError(f"{t} outside positions [1, {v.degree}]")
    if t.j - t.i < 2:
        return SwapType.NOT_A_PATTERN_SWAP
    left, middle, right = v(t.i), v(t.j - 1), v(t.j)
    if middle < left < right:
        return SwapType.TWO_ONE_THREE
    if middle < right < left:
        return SwapType.THREE_ONE_TWO
    return SwapType.NOT_A_PATTERN_SWAP


def _first_difference(v: Permutation, w: Permutation) -> tuple[int, int, int]:
    """Smallest value ``k+1`` placed differently, and its positions in ``v`` and ``w``."""
    vi, wi = inverse(v).entries, inverse(w).entries
    for value, (b, c) in enumerate(zip(vi, wi), 1):
        if b != c:
            return value, b, c
    raise NotInSameClass(f"{v} and {w} are equal")


def intermediate(v: Permutation, w: Permutation) -> Permutation:
    """
    One legal step from ``v`` towards ``w``: swap the positions holding the
    first value that ``v`` and ``w`` place differently.
    """
    check_same_degree(v, w)
    if v == w:
        raise NotInSameClass("the intermediate needs two distinct permutations")
    if not same_class(v, w):
        raise NotInSameClass(f"{v} and {w} have different odd diagrams")
    _, b, c = _first_difference(v, w)
    return apply_transposition(v, PositionTransposition(min(b, c), max(b, c)))


def parity_vector(w: Permutation) -> tuple[int, ...]:
    """``w^{-1}(k) mod 2`` for each column ``k``; shared by the whole class."""
    return tuple(p % 2 for p in inverse(w).entries)


def extreme_member(d: OddDiagram, parity: tuple[int, ...], largest: bool) -> Permutation:
    """
    Place one dot per column, left to right, in the lowest-numbered (or
    highest-numbered, if ``largest``) admissible row: below every star of
    the column, of the column's parity, free of stars further right in the
    row, and not already holding a dot.
    """
    n = d.degree
    lowest_star = [0] * (n + 2)
    rightmost_star = [0] * (n + 2)
    column_stars: list[set[int]] = [set() for _ in range(n + 2)]
    for r, c in d.cells:
        lowest_star[c] = max(lowest_star[c], r)
        rightmost_star[r] = max(rightmost_star[r], c)
        column_stars[c].add(r)
    row_of = [0] * (n + 1)
    used = [False] * (n + 2)

    def stars_match(r, col):
        # a dot at (r, col) stars exactly the free rows an odd distance above it
        made = {i for i in range(r - 1, 0, -2) if not used[i]}
        return made == column_stars[col]

    # column 1 is forced: its dot sits right under its lowest star
    row_of[1] = lowest_star[1] + 1
    used[row_of[1]] = True
    for col in range(2, n + 1):
        admissible = [r for r in range(lowest_star[col] + 1, n + 1)
                      if r % 2 == parity[col - 1]
                      and rightmost_star[r] <= col
                      and not used[r]
                      and stars_match(r, col)]
        if not admissible:
            raise ValueError(f"no admissible row in column {col}; not an odd diagram class")
        r = admissible[-1] if largest else admissible[0]
        row_of[col] = r
        used[r] = True
    word = [0] * n
    for col in range(1, n + 1):
        word[row_of[col] - 1] = col
    w = Permutation(tuple(word))
    if odd_diagram(w) != d:
        raise ValueError("construction left the class; diagram and parity disagree")
    return w


def class_min(w: Permutation) -> Permutation:
    return extreme_member(odd_diagram(w), parity_vector(w), largest=False)


def class_max(w: Permutation) -> Permutation:
    return extreme_member(odd_diagram(w), parity_vector(w), largest=True)


def legal_cover(w: Permutation, top: Optional[Permutation] = None) -> Optional[PositionTransposition]:
    """
    A legal transposition ``t`` with ``w`` covered by ``w t``, or ``None``
    when ``w`` is already the class maximum. ``top`` may pass a known
    class maximum to skip rebuilding it.
    """
    v = class_max(w) if top is None else top
    if v == w:
        return None
    k, b, c = _first_difference(w, v)
    if b > c:
        raise AssertionError(f"class maximum {v} places {k} above {w}")
    t = PositionTransposition(b, c)
    if length(apply_transposition(w, t)) == length(w) + 1:
        return t
    # highest dot strictly inside the rectangle spanned by (b, k) and (c, w(c))
    ceiling = w(c)
    for m in range(b + 1, c):
        if k < w(m) < ceiling:
            return PositionTransposition(b, m)
    raise AssertionError(f"no legal cover found for {w}")


def class_chain(w: Permutation) -> MaximalChain:
    """Maximal chain from the class minimum to the class maximum, inside the class."""
    d, parity = odd_diagram(w), parity_vector(w)
    bottom = extreme_member(d, parity, largest=False)
    top = extreme_member(d, parity, largest=True)
    elements = [bottom]
    x = bottom
    while True:
        t = legal_cover(x, top)
        if t is None:
            break
        x = apply_transposition(x, t)
        elements.append(x)
    return make_chain(elements)


def _members_by_legal_moves(w: Permutation) -> frozenset[Permutation]:
    seen = {w}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        word = x.entries
        n = len(word)
        for i in range(n):
            for j in range(i + 2, n, 2):
                if _legal(word, i, j):
                    y = list(word)
                    y[i], y[j] = y[j], y[i]
                    y = Permutation(tuple(y))
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
    return frozenset(seen)


def _build(members: frozenset[Permutation], d: OddDiagram, sample: Permutation) -> DiagramClass:
    parity = parity_vector(sample)
    bottom = extreme_member(d, parity, largest=False)
    top = extreme_member(d, parity, largest=True)
    if bottom not in members or top not in members:
        raise AssertionError(f"extreme members of {canonical_key(d)} fell outside the class")
    return DiagramClass(d, members, bottom, top, parity)


def class_of(w: Permutation) -> DiagramClass:
    """The class of ``w``, found by breadth-first search over legal transpositions."""
    return _build(_members_by_legal_moves(w), odd_diagram(w), w)


def partition(n: int) -> dict[str, DiagramClass]:
    """All classes of S_n keyed by canonical key, in sorted key order."""
    if not 1 <= n <= PARTITION_GUARD:
        raise GuardExceeded(f"partition needs 1 <= n <= {PARTITION_GUARD}, got {n}")
    from itertools import permutations

    groups: dict[tuple[int, ...], list[Permutation]] = {}
    for word in permutations(range(1, n + 1)):
        groups.setdefault(odd_row_masks(word), []).append(Permutation(word))
    classes = {}
    for members in groups.values():
        d = odd_diagram(members[0])
        classes[canonical_key(d)] = _build(frozenset(members), d, members[0])
    return dict(sorted(classes.items()))
