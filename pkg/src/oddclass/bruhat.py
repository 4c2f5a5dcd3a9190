"""
Bruhat order on S_n: covers, comparison, intervals, chain labels and flips.

Chains are labelled by value transpositions ``lambda(u, v) = v u^{-1}``,
compared in the lexicographic order ``(1 2) < (1 3) < ... < (n-1 n)``.

>>> from oddclass.perms import parse
>>> iv = interval(parse("5431627"), parse("7461523"))
>>> len(iv.members), iv.rank, sum(rank_vector(iv))
(18, 5, 18)
"""

from __future__ import annotations

from bisect import insort
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterator

from .perms import (
    Permutation, PositionTransposition, ValueTransposition,
    apply_transposition, check_same_degree, length,
)

__all__ = [
    "MaximalChain", "BruhatInterval", "NotAnEdge", "NotComparable", "IntervalTooLarge",
    "is_cover", "bruhat_leq", "upper_covers", "lower_covers",
    "interval", "chain_label", "make_chain", "is_increasing", "flip",
    "increasing_maximal_chain", "maximal_chains", "lex_first_chain",
    "rank_vector", "is_rank_symmetric", "is_self_dual", "interval_report",
    "SELF_DUAL_GUARD",
]

SELF_DUAL_GUARD = 10_000


class NotAnEdge(ValueError):
    pass


class NotComparable(ValueError):
    pass


class IntervalTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class MaximalChain:
    elements: tuple[Permutation, ...]
    labels: tuple[ValueTransposition, ...]

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def bottom(self) -> Permutation:
        return self.elements[0]

    @property
    def top(self) -> Permutation:
        return self.elements[-1]


@dataclass(frozen=True)
class BruhatInterval:
    bottom: Permutation
    top: Permutation
    members: frozenset[Permutation]
    rank: int

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, w) -> bool:
        return w in self.members


def _moved(u: Permutation, v: Permutation) -> list[int]:
    check_same_degree(u, v)
    return [k for k, (a, b) in enumerate(zip(u.entries, v.entries)) if a != b]


def is_cover(u: Permutation, v: Permutation) -> bool:
    """``u`` is covered by ``v``: ``v = u (i j)`` with ``u(i) < u(j)`` and no value of ``u`` strictly between them in positions ``i < k < j``."""
    moved = _moved(u, v)
    if len(moved) != 2:
        return False
    i, j = moved
    lo, hi = u.entries[i], u.entries[j]
    if lo > hi:
        return False
    return all(not lo < u.entries[k] < hi for k in range(i + 1, j))


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Sorted-prefix criterion: every sorted prefix of ``u`` is entrywise at most that of ``v``."""
    check_same_degree(u, v)
    prefix_u: list[int] = []
    prefix_v: list[int] = []
    for a, b in zip(u.entries[:-1], v.entries[:-1]):
        insort(prefix_u, a)
        insort(prefix_v, b)
        for x, y in zip(prefix_u, prefix_v):
            if x > y:
                return False
    return True


def upper_covers(u: Permutation) -> list[Permutation]:
    word = u.entries
    n = len(word)
    out = []
    for i in range(n):
        lo = word[i]
        # scan right keeping the smallest value above lo seen so far
        ceiling = n + 1
        for j in range(i + 1, n):
            value = word[j]
            if lo < value < ceiling:
                out.append(apply_transposition(u, PositionTransposition(i + 1, j + 1)))
                ceiling = value
    return out


def lower_covers(v: Permutation) -> list[Permutation]:
    word = v.entries
    n = len(word)
    out = []
    for i in range(n):
        hi = word[i]
        floor = 0
        for j in range(i + 1, n):
            value = word[j]
            if floor < value < hi:
                out.append(apply_transposition(v, PositionTransposition(i + 1, j + 1)))
                floor = value
    return out


def interval(u: Permutation, v: Permutation) -> BruhatInterval:
    """``[u, v]`` by breadth-first search upward from ``u``, pruned by ``x <= v``."""
    if not bruhat_leq(u, v):
        raise NotComparable(f"{u} is not below {v} in Bruhat order")
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in upper_covers(x):
            if y not in seen and bruhat_leq(y, v):
                seen.add(y)
                queue.append(y)
    return BruhatInterval(u, v, frozenset(seen), length(v) - length(u))


def chain_label(u: Permutation, v: Permutation) -> ValueTransposition:
    """``v u^{-1}`` for a Bruhat-graph edge ``u -> v``."""
    moved = _moved(u, v)
    if len(moved) != 2 or length(u) >= length(v):
        raise NotAnEdge(f"{u} -> {v} is not a Bruhat graph edge")
    a, b = u.entries[moved[0]], u.entries[moved[1]]
    return ValueTransposition(min(a, b), max(a, b))


def make_chain(elements) -> MaximalChain:
    elements = tuple(elements)
    for x, y in zip(elements, elements[1:]):
        if not is_cover(x, y):
            raise NotAnEdge(f"{x} is not covered by {y}")
    labels = tuple(chain_label(x, y) for x, y in zip(elements, elements[1:]))
    return MaximalChain(elements, labels)


def is_increasing(c: MaximalChain) -> bool:
    return all(a <= b for a, b in zip(c.labels, c.labels[1:]))


def flip(c: MaximalChain, i: int) -> MaximalChain:
    """Replace ``x_i`` by the other middle element of ``[x_{i-1}, x_{i+1}]``."""
    d = len(c.elements) - 1
    if not 1 <= i <= d - 1:
        raise IndexError(f"flip index {i} outside [1, {d - 1}]")
    below, middle, above = c.elements[i - 1], c.elements[i], c.elements[i + 1]
    others = [y for y in upper_covers(below) if y != middle and is_cover(y, above)]
    if len(others) != 1:
        raise AssertionError(f"rank-2 interval [{below}, {above}] is not a diamond")
    return make_chain(c.elements[:i] + (others[0],) + c.elements[i + 1:])


def increasing_maximal_chain(u: Permutation, v: Permutation) -> MaximalChain:
    """Greedy ascent taking the smallest label that stays below ``v``."""
    if not bruhat_leq(u, v):
        raise NotComparable(f"{u} is not below {v} in Bruhat order")
    elements = [u]
    x = u
    while x != v:
        steps = [(chain_label(x, y), y) for y in upper_covers(x) if bruhat_leq(y, v)]
        x = min(steps)[1]
        elements.append(x)
    return make_chain(elements)


def maximal_chains(u: Permutation, v: Permutation) -> Iterator[MaximalChain]:
    """Every maximal chain of ``[u, v]``, in lexicographic order of label words."""
    if not bruhat_leq(u, v):
        raise NotComparable(f"{u} is not below {v} in Bruhat order")
    members = interval(u, v).members
    path = [u]

    def walk(x):
        if x == v:
            yield make_chain(path)
            return
        steps = sorted((chain_label(x, y), y) for y in upper_covers(x) if y in members)
        for _, y in steps:
            path.append(y)
            yield from walk(y)
            path.pop()

    yield from walk(u)


def lex_first_chain(u: Permutation, v: Permutation) -> MaximalChain:
    return next(maximal_chains(u, v))


def rank_vector(iv: BruhatInterval) -> list[int]:
    base = length(iv.bottom)
    counts = Counter(length(x) - base for x in iv.members)
    return [counts.get(r, 0) for r in range(iv.rank + 1)]


def is_rank_symmetric(iv: BruhatInterval) -> bool:
    vec = rank_vector(iv)
    return vec == vec[::-1]


def _hasse(members):
    index = {x: k for k, x in enumerate(sorted(members))}
    up = [[] for _ in index]
    down = [[] for _ in index]
    for x, k in index.items():
        for y in upper_covers(x):
            m = index.get(y)
            if m is not None:
                up[k].append(m)
                down[m].append(k)
    return index, up, down


def _refine(up, down):
    """Colour refinement over the disjoint union of a Hasse diagram and its dual."""
    size = len(up)
    # vertex k in the dual copy is k + size with up/down swapped
    ups = up + down
    downs = down + up
    offset = [0] * size + [size] * size
    colour = [(len(ups[k]), len(downs[k])) for k in range(2 * size)]
    palette = {c: n for n, c in enumerate(sorted(set(colour)))}
    colour = [palette[c] for c in colour]
    while True:
        signature = [
            (colour[k],
             tuple(sorted(colour[m + offset[k]] for m in ups[k])),
             tuple(sorted(colour[m + offset[k]] for m in downs[k])))
            for k in range(2 * size)
        ]
        palette = {s: n for n, s in enumerate(sorted(set(signature)))}
        refined = [palette[s] for s in signature]
        if len(palette) == len(set(colour)):
            return refined
        colour = refined


def is_self_dual(iv: BruhatInterval, guard: int = SELF_DUAL_GUARD) -> bool:
    """Search for an order-reversing bijection of the interval onto itself."""
    if len(iv.members) > guard:
        raise IntervalTooLarge(f"interval has {len(iv.members)} members; guard is {guard}")
    if not is_rank_symmetric(iv):
        return False
    index, up, down = _hasse(iv.members)
    size = len(index)
    colour = _refine(up, down)
    if Counter(colour[:size]) != Counter(colour[size:]):
        return False
    # anti-automorphism f: x <. y  <=>  f(y) <. f(x); colour[k] must equal dual colour of f(k)
    base = length(iv.bottom)
    elems = sorted(index, key=index.get)
    order = sorted(range(size), key=lambda k: (length(elems[k]) - base, k))
    by_colour: dict[int, list[int]] = {}
    for k in range(size):
        by_colour.setdefault(colour[size + k], []).append(k)
    image = [-1] * size
    used = [False] * size
    up_sets = [set(a) for a in up]
    down_sets = [set(a) for a in down]

    def candidates(k):
        placed_below = [image[m] for m in down[k] if image[m] >= 0]
        pool = down[placed_below[0]] if placed_below else by_colour.get(colour[k], [])
        for target in pool:
            if used[target] or colour[size + target] != colour[k]:
                continue
            if any(image[m] >= 0 and image[m] not in up_sets[target] for m in down[k]):
                continue
            if any(image[m] >= 0 and image[m] not in down_sets[target] for m in up[k]):
                continue
            yield target

    # iterative backtracking; recursion would be as deep as the interval is large
    stack = [candidates(order[0])]
    while stack:
        step = len(stack) - 1
        k = order[step]
        if image[k] >= 0:
            used[image[k]] = False
            image[k] = -1
        target = next(stack[-1], None)
        if target is None:
            stack.pop()
            continue
        image[k] = target
        used[target] = True
        if step + 1 == size:
            return True
        stack.append(candidates(order[step + 1]))
    return False


def interval_report(iv: BruhatInterval) -> dict:
    from .perms import format_perm
    return {
        "bottom": format_perm(iv.bottom),
        "top": format_perm(iv.top),
        "size": len(iv.members),
        "rank": iv.rank,
        "rank_vector": rank_vector(iv),
    }
