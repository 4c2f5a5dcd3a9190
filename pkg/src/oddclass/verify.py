"""
Exhaustive checks over S_n for the structural claims about odd diagram
classes.

Each check scans its search space in a fixed (lexicographic) order and
stops at the first counterexample, so a failing report always names the
same witness. Checks recompute what they test from scratch: the interval
check rebuilds intervals by search and, for small n, by filtering the
whole group; the min/max check finds extremes by comparing lengths and
Bruhat relations directly, never through the construction it is checking.

>>> report = run_check("o_sequence", 5)
>>> report.status, report.statistics["values"]
('pass', [1, 2, 5, 17, 70])
"""

from __future__ import annotations

import json
import time
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Callable, Optional

from .bruhat import (
    bruhat_leq, flip, increasing_maximal_chain, interval, maximal_chains,
    upper_covers,
)
from .classes import (
    DiagramClass, _legal, class_chain, intermediate, is_legal_transposition,
    partition, pattern_swap_type, SwapType,
)
from .counting import KNOWN_O, bell_number, count_odd_diagrams
from .diagrams import canonical_key, odd_row_masks
from .patterns import (
    P2_13, P3_12, P213, P312, PatternSpec, avoiders, avoids, contains,
    format_pattern, occurrences,
)
from .perms import (
    Permutation, PositionTransposition, all_perms, apply_transposition,
    format_perm, inverse, length,
)

__all__ = ["VerificationReport", "UnknownCheck", "GuardExceeded", "CHECKS",
           "GUARDS", "run_check", "run_all", "bell_number"]


class UnknownCheck(KeyError):
    pass


class GuardExceeded(ValueError):
    pass


@dataclass
class VerificationReport:
    check_id: str
    n: int
    status: str
    statistics: dict = field(default_factory=dict)
    counterexample: Optional[dict] = None
    elapsed_ms: float = 0.0

    def __post_init__(self):
        if (self.status == "fail") != (self.counterexample is not None):
            raise ValueError("a report fails exactly when it carries a counterexample")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "n": self.n,
            "status": self.status,
            "statistics": self.statistics,
            "counterexample": self.counterexample,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, obj: dict) -> "VerificationReport":
        return cls(obj["check_id"], obj["n"], obj["status"], obj["statistics"],
                   obj["counterexample"], obj["elapsed_ms"])


class _Found(Exception):
    """Carries the first counterexample out of a scan."""

    def __init__(self, payload: dict):
        super().__init__(payload)
        self.payload = payload


def _fail(**payload):
    raise _Found({k: _plain(v) for k, v in payload.items()})


def _plain(value):
    if isinstance(value, Permutation):
        return format_perm(value)
    if isinstance(value, PositionTransposition):
        return [value.i, value.j]
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [_plain(v) for v in items]
    return value


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[DiagramClass, ...]:
    return tuple(partition(n).values())


def _sorted_members(c: DiagramClass) -> list[Permutation]:
    return sorted(c.members)


def _key(c: DiagramClass) -> str:
    return canonical_key(c.key)


# -- individual checks -------------------------------------------------------

def check_interval(n):
    classes = _classes(n)
    filtered = 0
    group = list(all_perms(n)) if n <= 6 else None
    for c in classes:
        found = interval(c.min_element, c.max_element).members
        if found != c.members:
            _fail(key=_key(c), min=c.min_element, max=c.max_element,
                  extra=found - c.members, missing=c.members - found)
        if group is not None:
            by_filter = {x for x in group
                         if bruhat_leq(c.min_element, x) and bruhat_leq(x, c.max_element)}
            if by_filter != c.members:
                _fail(key=_key(c), min=c.min_element, max=c.max_element,
                      filtered=by_filter)
            filtered += 1
    return {"classes": len(classes), "filter_checked": filtered}


def _brute_extremes(members):
    ordered = sorted(members, key=lambda x: (length(x), x.entries))
    lo, hi = ordered[0], ordered[-1]
    lo_ok = all(bruhat_leq(lo, x) for x in ordered)
    hi_ok = all(bruhat_leq(x, hi) for x in ordered)
    return (lo if lo_ok else None), (hi if hi_ok else None)


def check_minmax(n):
    classes = _classes(n)
    for c in classes:
        lo, hi = _brute_extremes(c.members)
        if lo != c.min_element or hi != c.max_element:
            _fail(key=_key(c), brute_min=lo, brute_max=hi,
                  constructed_min=c.min_element, constructed_max=c.max_element)
    return {"classes": len(classes)}


def check_legality_oracle(n):
    pairs = legal = 0
    for v in all_perms(n):
        key = odd_row_masks(v.entries)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                t = PositionTransposition(i, j)
                fast = is_legal_transposition(v, t)
                slow = odd_row_masks(apply_transposition(v, t).entries) == key
                pairs += 1
                if fast != slow:
                    _fail(v=v, t=t, rule=fast, oracle=slow)
                if fast:
                    legal += 1
                    if pattern_swap_type(v, t) is SwapType.NOT_A_PATTERN_SWAP:
                        _fail(v=v, t=t, reason="legal edge is not a pattern swap")
    return {"pairs": pairs, "legal": legal}


def _first_difference(v, w):
    vi, wi = inverse(v).entries, inverse(w).entries
    for value in range(len(vi)):
        if vi[value] != wi[value]:
            return value + 1, vi[value], wi[value]
    return None


def check_pattern_theorem(n):
    pairs = 0
    for c in _classes(n):
        members = _sorted_members(c)
        for x in range(len(members)):
            for y in range(x + 1, len(members)):
                v, w = members[x], members[y]
                pairs += 1
                first, b, c_ = _first_difference(v, w)
                if b > c_:
                    v, w, b, c_ = w, v, c_, b
                # v should hold 213 and w 312
                if not (contains(v, P213) and contains(w, P312)):
                    _fail(v=v, w=w, reason="no 213/312 pair")
                triple = (b, c_ - 1, c_)
                if c_ - b < 2:
                    _fail(v=v, w=w, reason="moved positions adjacent", positions=list(triple))
                if triple not in occurrences(v, P2_13) or triple not in occurrences(w, P3_12):
                    _fail(v=v, w=w, positions=list(triple),
                          reason="vincular occurrences not at the shared positions")
                if not (v(b) == w(c_) == first):
                    _fail(v=v, w=w, positions=list(triple), reason="the '2' values differ")
                vi, wi = inverse(v).entries, inverse(w).entries
                if vi[:first - 1] != wi[:first - 1]:
                    _fail(v=v, w=w, reason="graphs differ left of the shared '2'")
    return {"pairs": pairs}


def _distinct_keys(perms) -> Optional[tuple]:
    seen = {}
    for w in perms:
        key = odd_row_masks(w.entries)
        if key in seen:
            return seen[key], w
        seen[key] = w
    return None


INJECTIVE_SPECS = (P213, P312, P2_13, P3_12)


def check_injectivity(n):
    sizes = {}
    for p in INJECTIVE_SPECS:
        av = avoiders(n, p)
        sizes[format_pattern(p)] = len(av)
        clash = _distinct_keys(av)
        if clash:
            _fail(pattern=format_pattern(p), v=clash[0], w=clash[1])
    return {"avoider_counts": sizes}


OTHER_PATTERNS = tuple(PatternSpec(tuple(p)) for p in permutations((1, 2, 3))
                       if p not in ((2, 1, 3), (3, 1, 2)))


def check_noninjectivity_other(n):
    witnesses = {}
    for p in OTHER_PATTERNS:
        av = avoiders(n, p)
        if len(av) <= 1:
            continue
        clash = _distinct_keys(av)
        if clash is None:
            _fail(pattern=format_pattern(p), avoiders=len(av),
                  reason="odd diagram map is injective on the avoiders")
        witnesses[format_pattern(p)] = [format_perm(clash[0]), format_perm(clash[1])]
    return {"witnesses": witnesses}


def check_bell_bound(n):
    rows = []
    for m in range(1, n + 1):
        o, bell = count_odd_diagrams(m), bell_number(m)
        av = len(avoiders(m, P3_12))
        rows.append([m, o, bell, av])
        if o < bell or av != bell:
            _fail(n=m, o=o, bell=bell, avoiders_3_12=av)
    return {"rows": rows}


def check_o_sequence(n):
    values = []
    for m in range(1, n + 1):
        o = count_odd_diagrams(m)
        values.append(o)
        if m <= len(KNOWN_O) and o != KNOWN_O[m - 1]:
            _fail(n=m, computed=o, expected=KNOWN_O[m - 1])
        if m <= 7 and len(_classes(m)) != o:
            _fail(n=m, computed=o, partition_classes=len(_classes(m)))
    return {"values": values}


def check_parity(n):
    classes = _classes(n)
    for c in classes:
        members = _sorted_members(c)
        ref = inverse(members[0]).entries
        for w in members[1:]:
            inv = inverse(w).entries
            if inv[0] != ref[0]:
                _fail(key=_key(c), v=members[0], w=w, reason="leftmost column differs")
            if any((a - b) % 2 for a, b in zip(inv, ref)):
                _fail(key=_key(c), v=members[0], w=w, reason="column parity differs")
    return {"classes": len(classes)}


def illegal_pattern_types(v: Permutation) -> frozenset[str]:
    """Types (213 / 312) of the patterns in ``v`` whose end swap changes the odd diagram."""
    word = v.entries
    n = len(word)
    types = set()
    for i in range(n):
        for j in range(i + 2, n):
            low = min(word[i], word[j])
            if any(word[h] < low for h in range(i + 1, j)) and not _legal(word, i, j):
                types.add("213" if word[i] < word[j] else "312")
    return frozenset(types)


def check_persistence(n):
    classes = _classes(n)
    with_illegal = 0
    for c in classes:
        members = _sorted_members(c)
        ref = illegal_pattern_types(members[0])
        with_illegal += bool(ref)
        for w in members[1:]:
            if illegal_pattern_types(w) != ref:
                _fail(key=_key(c), v=members[0], w=w,
                      v_types=sorted(ref), w_types=sorted(illegal_pattern_types(w)))
    return {"classes": len(classes), "classes_with_illegal_patterns": with_illegal}


def check_avoider_extremes(n):
    classes = _classes(n)
    seen = Counter()
    for c in classes:
        members = _sorted_members(c)
        for pattern, top in ((P213, True), (P312, False)):
            av = [w for w in members if avoids(w, pattern)]
            if len(av) > 1:
                _fail(key=_key(c), pattern=format_pattern(pattern), avoiders=av)
            if av:
                seen[format_pattern(pattern)] += 1
                a = av[0]
                extreme = all(bruhat_leq(x, a) for x in members) if top else \
                    all(bruhat_leq(a, x) for x in members)
                if not extreme:
                    _fail(key=_key(c), pattern=format_pattern(pattern), avoider=a,
                          reason="avoider is not the " + ("maximum" if top else "minimum"))
    return {"classes": len(classes), "classes_with_avoider": dict(sorted(seen.items()))}


def _inversion_mask(word) -> int:
    n = len(word)
    mask = 0
    for i in range(n):
        for j in range(i + 1, n):
            if word[i] > word[j]:
                mask |= 1 << (word[j] * n + word[i])
    return mask


def check_antichain(n):
    classes = _classes(n)
    pairs = 0
    for c in classes:
        members = _sorted_members(c)
        masks = [_inversion_mask(w.entries) for w in members]
        for x in range(len(members)):
            for y in range(len(members)):
                if x != y:
                    pairs += 1
                    if masks[x] & ~masks[y] == 0:
                        _fail(key=_key(c), lower=members[x], upper=members[y])
    return {"classes": len(classes), "ordered_pairs": pairs}


def check_rank_symmetry(n):
    classes = _classes(n)
    shapes = Counter()
    for c in classes:
        lengths = Counter(length(w) for w in c.members)
        base, top = min(lengths), max(lengths)
        vector = [lengths.get(r, 0) for r in range(base, top + 1)]
        shapes[tuple(vector)] += 1
        if vector != vector[::-1]:
            _fail(key=_key(c), rank_vector=vector)
    return {"classes": len(classes), "distinct_rank_vectors": len(shapes)}


def _all_chain_data(n):
    group = list(all_perms(n))
    index = {w: k for k, w in enumerate(group)}
    ups = []
    for w in group:
        steps = []
        for y in upper_covers(w):
            moved = [p for p in range(n) if w.entries[p] != y.entries[p]]
            a, b = sorted(w.entries[p] for p in moved)
            steps.append(((a, b), index[y]))
        ups.append(sorted(steps))
    covers = {(k, y) for k, steps in enumerate(ups) for _, y in steps}
    leq = [[bruhat_leq(u, v) for v in group] for u in group]
    return group, ups, covers, leq


def check_flip_connectivity(n):
    group, ups, covers, leq = _all_chain_data(n)
    size = len(group)
    intervals = chains = flips = 0
    for u in range(size):
        for v in range(size):
            if not leq[u][v]:
                continue
            intervals += 1
            inside = [leq[u][x] and leq[x][v] for x in range(size)]
            increasing = 0
            first_labels = None
            # depth-first walk in label order: the first chain found is lexicographically first
            path, labels = [u], []
            stack = [iter(ups[u])]
            while stack:
                if path[-1] == v:
                    chains += 1
                    if first_labels is None:
                        first_labels = list(labels)
                    descent = next((i for i in range(1, len(labels))
                                    if labels[i - 1] > labels[i]), None)
                    if descent is None:
                        increasing += 1
                    else:
                        below, mid, above = path[descent - 1], path[descent], path[descent + 1]
                        middles = [(lab, y) for lab, y in ups[below] if (y, above) in covers]
                        if len(middles) != 2:
                            _fail(bottom=group[below], top=group[above],
                                  reason="rank-2 interval is not a diamond")
                        other = next(m for m in middles if m[1] != mid)
                        flips += 1
                        if not other[0] < labels[descent - 1]:
                            _fail(chain=[group[x] for x in path], position=descent,
                                  reason="flip at a descent does not lower the label word")
                    stack.pop()
                    path.pop()
                    if labels:
                        labels.pop()
                    continue
                step = next(stack[-1], None)
                if step is None:
                    stack.pop()
                    path.pop()
                    if labels:
                        labels.pop()
                    continue
                lab, y = step
                if inside[y]:
                    path.append(y)
                    labels.append(lab)
                    stack.append(iter(ups[y]))
            if increasing != 1:
                _fail(bottom=group[u], top=group[v], increasing_chains=increasing)
            if any(a > b for a, b in zip(first_labels, first_labels[1:])):
                _fail(bottom=group[u], top=group[v], reason="lexicographically first chain is not increasing")
            greedy = increasing_maximal_chain(group[u], group[v])
            if [(t.a, t.b) for t in greedy.labels] != first_labels:
                _fail(bottom=group[u], top=group[v], reason="greedy increasing chain differs")
    if n <= 4:
        _flip_graph_closure(n, group)
    return {"intervals": intervals, "maximal_chains": chains, "descent_flips": flips}


def _flip_graph_closure(n, group):
    """Flip-graph search over every interval, using the library chain objects."""
    for u in group:
        for v in group:
            if not bruhat_leq(u, v):
                continue
            every = {c.elements for c in maximal_chains(u, v)}
            start = increasing_maximal_chain(u, v)
            seen = {start.elements}
            queue = deque([start])
            while queue:
                c = queue.popleft()
                for i in range(1, len(c.elements) - 1):
                    f = flip(c, i)
                    if flip(f, i) != c:
                        _fail(chain=list(c.elements), position=i, reason="flip is not an involution")
                    if f.elements not in seen:
                        seen.add(f.elements)
                        queue.append(f)
            if seen != every:
                _fail(bottom=u, top=v, reached=len(seen), chains=len(every))


def check_square(n):
    classes = _classes(n)
    squares = 0
    for c in classes:
        members = c.members
        for x in _sorted_members(c):
            for y in upper_covers(x):
                if y not in members:
                    continue
                for z in upper_covers(y):
                    if z not in members:
                        continue
                    squares += 1
                    outside = interval(x, z).members - members
                    if outside:
                        _fail(key=_key(c), x=x, y=y, z=z, outside=outside)
    return {"classes": len(classes), "saturated_3_chains": squares}


def check_class_connectivity(n):
    classes = _classes(n)
    edges = 0
    for c in classes:
        members = _sorted_members(c)
        adjacent = {w: set() for w in members}
        for v in members:
            for w in members:
                if v == w:
                    continue
                step = intermediate(v, w)
                if step not in c.members:
                    _fail(key=_key(c), v=v, w=w, intermediate=step, reason="intermediate left the class")
                first, b, c_ = _first_difference(v, w)
                if inverse(step).entries[:first] != inverse(w).entries[:first]:
                    _fail(v=v, w=w, intermediate=step, reason="does not agree with w on first k+1 values")
                if b < c_ and not length(step) > length(v):
                    _fail(v=v, w=w, intermediate=step, reason="length did not increase")
                adjacent[v].add(step)
                adjacent[step].add(v)
        edges += sum(len(a) for a in adjacent.values()) // 2
        seen = {members[0]}
        queue = deque([members[0]])
        while queue:
            x = queue.popleft()
            for y in adjacent[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        if seen != c.members:
            _fail(key=_key(c), unreached=c.members - seen)
    return {"classes": len(classes), "class_graph_edges": edges}


def check_class_chain(n):
    classes = _classes(n)
    for c in classes:
        chain = class_chain(c.min_element)
        if chain.bottom != c.min_element or chain.top != c.max_element:
            _fail(key=_key(c), chain=list(chain.elements), reason="chain endpoints are not min and max")
        if any(x not in c.members for x in chain.elements):
            _fail(key=_key(c), chain=list(chain.elements), reason="chain leaves the class")
        if len(chain.elements) - 1 != c.rank:
            _fail(key=_key(c), chain=list(chain.elements), rank=c.rank)
    return {"classes": len(classes)}


# check id -> (function, largest n allowed, smallest n allowed)
CHECKS: dict[str, tuple[Callable[[int], dict], int, int]] = {
    "interval": (check_interval, 8, 1),
    "minmax": (check_minmax, 8, 1),
    "legality_oracle": (check_legality_oracle, 6, 1),
    "pattern_theorem": (check_pattern_theorem, 6, 1),
    "injectivity": (check_injectivity, 8, 1),
    "noninjectivity_other": (check_noninjectivity_other, 8, 3),
    "bell_bound": (check_bell_bound, 8, 1),
    "o_sequence": (check_o_sequence, 10, 1),
    "parity": (check_parity, 6, 1),
    "persistence": (check_persistence, 6, 1),
    "avoider_extremes": (check_avoider_extremes, 8, 1),
    "antichain": (check_antichain, 8, 1),
    "rank_symmetry": (check_rank_symmetry, 8, 1),
    "flip_connectivity": (check_flip_connectivity, 5, 1),
    "square": (check_square, 6, 1),
    "class_connectivity": (check_class_connectivity, 6, 1),
    "class_chain": (check_class_chain, 7, 1),
}

GUARDS = {name: (low, high) for name, (_, high, low) in CHECKS.items()}


def run_check(check_id: str, n: int) -> VerificationReport:
    if check_id not in CHECKS:
        raise UnknownCheck(f"unknown check {check_id!r}; known: {', '.join(CHECKS)}")
    func, high, low = CHECKS[check_id]
    if not low <= n <= high:
        raise GuardExceeded(f"check {check_id!r} runs for {low} <= n <= {high}, got n={n}")
    start = time.perf_counter()
    try:
        stats = func(n)
        status, counterexample = "pass", None
    except _Found as found:
        stats, status, counterexample = {}, "fail", found.payload
    elapsed = round((time.perf_counter() - start) * 1000, 3)
    return VerificationReport(check_id, n, status, stats, counterexample, elapsed)


def run_all(n: int) -> list[VerificationReport]:
    """Every check whose guard admits ``n``, in check-id order."""
    return [run_check(name, n) for name in sorted(CHECKS)
            if GUARDS[name][0] <= n <= GUARDS[name][1]]
