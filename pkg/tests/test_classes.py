import itertools

import pytest
from hypothesis import given

from oddclass.bruhat import bruhat_leq, interval, is_cover, rank_vector
from oddclass.classes import (
    GuardExceeded, NotInSameClass, SwapType, class_chain, class_max, class_min, class_of,
    intermediate, is_legal_transposition, legal_cover, legal_edges, parity_vector,
    partition, pattern_swap_type, same_class,
)
from oddclass.diagrams import canonical_key, odd_diagram
from oddclass.perms import (
    DegreeMismatch, PositionTransposition as T, all_perms, apply_transposition, identity,
    inverse, length, parse,
)

from strategies import perm_and_transposition, perms


def words(perms_):
    return {"".join(map(str, w.entries)) for w in perms_}


def brute_classes(n):
    groups = {}
    for w in all_perms(n):
        groups.setdefault(canonical_key(odd_diagram(w)), set()).add(w)
    return groups


@pytest.mark.parametrize("v, w, expected", [
    ("5431627", "7461325", True),
    ("213", "312", True),
    ("123", "132", False),
])
def test_same_class_examples(v, w, expected):
    assert same_class(parse(v), parse(w)) is expected


def test_same_class_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        same_class(parse("12"), parse("123"))


def test_legality_examples():
    v = parse("5431627")
    assert is_legal_transposition(v, T(3, 5))
    assert not is_legal_transposition(v, T(1, 3))
    assert {T(3, 5), T(5, 7)} <= set(legal_edges(v))
    assert legal_edges(identity(6)) == []
    assert legal_edges(parse("213")) == [T(1, 3)]


@given(perms(min_n=2))
def test_adjacent_transpositions_never_legal(w):
    for i in range(1, w.degree):
        assert not is_legal_transposition(w, T(i, i + 1))


@pytest.mark.parametrize("n", range(2, 7))
def test_legality_matches_diagram_oracle(n):
    for v in all_perms(n):
        key = canonical_key(odd_diagram(v))
        for i, j in itertools.combinations(range(1, n + 1), 2):
            t = T(i, j)
            same = canonical_key(odd_diagram(apply_transposition(v, t))) == key
            assert is_legal_transposition(v, t) == same, (v, t)


@given(perm_and_transposition())
def test_legal_implies_pattern_swap(vt):
    v, t = vt
    if is_legal_transposition(v, t):
        assert pattern_swap_type(v, t) is not SwapType.NOT_A_PATTERN_SWAP
        # the swap exchanges the two types
        other = pattern_swap_type(apply_transposition(v, t), t)
        assert {pattern_swap_type(v, t), other} == {SwapType.TWO_ONE_THREE, SwapType.THREE_ONE_TWO}


@pytest.mark.parametrize("v, t, expected", [
    ("5431627", (5, 7), SwapType.TWO_ONE_THREE),
    ("5431726", (5, 7), SwapType.THREE_ONE_TWO),
    ("5431627", (1, 3), SwapType.NOT_A_PATTERN_SWAP),
    ("5431627", (1, 2), SwapType.NOT_A_PATTERN_SWAP),
])
def test_pattern_swap_examples(v, t, expected):
    assert pattern_swap_type(parse(v), T(*t)) is expected


def test_intermediate_examples():
    w = parse("7461325")
    assert intermediate(parse("5431627"), w) == parse("5461327")
    assert intermediate(parse("5461327"), w) == w
    with pytest.raises(NotInSameClass):
        intermediate(w, w)
    with pytest.raises(NotInSameClass):
        intermediate(parse("123"), parse("132"))


@pytest.mark.parametrize("n", range(2, 7))
def test_intermediate_properties(n):
    for members in brute_classes(n).values():
        for v, w in itertools.permutations(sorted(members), 2):
            x = intermediate(v, w)
            assert same_class(x, v)
            vi, wi, xi = inverse(v).entries, inverse(w).entries, inverse(x).entries
            k = next(a for a in range(n) if vi[a] != wi[a])
            assert xi[:k + 1] == wi[:k + 1]
            if vi[k] < wi[k]:
                assert length(x) > length(v)


def test_class_of_examples():
    c = class_of(parse("7461325"))
    assert c.size == 18 and c.rank == 5
    assert c.min_element == parse("5431627") and c.max_element == parse("7461523")
    assert class_of(identity(5)).members == {identity(5)}
    assert words(class_of(parse("213")).members) == {"213", "312"}


@pytest.mark.parametrize("w, lo, hi", [
    ("7461325", "5431627", "7461523"),
    ("12345", "12345", "12345"),
    ("312", "213", "312"),
    ("213", "213", "312"),
])
def test_extreme_examples(w, lo, hi):
    assert class_min(parse(w)) == parse(lo)
    assert class_max(parse(w)) == parse(hi)


@pytest.mark.parametrize("n", range(1, 7))
def test_extremes_match_brute_force(n):
    for members in brute_classes(n).values():
        lo = [x for x in members if all(bruhat_leq(x, y) for y in members)]
        hi = [x for x in members if all(bruhat_leq(y, x) for y in members)]
        w = next(iter(members))
        assert lo == [class_min(w)] and hi == [class_max(w)]


@pytest.mark.parametrize("n", range(1, 7))
def test_class_is_interval(n):
    for members in brute_classes(n).values():
        w = next(iter(members))
        assert class_of(w).members == members
        assert interval(class_min(w), class_max(w)).members == members


@pytest.mark.parametrize("n", range(2, 7))
def test_parity_vector_shared(n):
    for members in brute_classes(n).values():
        vectors = {parity_vector(w) for w in members}
        firsts = {inverse(w)(1) for w in members}
        assert len(vectors) == 1 and len(firsts) == 1


def test_legal_cover_examples():
    assert legal_cover(parse("5431627")) == T(3, 5)
    assert legal_cover(parse("7461523")) is None
    assert legal_cover(parse("213")) == T(1, 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_legal_cover_is_legal_cover(n):
    for w in all_perms(n):
        t = legal_cover(w)
        if t is None:
            assert w == class_max(w)
        else:
            assert is_legal_transposition(w, t)
            assert is_cover(w, apply_transposition(w, t))


def test_class_chain_examples():
    chain = class_chain(parse("7461325"))
    assert len(chain) == 6
    assert chain.bottom == parse("5431627") and chain.top == parse("7461523")
    assert all(same_class(x, chain.bottom) for x in chain.elements)
    assert class_chain(identity(4)).elements == (identity(4),)
    assert words(class_chain(parse("213")).elements) == {"213", "312"}


def test_class_record():
    record = class_of(parse("7461325")).record()
    assert list(record) == ["key", "n", "size", "min", "max", "rank"]
    assert record["min"] == "5,4,3,1,6,2,7" and record["max"] == "7,4,6,1,5,2,3"
    members = class_of(parse("213")).record(members=True)["members"]
    assert members == ["2,1,3", "3,1,2"]


def test_partition_examples():
    assert len(partition(1)) == 1
    three = partition(3)
    assert sorted(sorted(words(c.members)) for c in three.values()) == [
        ["123"], ["132"], ["213", "312"], ["231"], ["321"]]
    four = partition(4)
    pairs = [words(c.members) for c in four.values() if c.size == 2]
    assert len(four) == 17
    assert sorted(map(sorted, pairs)) == sorted(map(sorted, [
        {"2134", "3124"}, {"1324", "1423"}, {"2314", "2413"}, {"3142", "4132"},
        {"4213", "4312"}, {"3214", "3412"}, {"3241", "4231"}]))
    assert sum(c.size == 1 for c in four.values()) == 10
    assert all(c.rank == c.size - 1 for c in four.values())


@pytest.mark.parametrize("n", range(1, 8))
def test_partition_covers_group(n):
    parts = partition(n)
    assert sum(c.size for c in parts.values()) == len(list(all_perms(n)))
    assert list(parts) == sorted(parts)


def test_partition_guard():
    with pytest.raises(GuardExceeded):
        partition(12)
    with pytest.raises(GuardExceeded):
        partition(0)


def test_seven_class_rank_vector():
    c = class_of(parse("7461325"))
    assert rank_vector(interval(c.min_element, c.max_element)) == [1, 3, 5, 5, 3, 1]
