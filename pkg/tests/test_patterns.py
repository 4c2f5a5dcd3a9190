from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from oddclass.counting import bell_number
from oddclass.patterns import (
    P2_13, P213, P312, P3_12, PatternSpec, avoiders, avoids, contains,
    format_pattern, occurrences, parse_pattern,
)
from oddclass.perms import all_perms, identity, parse

from strategies import perms


def naive_occurrences(w, p):
    """Every position subset whose values are ordered like ``p`` and respect the glued gaps."""
    word = w.entries
    k = p.size
    out = []
    for positions in combinations(range(len(word)), k):
        if any(positions[g] - positions[g - 1] != 1 for g in p.adjacent):
            continue
        values = [word[x] for x in positions]
        ranks = tuple(sorted(values).index(v) + 1 for v in values)
        if ranks == p.letters:
            out.append(tuple(x + 1 for x in positions))
    return out


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def test_occurrence_examples():
    assert (1, 3, 4) in occurrences(parse("41325"), parse_pattern("321"))
    assert occurrences(parse("41325"), PatternSpec((3, 2, 1), frozenset({1}))) == []
    assert (5, 6, 7) in occurrences(parse("5431627"), P213)


@pytest.mark.parametrize("w, p, expected", [
    ("312", P213, True),
    ("41325", parse_pattern("321"), False),
    ("123456", P312, True),
])
def test_avoids_examples(w, p, expected):
    assert avoids(parse(w), p) is expected
    assert contains(parse(w), p) is not expected


def test_avoiders_examples():
    assert len(avoiders(3, P213)) == 5
    assert parse("213") not in avoiders(3, P213)
    assert len(avoiders(4, P3_12)) == 15
    assert len(avoiders(4, P312)) == 14


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("p", [P213, P312, parse_pattern("123"), parse_pattern("321")])
def test_classical_avoiders_are_catalan(n, p):
    assert len(avoiders(n, p)) == catalan(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_vincular_avoiders_counts(n):
    assert len(avoiders(n, P3_12)) == bell_number(n)
    # gluing the 13 of 213 changes nothing: an occurrence can always be slid together
    assert avoiders(n, P2_13) == avoiders(n, P213)


@given(perms(max_n=8), st.sampled_from(["213", "312", "2-13", "3-12", "31-2", "1-2-3", "321", "12-3", "1234", "2-41-3"]))
def test_search_matches_naive(w, text):
    p = parse_pattern(text)
    found = occurrences(w, p)
    assert found == naive_occurrences(w, p)
    assert contains(w, p) == bool(found)


@pytest.mark.parametrize("text, letters, adjacent", [
    ("213", (2, 1, 3), set()),
    ("2-13", (2, 1, 3), {2}),
    ("31-2", (3, 1, 2), {1}),
    ("2-1-3", (2, 1, 3), set()),
    ("1234", (1, 2, 3, 4), set()),
])
def test_parse_pattern(text, letters, adjacent):
    p = parse_pattern(text)
    assert p.letters == letters and p.adjacent == adjacent


@pytest.mark.parametrize("text", ["213", "2-13", "3-12", "31-2", "1-23-4"])
def test_pattern_text_round_trips(text):
    assert format_pattern(parse_pattern(text)) == text


@pytest.mark.parametrize("bad", ["2--13", "-213", "224", "2-14"])
def test_bad_patterns(bad):
    with pytest.raises(ValueError):
        parse_pattern(bad)


def test_pattern_longer_than_host():
    assert avoids(identity(2), parse_pattern("123"))
    assert occurrences(identity(2), parse_pattern("12")) == [(1, 2)]


def test_avoiders_in_lexicographic_order():
    found = avoiders(5, P312)
    assert found == sorted(found)
    assert found == [w for w in all_perms(5) if not naive_occurrences(w, P312)]
