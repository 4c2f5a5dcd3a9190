import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from oddclass.bruhat import (
    NotAnEdge, NotComparable, bruhat_leq, chain_label, flip, increasing_maximal_chain,
    interval, interval_report, is_cover, is_increasing, is_rank_symmetric, is_self_dual,
    lex_first_chain, lower_covers, make_chain, maximal_chains, rank_vector, upper_covers,
)
from oddclass.perms import (
    ValueTransposition, all_perms, apply_transposition, identity, length, longest, parse,
    PositionTransposition,
)

from strategies import perms


def P(*words):
    return [parse(w) for w in words]


def reflections_closure(n):
    """Bruhat order as the transitive closure of length-increasing transposition edges."""
    group = list(all_perms(n))
    above = {w: {w} for w in group}
    for w in sorted(group, key=length, reverse=True):
        for i, j in itertools.combinations(range(1, n + 1), 2):
            y = apply_transposition(w, PositionTransposition(i, j))
            if length(y) > length(w):
                above[w] |= above[y]
    return group, above


@pytest.mark.parametrize("u, v, expected", [
    ("123", "132", True),
    ("5431627", "5461327", True),
    ("123", "321", False),
])
def test_is_cover_examples(u, v, expected):
    assert is_cover(parse(u), parse(v)) is expected


@pytest.mark.parametrize("u, v, expected", [
    ("2413", "3142", False),
    ("5431627", "7461523", True),
    ("1234", "4321", True),
])
def test_bruhat_leq_examples(u, v, expected):
    assert bruhat_leq(parse(u), parse(v)) is expected


@given(perms())
def test_identity_is_minimum(w):
    assert bruhat_leq(identity(w.degree), w)
    assert bruhat_leq(w, longest(w.degree))


@pytest.mark.parametrize("n", range(1, 6))
def test_leq_matches_transposition_closure(n):
    group, above = reflections_closure(n)
    for u, v in itertools.product(group, repeat=2):
        assert bruhat_leq(u, v) == (v in above[u])


@pytest.mark.parametrize("n", range(1, 6))
def test_covers_consistent(n):
    for u in all_perms(n):
        ups = upper_covers(u)
        assert len(set(ups)) == len(ups)
        for v in ups:
            assert length(v) == length(u) + 1 and is_cover(u, v) and u in lower_covers(v)
        brute = [v for v in all_perms(n) if is_cover(u, v)]
        assert sorted(ups) == brute


def test_interval_examples():
    assert interval(parse("123"), parse("321")).members == frozenset(all_perms(3))
    assert interval(parse("1234"), parse("1243")).members == frozenset(P("1234", "1243"))
    iv = interval(parse("5431627"), parse("7461523"))
    assert len(iv) == 18 and iv.rank == 5
    assert rank_vector(iv) == [1, 3, 5, 5, 3, 1]


@pytest.mark.parametrize("n", range(1, 5))
def test_interval_matches_filter(n):
    group = list(all_perms(n))
    for u, v in itertools.product(group, repeat=2):
        if bruhat_leq(u, v):
            expected = {x for x in group if bruhat_leq(u, x) and bruhat_leq(x, v)}
            assert interval(u, v).members == expected


def test_interval_not_comparable():
    with pytest.raises(NotComparable):
        interval(parse("2413"), parse("3142"))


@pytest.mark.parametrize("u, v, label", [
    ("123", "213", (1, 2)),
    ("5431627", "5461327", (3, 6)),
    ("1234", "4231", (1, 4)),
])
def test_chain_label_examples(u, v, label):
    assert chain_label(parse(u), parse(v)) == ValueTransposition(*label)


def test_chain_label_rejects_non_edges():
    with pytest.raises(NotAnEdge):
        chain_label(parse("213"), parse("123"))
    with pytest.raises(NotAnEdge):
        chain_label(parse("123"), parse("231"))


def test_is_increasing_examples():
    up = make_chain(P("123", "213", "231", "321"))
    assert up.labels == tuple(ValueTransposition(*t) for t in [(1, 2), (1, 3), (2, 3)])
    assert is_increasing(up)
    down = make_chain(P("123", "132", "312", "321"))
    assert down.labels[:2] == (ValueTransposition(2, 3), ValueTransposition(1, 3))
    assert not is_increasing(down)
    assert is_increasing(make_chain(P("4321")))


def test_make_chain_rejects_gaps():
    with pytest.raises(NotAnEdge):
        make_chain(P("123", "321"))


def test_flip_examples():
    c = make_chain(P("123", "132", "312", "321"))
    assert flip(c, 1).elements == tuple(P("123", "213", "312", "321"))
    c2 = make_chain(P("123", "213", "231", "321"))
    assert flip(c2, 2).elements == tuple(P("123", "213", "312", "321"))
    for chain in (c, c2):
        for i in (1, 2):
            assert flip(flip(chain, i), i) == chain
    with pytest.raises(IndexError):
        flip(c, 3)


def test_increasing_chain_examples():
    assert increasing_maximal_chain(parse("123"), parse("321")).elements == tuple(P("123", "213", "231", "321"))
    assert increasing_maximal_chain(parse("231"), parse("231")).elements == tuple(P("231"))
    chain = increasing_maximal_chain(parse("5431627"), parse("7461523"))
    assert len(chain) == 6 and is_increasing(chain)
    everything = list(maximal_chains(parse("5431627"), parse("7461523")))
    assert [c for c in everything if is_increasing(c)] == [chain]


@pytest.mark.parametrize("n", range(1, 5))
def test_unique_increasing_chain_in_every_interval(n):
    group = list(all_perms(n))
    for u, v in itertools.product(group, repeat=2):
        if bruhat_leq(u, v):
            chains = list(maximal_chains(u, v))
            increasing = [c for c in chains if is_increasing(c)]
            assert increasing == [increasing_maximal_chain(u, v)]
            assert lex_first_chain(u, v) == increasing[0]
            words = [c.labels for c in chains]
            assert words == sorted(words)


def test_rank_vectors():
    assert rank_vector(interval(parse("123"), parse("321"))) == [1, 2, 2, 1]
    assert rank_vector(interval(parse("2413"), parse("2413"))) == [1]
    assert is_rank_symmetric(interval(identity(4), longest(4)))


def test_report_shape():
    report = interval_report(interval(parse("123"), parse("321")))
    assert list(report) == ["bottom", "top", "size", "rank", "rank_vector"]
    assert report["bottom"] == "1,2,3" and report["size"] == 6


def networkx_self_dual(iv):
    graph = nx.DiGraph()
    graph.add_nodes_from(iv.members)
    for x in iv.members:
        graph.add_edges_from((x, y) for y in upper_covers(x) if y in iv.members)
    return nx.is_isomorphic(graph, graph.reverse(copy=True))


def test_self_dual_examples():
    assert is_self_dual(interval(parse("123"), parse("321")))
    assert is_self_dual(interval(parse("312"), parse("312")))


@pytest.mark.parametrize("n", range(1, 5))
def test_self_dual_matches_networkx(n):
    group = list(all_perms(n))
    for u, v in itertools.product(group, repeat=2):
        if bruhat_leq(u, v):
            iv = interval(u, v)
            assert is_self_dual(iv) == networkx_self_dual(iv), (u, v)


@settings(max_examples=30, deadline=None)
@given(perms(min_n=5, max_n=6), perms(min_n=5, max_n=6))
def test_self_dual_matches_networkx_sampled(u, v):
    if u.degree != v.degree or not bruhat_leq(u, v):
        return
    iv = interval(u, v)
    if len(iv) <= 200:
        assert is_self_dual(iv) == networkx_self_dual(iv)


def test_large_interval_not_self_dual():
    iv = interval(parse("654172839"), parse("958172634"))
    assert len(iv) == 96 and iv.rank == 9
    assert rank_vector(iv) == [1, 4, 9, 15, 19, 19, 15, 9, 4, 1]
    assert not is_self_dual(iv)
    assert not networkx_self_dual(iv)
