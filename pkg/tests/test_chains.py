import random

import pytest
from hypothesis import given, settings, strategies as st

from mader3ec.certificate import BRIDGE, DISCONNECTED
from mader3ec.chains import Kind, chain_decomposition, format_chains
from mader3ec.graph import MultiGraph
from mader3ec.oracle import brute_bridges, random_multigraph, connected_without


def test_triangle_single_chain():
    cd, cert = chain_decomposition(MultiGraph(3, [(0, 1), (1, 2), (2, 0)]))
    assert cert is None and cd.count == 1
    assert sorted(cd.chain_edges(1)) == [0, 1, 2]


def test_k23_two_chains(k23):
    cd, cert = chain_decomposition(k23)
    assert cert is None and cd.count == 2
    assert len(cd.chain_edges(1)) == 2 and len(cd.chain_edges(2)) == 1
    assert cd.kinds[1] == Kind.CYCLE and cd.kinds[2] == Kind.UNCLASSIFIED


def test_fig2_chains(fig2):
    cd, cert = chain_decomposition(fig2, 0)
    assert cert is None
    assert format_chains(cd).splitlines() == [
        "1 0 0 cycle -: 6 4 3 2 1 0",
        "2 0 5 unclassified 1: 7 5",
        "3 1 3 nested 1: 8",
        "4 2 6 interlacing 2: 9",
        "5 3 4 nested 1: 10",
    ]
    # the chain paths in 1-based figure labels
    labelled = [[(u + 1, v + 1) for u, v in (fig2.edges[e] for e in cd.chain_edges(c))] for c in range(1, 6)]
    assert labelled[0] == [(1, 6), (5, 6), (4, 5), (3, 4), (2, 3), (1, 2)]
    assert labelled[1] == [(1, 7), (6, 7)]


def test_bridge_between_triangles():
    g = MultiGraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
    _, cert = chain_decomposition(g)
    assert cert.kind == BRIDGE and cert.edges == (6,)


def test_disconnected_witness():
    g = MultiGraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    _, cert = chain_decomposition(g)
    assert cert.kind == DISCONNECTED and cert.vertex in (3, 4, 5)


def test_chain_count_law_and_partition(corpus):
    for g in corpus:
        cd, cert = chain_decomposition(g)
        if cert is not None:
            continue
        assert cd.count == g.m - g.n + 1
        seen = sorted(e for c in range(1, cd.count + 1) for e in cd.chain_edges(c))
        assert seen == list(range(g.m))


def test_parent_chain_is_smaller(corpus):
    for g in corpus[:200]:
        cd, cert = chain_decomposition(g)
        if cert is None:
            assert all(cd.parent[c] < c for c in range(2, cd.count + 1))


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 9), st.integers(0, 20), st.integers(0, 10**6))
def test_two_ec_check_matches_brute_force(n, extra, seed):
    rng = random.Random(seed)
    g = random_multigraph(n, n - 1 + extra, rng)
    root = rng.randrange(n)
    _, cert = chain_decomposition(g, root)
    connected = connected_without(g, set())
    bridges = brute_bridges(g) if connected else None
    if cert is None:
        assert connected and not bridges
    elif cert.kind == DISCONNECTED:
        assert not connected
    else:
        assert connected and cert.edges[0] in bridges


def test_interlacing_boundaries(corpus):
    # a chain whose source equals its parent's target or source is interlacing
    hits = {"src": 0, "dst": 0}
    for g in corpus:
        cd, cert = chain_decomposition(g)
        if cert is not None:
            continue
        for c in range(3, cd.count + 1):
            p = cd.parent[c]
            if cd.src[c] == cd.src[p]:
                hits["src"] += 1
                assert cd.kinds[c] == Kind.INTERLACING
            elif cd.src[c] == cd.dst[p]:
                hits["dst"] += 1
                assert cd.kinds[c] == Kind.INTERLACING
    assert hits["src"] > 0 and hits["dst"] > 0
