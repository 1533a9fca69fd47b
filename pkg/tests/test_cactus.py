import random

import pytest
from hypothesis import given, settings, strategies as st

from mader3ec.cactus import (
    Cactus,
    CactusFormatError,
    NotTwoEdgeConnected,
    blob_certificates,
    build_cactus,
    contact_blocks,
    cut_blocks,
    read_blob_certificates,
    three_edge_components,
    verify_cactus,
    write_blob_certificates,
)
from mader3ec.certificate import BRIDGE
from mader3ec.chains import chain_decomposition
from mader3ec.graph import MultiGraph
from mader3ec.oracle import brute_three_components, brute_two_cuts, connected_without, brute_bridges, random_multigraph

from conftest import cycle
from mutations import mutate_cactus

FIG5_SPANS = [(2, 4), (6, 8), (9, 14), (10, 11), (12, 13)]


class StubCoords:
    chain = 7

    def edge_at(self, q):
        return q


def certified(g):
    cx = build_cactus(g)
    return cx, blob_certificates(g, cx)


def test_fig5_contact_blocks():
    assert contact_blocks(FIG5_SPANS) == [[(2, 4)], [(6, 8), (9, 14)], [(10, 11), (12, 13)]]
    assert [b.edges for b in cut_blocks(StubCoords(), FIG5_SPANS)] == [[1, 4], [5, 8, 14], [9, 11, 13]]


def test_contact_blocks_order_free():
    shuffled = FIG5_SPANS[::-1]
    assert contact_blocks(shuffled) == contact_blocks(FIG5_SPANS)
    assert contact_blocks([]) == []


def test_fig6(fig6):
    cx = build_cactus(fig6)
    assert cx.blobs == [[0, 8], [1, 4, 5, 9], [2, 3], [6, 7]]
    # a, f, h are path edges 0, 5, 7; b, d are 1, 3
    assert sorted(sorted(c) for c in cx.cycle_edges()) == [[0, 5, 7], [1, 3]]
    assert verify_cactus(fig6, cx, blob_certificates(fig6, cx))


def test_three_edge_connected_is_one_blob(k4):
    cx = build_cactus(k4)
    assert cx.blobs == [[0, 1, 2, 3]] and cx.cedges == [] and cx.cycles == 0


def test_cycle_uses_degree_two_gadget():
    g = cycle(5)
    cx = build_cactus(g)
    assert cx.blobs == [[v] for v in range(5)]
    assert cx.cycles == 1 and sorted(cx.cycle_edges()[0]) == [0, 1, 2, 3, 4]
    assert verify_cactus(g, cx, {})


def test_two_k4(two_k4):
    cx = build_cactus(two_k4)
    assert three_edge_components(cx) == [[0, 1, 2, 3], [4, 5, 6, 7]]
    assert cx.cut_pairs() == {(12, 13)}


def test_bridge_raises():
    g = MultiGraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
    with pytest.raises(NotTwoEdgeConnected) as info:
        build_cactus(g)
    assert info.value.certificate.kind == BRIDGE


def test_text_round_trip(fig6):
    cx = build_cactus(fig6)
    again = Cactus.from_text(cx.to_text())
    assert again == cx


@pytest.mark.parametrize("text", ["blob 1: 0 1\n", "blob 0: 0 x\n", "cedge 0 1 2\n", "hello\n"])
def test_bad_cactus_text(text):
    with pytest.raises(CactusFormatError):
        Cactus.from_text(text)


def test_blob_certificate_files(fig6, tmp_path):
    cx, certs = certified(fig6)
    write_blob_certificates(certs, tmp_path)
    assert read_blob_certificates(tmp_path, cx) == certs


def test_corpus_matches_brute_force(corpus):
    for g in corpus:
        _, cert = chain_decomposition(g)
        if cert is not None:
            continue
        cx, certs = certified(g)
        assert cx.cut_pairs() == set(brute_two_cuts(g))
        assert three_edge_components(cx) == brute_three_components(g)
        assert verify_cactus(g, cx, certs)


def two_ec(g):
    return connected_without(g, set()) and not brute_bridges(g)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 9), st.integers(0, 8), st.integers(0, 10**6))
def test_sparse_graphs_with_degree_two(n, extra, seed):
    rng = random.Random(seed)
    g = random_multigraph(n, n + extra, rng)
    if not two_ec(g):
        return
    cx = build_cactus(g, rng.randrange(n))
    assert cx.cut_pairs() == set(brute_two_cuts(g))
    assert three_edge_components(cx) == brute_three_components(g)
    assert verify_cactus(g, cx, blob_certificates(g, cx))


def test_structural_mutations_rejected(corpus, fig6, two_k4):
    rng = random.Random(8)
    fixtures = [fig6, two_k4, cycle(6)] + [g for g in corpus if chain_decomposition(g)[1] is None][:40]
    for g in fixtures:
        cx, certs = certified(g)
        for _ in range(20):
            bad = mutate_cactus(cx, rng)
            try:
                fresh = blob_certificates(g, bad)
            except (ValueError, IndexError, KeyError):
                fresh = {}
            assert not verify_cactus(g, bad, certs)
            assert not verify_cactus(g, bad, fresh)
