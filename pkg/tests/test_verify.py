import itertools
import random

import pytest

from mader3ec.certificate import Certificate
from mader3ec.graph import MultiGraph
from mader3ec.greedy import run_greedy
from mader3ec.linear import run
from mader3ec.oracle import is_3ec, random_3ec
from mader3ec.verify import verify_certificate, verify_cut, verify_disconnected, verify_mader

from conftest import cycle, wheel
from mutations import mutate_mader


def test_cycle_every_pair_is_a_cut():
    c4 = cycle(4)
    for pair in itertools.combinations(range(4), 2):
        assert verify_cut(c4, pair)


def test_k4_has_no_two_cut(k4):
    for pair in itertools.combinations(range(6), 2):
        assert not verify_cut(k4, pair)


def test_two_k4_joining_pair(two_k4):
    assert verify_cut(two_k4, (12, 13))
    assert not verify_cut(two_k4, (0, 13))


def test_cut_rejects_bad_ids(k4):
    assert verify_cut(k4, (0, 0)).check == "cut"
    assert not verify_cut(k4, (0, 17))


def test_disconnected_witness():
    g = MultiGraph(4, [(0, 1)] * 3 + [(2, 3)])
    assert verify_disconnected(g, 2)
    assert not verify_disconnected(MultiGraph(2, [(0, 1)] * 3), 1)


def test_fig2_linear_output(fig2):
    assert verify_certificate(fig2, run(fig2, 0))


def test_k23_base():
    g = MultiGraph(2, [(0, 1)] * 3)
    assert verify_mader(g, Certificate.mader([(1, [0, 1]), (2, [2])]))
    assert not verify_mader(g, Certificate.mader([(1, [0, 1, 2])]))


def test_swapped_paths_fail_ear_check(fig2):
    cert = run(fig2, 0)
    paths = list(cert.paths)
    paths[-1], paths[-2] = paths[-2], paths[-1]
    verdict = verify_mader(fig2, Certificate.mader(paths))
    # C3 before C5 is required: C5 ends on figure vertex 4, which only C3 makes branch
    assert not verdict and verdict.check == "ear"


def test_malformed_sequences(fig2):
    cert = run(fig2, 0)
    paths = [list(p) for _, p in cert.paths]
    unknown = [p[:] for p in paths]
    unknown[2].append(99)
    assert verify_mader(fig2, Certificate.mader(enumerate(unknown))).check == "partition"
    dup = [p[:] for p in paths]
    dup[3].append(dup[2][0])
    assert verify_mader(fig2, Certificate.mader(enumerate(dup))).check == "partition"


def test_low_degree_graph_rejected():
    g = MultiGraph(3, [(0, 1), (1, 2), (2, 0)])
    assert verify_mader(g, Certificate.mader([(1, [0, 1]), (2, [2])])).check == "degree"


def test_wheel(w5):
    assert verify_certificate(w5, run_greedy(w5))


def test_closed_path_at_cut_vertex():
    # two K_2^3 blocks glued at vertex 0: 3-edge-connected, second block enters as a closed path
    g = MultiGraph(3, [(0, 1)] * 3 + [(0, 2)] * 3)
    cert = run(g)
    assert cert.is_mader and verify_certificate(g, cert)


def test_verdict_text():
    g = MultiGraph(2, [(0, 1)] * 3)
    bad = verify_mader(g, Certificate.mader([(1, [0]), (2, [1])]))
    assert not bad and str(bad).startswith("invalid (partition)")
    assert str(verify_cut(cycle(3), (0, 1))) == "valid"


@pytest.mark.parametrize("seed", range(10))
def test_mutations_never_accepted_unsoundly(seed):
    rng = random.Random(seed)
    g = random_3ec(rng.randint(3, 9), seed)
    cert = run(g)
    assert verify_certificate(g, cert)
    for _ in range(100):
        g2, c2 = mutate_mader(g, cert, rng)
        if verify_mader(g2, c2):
            assert is_3ec(g2)


def test_valid_sequences_for_larger_wheels():
    for k in range(3, 12):
        g = wheel(k)
        assert verify_certificate(g, run(g)) and verify_certificate(g, run_greedy(g))
