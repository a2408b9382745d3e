import pytest

from degswap import BipartiteDegreeSequence, BipartiteGraph, Unreachable, ryser_sequence, swap_distance
from degswap.errors import DegreeMismatch
from degswap.mixing import enumerate_states
from degswap.ryser import replay

M1 = BipartiteGraph([[1, 0], [0, 1]])
M2 = BipartiteGraph([[0, 1], [1, 0]])


def test_equal_graphs_empty_sequence():
    assert ryser_sequence(M1, M1) == []
    assert swap_distance(M1, M1) == 0


def test_two_matchings():
    seq = ryser_sequence(M1, M2)
    assert len(seq) <= 4
    assert replay(M1, seq)[-1] == M2
    assert swap_distance(M1, M2) == 1


def test_all_pairs_of_semi_regular_instance():
    space = enumerate_states(BipartiteDegreeSequence((2, 2, 2), (3, 2, 1)))
    e = space.states[0].num_edges()
    for X in space.states:
        for Y in space.states:
            seq = ryser_sequence(X, Y)
            states = replay(X, seq)
            assert states[-1] == Y
            assert len(seq) <= 2 * e
            # every prefix keeps the margins
            for g in states:
                assert g.row_deg == X.row_deg and g.col_deg == X.col_deg
            d = swap_distance(X, Y)
            assert isinstance(d, int) and d <= len(seq)


def test_distance_never_exceeds_construction():
    space = enumerate_states(BipartiteDegreeSequence((2, 2, 1), (2, 2, 1)))
    for X in space.states:
        for Y in space.states:
            assert swap_distance(X, Y) <= len(ryser_sequence(X, Y))


def test_unreachable_cap():
    assert swap_distance(M1, M2, cap=0) == Unreachable(0)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        ryser_sequence(M1, BipartiteGraph([[1, 1], [0, 0]]))
    with pytest.raises(DegreeMismatch):
        swap_distance(M1, BipartiteGraph([[1, 1], [0, 0]]))
