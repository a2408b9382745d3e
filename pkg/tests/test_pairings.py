import numpy as np
import pytest

from degswap import (BipartiteGraph, all_pairings, circuits_of, cycles_of,
                     decompose, enumerate_pairings_count, random_pairing,
                     symmetric_difference)
from degswap.core import allowed_swaps, apply_swap

# symmetric difference: two 4-cycles sharing U-vertex 0
FIG8_X = BipartiteGraph([[1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
FIG8_Y = BipartiteGraph([[0, 1, 0, 1], [1, 0, 0, 0], [0, 0, 1, 0]])

M1 = BipartiteGraph([[1, 0], [0, 1]])
M2 = BipartiteGraph([[0, 1], [1, 0]])


def test_count_identity():
    assert enumerate_pairings_count(M1, M1) == 1


def test_count_single_cycle():
    assert enumerate_pairings_count(M1, M2) == 1


def test_count_figure_eight():
    assert enumerate_pairings_count(FIG8_X, FIG8_Y) == 2


def test_all_pairings_matches_count():
    assert len(list(all_pairings(FIG8_X, FIG8_Y))) == 2
    assert len(list(all_pairings(M1, M2))) == 1


def test_pairing_domain_is_symmetric_difference():
    part = symmetric_difference(FIG8_X, FIG8_Y)
    for s in all_pairings(FIG8_X, FIG8_Y):
        assert s.domain() == part.x_edges | part.y_edges


def test_random_pairing_deterministic():
    s1 = random_pairing(FIG8_X, FIG8_Y, seed=3)
    s2 = random_pairing(FIG8_X, FIG8_Y, seed=3)
    assert s1.maps == s2.maps


def test_single_cycle_circuit():
    s = next(all_pairings(M1, M2))
    circuits = circuits_of(s)
    assert len(circuits) == 1 and len(circuits[0]) == 4


def test_figure_eight_both_pairings():
    shapes = set()
    for s in all_pairings(FIG8_X, FIG8_Y):
        shapes.add(tuple(sorted(len(c) for c in circuits_of(s))))
    assert shapes == {(4, 4), (8,)}


def test_cycles_partition_circuit():
    for s in all_pairings(FIG8_X, FIG8_Y):
        for circ in circuits_of(s):
            cycles = cycles_of(circ, s.x_edges)
            assert sum(len(c) for c in cycles) == len(circ)
            edges = [e for c in cycles for e in c.edge_seq]
            assert sorted(edges) == sorted(circ)


def test_figure_eight_long_circuit_splits():
    for s in all_pairings(FIG8_X, FIG8_Y):
        circuits = circuits_of(s)
        if len(circuits) == 1:
            cycles = cycles_of(circuits[0], s.x_edges)
            assert sorted(len(c) for c in cycles) == [4, 4]


def test_decompose_covers_difference_randomized():
    rng = np.random.default_rng(11)
    for _ in range(25):
        g = BipartiteGraph((rng.random((4, 4)) < 0.5).astype(np.uint8))
        h = g
        for _ in range(6):
            moves = allowed_swaps(h)
            if not moves:
                break
            h = apply_swap(h, moves[int(rng.integers(len(moves)))])
        s = random_pairing(g, h, seed=int(rng.integers(10**6)))
        dec = decompose(g, h, s)
        part = symmetric_difference(g, h)
        covered = [e for c in dec.cycles for e in c.edge_seq]
        assert sorted(covered) == sorted(part.x_edges | part.y_edges)
        assert len(list(all_pairings(g, h))) == enumerate_pairings_count(g, h)


def test_cycle_walk_alternates():
    for s in all_pairings(FIG8_X, FIG8_Y):
        for c in decompose(FIG8_X, FIG8_Y, s).cycles:
            assert c.edge_seq[0] == min(c.x_edges)
            n = len(c.edge_seq)
            for t in range(n):
                e, f = c.edge_seq[t], c.edge_seq[(t + 1) % n]
                assert (e in c.x_edges) != (f in c.x_edges)
            assert len(set(c.vertex_seq())) == n
