import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degswap import (BipartiteDegreeSequence, BipartiteGraph, NotGraphical, Swap,
                     allowed_swaps, apply_swap, greedy_realize, is_graphical,
                     push_up, symmetric_difference)
from degswap.errors import DegreeMismatch, ShapeMismatch, SwapNotAllowed

from oracles import brute_margin_count, all_degree_pairs


def bds(a, b):
    return BipartiteDegreeSequence(tuple(a), tuple(b))


def random_graph(seed, k=4, l=4, p=0.5):
    rng = np.random.default_rng(seed)
    return BipartiteGraph((rng.random((k, l)) < p).astype(np.uint8))


class TestDegreeSequence:
    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            bds((1, 2), (1, 1, 1))

    def test_rejects_oversized_degree(self):
        with pytest.raises(ValueError):
            bds((3,), (1, 1))

    def test_text_round_trip(self):
        ds = bds((2, 2, 2), (3, 2, 1))
        assert BipartiteDegreeSequence.from_text(ds.to_text()) == ds

    def test_semi_regular(self):
        assert bds((2, 2, 2), (3, 2, 1)).is_semi_regular()
        assert not bds((3, 2), (2, 2, 1)).is_semi_regular()


class TestGraphicality:
    def test_perfect_matching(self):
        assert is_graphical(bds((1, 1), (1, 1)))

    def test_sum_mismatch(self):
        assert not is_graphical(bds((2, 2), (1, 1)))

    def test_semi_regular_example(self):
        ds = bds((2, 2, 2), (3, 2, 1))
        assert is_graphical(ds)
        assert brute_margin_count(ds.a, ds.b) >= 1

    def test_agrees_with_brute_force(self):
        for a, b in all_degree_pairs(3, 3):
            ds = bds(a, b)
            assert is_graphical(ds) == (brute_margin_count(a, b) >= 1), (a, b)


class TestGreedyRealize:
    def test_matching_tie_break(self):
        g = greedy_realize(bds((1, 1), (1, 1)))
        assert g.adj.tolist() == [[1, 0], [0, 1]]

    def test_complete(self):
        g = greedy_realize(bds((3, 3, 3), (3, 3, 3)))
        assert g.adj.sum() == 9

    def test_margins(self):
        g = greedy_realize(bds((2, 2, 2), (3, 2, 1)))
        assert g.row_deg == (2, 2, 2) and g.col_deg == (3, 2, 1)

    def test_not_graphical_raises(self):
        with pytest.raises(NotGraphical):
            greedy_realize(bds((2, 2), (1, 1)))


class TestPushUp:
    def test_identity_case(self):
        g = BipartiteGraph([[1, 0], [0, 1]])
        h, swaps = push_up(g, 0)
        assert h == g and swaps == []

    def test_single_swap_example(self):
        g = BipartiteGraph([[0, 1], [1, 0]])
        h, swaps = push_up(g, 0)
        assert len(swaps) == 1
        assert h.adj[:, 0].tolist() == [1, 0]

    def test_swap_budget_and_target(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            g = BipartiteGraph((rng.random((4, 5)) < 0.5).astype(np.uint8))
            v = int(rng.integers(5))
            d = g.col_deg[v]
            h, swaps = push_up(g, v)
            assert len(swaps) <= d
            order = sorted(range(4), key=lambda u: (-g.row_deg[u], u))
            assert {u for u in range(4) if h.adj[u, v]} == set(order[:d])
            assert h.row_deg == g.row_deg and h.col_deg == g.col_deg


class TestSwaps:
    def test_complete_graph_has_none(self):
        assert allowed_swaps(BipartiteGraph([[1, 1], [1, 1]])) == []

    def test_matching_has_one(self):
        swaps = allowed_swaps(BipartiteGraph([[1, 0], [0, 1]]))
        assert swaps == [Swap(0, 1, 0, 1, 1)]

    def test_count_matches_submatrix_scan(self):
        from itertools import combinations
        for seed in range(30):
            g = random_graph(seed)
            count = 0
            for u1, u2 in combinations(range(g.k), 2):
                for v1, v2 in combinations(range(g.l), 2):
                    sub = g.adj[np.ix_([u1, u2], [v1, v2])]
                    if sub.sum() == 2 and sub[0, 0] == sub[1, 1]:
                        count += 1
            assert len(allowed_swaps(g)) == count

    def test_apply_matching(self):
        g = BipartiteGraph([[1, 0], [0, 1]])
        h = apply_swap(g, Swap(0, 1, 0, 1, 1))
        assert h.adj.tolist() == [[0, 1], [1, 0]]

    def test_not_allowed(self):
        with pytest.raises(SwapNotAllowed):
            apply_swap(BipartiteGraph([[1, 1], [1, 1]]), Swap(0, 1, 0, 1, 1))

    @given(st.integers(0, 10**6))
    @settings(max_examples=60, deadline=None)
    def test_involution_and_degrees(self, seed):
        g = random_graph(seed)
        for s in allowed_swaps(g):
            h = apply_swap(g, s)
            assert h.row_deg == g.row_deg and h.col_deg == g.col_deg
            assert apply_swap(h, s.inverse()) == g


class TestSymmetricDifference:
    def test_equal_graphs(self):
        g = random_graph(1)
        part = symmetric_difference(g, g)
        assert part.x_edges == frozenset() and part.y_edges == frozenset()

    def test_two_matchings(self):
        part = symmetric_difference(BipartiteGraph([[1, 0], [0, 1]]),
                                    BipartiteGraph([[0, 1], [1, 0]]))
        assert part.x_edges == {(0, 0), (1, 1)}
        assert part.y_edges == {(0, 1), (1, 0)}

    @given(st.integers(0, 10**6))
    @settings(max_examples=60, deadline=None)
    def test_vertex_balance(self, seed):
        g = random_graph(seed)
        h = g
        for _ in range(3):
            moves = allowed_swaps(h)
            if not moves:
                break
            h = apply_swap(h, moves[seed % len(moves)])
        part = symmetric_difference(g, h)
        for side, idx in {("u", u) for u in range(g.k)} | {("v", v) for v in range(g.l)}:
            xs = sum(1 for e in part.x_edges if e[0 if side == "u" else 1] == idx)
            ys = sum(1 for e in part.y_edges if e[0 if side == "u" else 1] == idx)
            assert xs == ys

    def test_errors(self):
        with pytest.raises(ShapeMismatch):
            symmetric_difference(random_graph(0, 2, 2), random_graph(0, 3, 3))
        with pytest.raises(DegreeMismatch):
            symmetric_difference(BipartiteGraph([[1, 0], [0, 0]]),
                                 BipartiteGraph([[0, 0], [0, 1]]))


class TestGraphText:
    def test_round_trip(self):
        g = random_graph(9)
        assert BipartiteGraph.from_text(g.to_text()) == g
        assert BipartiteGraph.from_text(g.to_text()).to_text() == g.to_text()

    def test_bad_row(self):
        with pytest.raises(ValueError):
            BipartiteGraph.from_text("1 2\n12\n")
