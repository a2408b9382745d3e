from fractions import Fraction

import pytest

from degswap import BipartiteDegreeSequence, BipartiteGraph
from degswap.errors import NonMixing, TooLarge
from degswap.mixing import (TransitionMatrix, build_kernel, congestion,
                            distance_profile, enumerate_states, spectral_gap,
                            tv_mixing_time)

from oracles import brute_margin_count


def bds(a, b):
    return BipartiteDegreeSequence(tuple(a), tuple(b))


class TestEnumeration:
    def test_two_matchings(self):
        assert enumerate_states(bds((1, 1), (1, 1))).n == 2

    def test_permutation_matrices(self):
        assert enumerate_states(bds((1, 1, 1), (1, 1, 1))).n == 6

    def test_semi_regular_instance(self):
        ds = bds((2, 2, 2), (3, 2, 1))
        assert enumerate_states(ds).n == brute_margin_count(ds.a, ds.b) == 3

    def test_too_large_guard(self):
        with pytest.raises(TooLarge):
            enumerate_states(bds((2, 2, 2, 2), (2, 2, 2, 2)), max_states=10)

    def test_canonical_order(self):
        space = enumerate_states(bds((1, 1, 1), (1, 1, 1)))
        keys = [g.key() for g in space.states]
        assert keys == sorted(keys)


class TestKernel:
    def test_degenerate_two_state(self):
        K = build_kernel(enumerate_states(bds((1, 1), (1, 1))))
        assert K.entries == ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0)))

    def test_uniform_is_stationary(self):
        K = build_kernel(enumerate_states(bds((2, 2, 2), (3, 2, 1))))
        n = K.n
        for j in range(n):
            assert sum(K.entries[i][j] for i in range(n)) == 1

    def test_row_sums(self):
        K = build_kernel(enumerate_states(bds((2, 2, 1), (2, 2, 1))))
        for row in K.entries:
            assert sum(row) == 1


class TestSpectralGap:
    def test_two_state_flip(self):
        K = build_kernel(enumerate_states(bds((1, 1), (1, 1))))
        lam2, tau = spectral_gap(K)
        assert abs(lam2 + 1) < 1e-12
        assert abs(tau - 0.5) < 1e-12

    def test_uniform_jump_closed_form(self):
        n = 5
        entries = tuple(tuple(Fraction(1, n) for _ in range(n)) for _ in range(n))
        lam2, tau = spectral_gap(TransitionMatrix(entries, Fraction(1, n)))
        assert abs(lam2) < 1e-12 and abs(tau - 1.0) < 1e-12

    def test_semi_regular_gap(self):
        K = build_kernel(enumerate_states(bds((2, 2, 2), (3, 2, 1))))
        lam2, tau = spectral_gap(K)
        assert lam2 < 1
        assert tau >= 1

    def test_eigensolve_guard(self):
        K = build_kernel(enumerate_states(bds((1, 1, 1), (1, 1, 1))))
        with pytest.raises(TooLarge):
            spectral_gap(K, max_states=3)


class TestMixingTime:
    def test_flip_chain_never_mixes(self):
        K = build_kernel(enumerate_states(bds((1, 1), (1, 1))))
        with pytest.raises(NonMixing):
            tv_mixing_time(K, 0.01)

    def test_loose_epsilon_is_zero(self):
        K = build_kernel(enumerate_states(bds((2, 2, 2), (3, 2, 1))))
        assert tv_mixing_time(K, 0.5) == 0

    def test_finite_mixing(self):
        K = build_kernel(enumerate_states(bds((2, 2, 2), (3, 2, 1))))
        t = tv_mixing_time(K, 0.01)
        assert t > 0
        assert distance_profile(K, t) <= Fraction(1, 100)
        assert distance_profile(K, t - 1) > Fraction(1, 100)


class TestSamplerUniformity:
    def test_chi_square_on_permutation_space(self):
        from scipy import stats

        from degswap import sample

        ds = bds((1, 1, 1), (1, 1, 1))
        space = enumerate_states(ds)
        counts = [0] * space.n
        for i in range(10_000):
            g = sample(ds, 200, seed=777_000 + i)
            counts[space.index[g.key()]] += 1
        _, p = stats.chisquare(counts)
        assert p > 0.01, counts


class TestCongestion:
    def test_two_state_closed_form(self):
        space = enumerate_states(bds((1, 1), (1, 1)))
        rep = congestion(space, build_kernel(space))
        assert rep.kappa == 1
        assert rep.edge_loading_max == 2

    def test_relaxation_bounded_by_congestion(self):
        for a, b in (((1, 1, 1), (1, 1, 1)), ((2, 2, 2), (3, 2, 1))):
            space = enumerate_states(bds(a, b))
            K = build_kernel(space)
            _, tau = spectral_gap(K)
            rep = congestion(space, K)
            assert tau <= float(rep.kappa) + 1e-8

    def test_guard(self):
        space = enumerate_states(bds((1, 1, 1), (1, 1, 1)))
        with pytest.raises(TooLarge):
            congestion(space, build_kernel(space), max_states=2)
