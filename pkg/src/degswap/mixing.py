"""Desk-scale ground truth: enumerated state spaces, exact kernels, spectra,
distance-to-uniform decay, and the congestion of the canonical path system.

Everything that feeds an inequality check is computed in exact rational
arithmetic; floating point only enters the eigensolver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .canonical import canonical_path, hat_matrix, switch_distance
from .chain import pair_count, transition_prob
from .core import (BipartiteDegreeSequence, BipartiteGraph, allowed_swaps,
                   apply_swap, greedy_realize)
from .errors import DegenerateChain, NonMixing, TooLarge, TooManyPairings
from .pairings import all_pairings, enumerate_pairings_count


@dataclass(frozen=True)
class StateSpace:
    """All realizations of a degree sequence, canonically ordered by the
    row-major bit string of the biadjacency matrix."""

    ds: BipartiteDegreeSequence
    states: tuple
    index: dict

    @property
    def n(self) -> int:
        return len(self.states)


def _brute_force_count(ds: BipartiteDegreeSequence) -> int:
    """Direct count of 0-1 matrices with the given margins, by rows."""
    from itertools import combinations

    k, l = ds.k, ds.l
    memo = {}

    def count_from(i, cols_left):
        if i == k:
            return 1 if all(c == 0 for c in cols_left) else 0
        key = (i, cols_left)
        if key in memo:
            return memo[key]
        total = 0
        d = ds.a[i]
        avail = [j for j in range(l) if cols_left[j] > 0]
        if len(avail) >= d:
            for pick in combinations(avail, d):
                nxt = list(cols_left)
                for j in pick:
                    nxt[j] -= 1
                total += count_from(i + 1, tuple(nxt))
        memo[key] = total
        return total

    return count_from(0, tuple(ds.b))


def enumerate_states(ds: BipartiteDegreeSequence, max_states: int = 10000) -> StateSpace:
    """Breadth-first enumeration of the realization space over allowed swaps.

    For small instances (k*l <= 20) the count is cross-validated against a
    direct enumeration of all 0-1 matrices with the prescribed margins.
    """
    start = greedy_realize(ds)
    seen = {start.key(): start}
    queue = [start]
    while queue:
        g = queue.pop()
        for s in allowed_swaps(g):
            h = apply_swap(g, s)
            if h.key() not in seen:
                if len(seen) >= max_states:
                    raise TooLarge(f"more than {max_states} realizations")
                seen[h.key()] = h
                queue.append(h)
    states = tuple(seen[key] for key in sorted(seen))
    if ds.k * ds.l <= 20:
        expected = _brute_force_count(ds)
        if expected != len(states):
            raise AssertionError(
                f"swap enumeration found {len(states)} states, direct count {expected}")
    return StateSpace(ds, states, {g.key(): i for i, g in enumerate(states)})


@dataclass(frozen=True)
class TransitionMatrix:
    """Exact rational kernel of the swap chain on an enumerated space."""

    entries: tuple
    jump: Fraction

    @property
    def n(self) -> int:
        return len(self.entries)

    def as_float(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.entries])


def build_kernel(space: StateSpace) -> TransitionMatrix:
    """The exact kernel; verifies symmetry, stochasticity, and that every
    off-diagonal entry equals the single jump probability."""
    n = space.n
    ds = space.ds
    q = Fraction(1, pair_count(ds.k) * pair_count(ds.l)) \
        if pair_count(ds.k) * pair_count(ds.l) else Fraction(1)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i, g in enumerate(space.states):
        moves = allowed_swaps(g)
        for s in moves:
            j = space.index[apply_swap(g, s).key()]
            rows[i][j] += q
        rows[i][i] = 1 - q * len(moves)
    for i in range(n):
        if sum(rows[i]) != 1:
            raise AssertionError(f"row {i} does not sum to one")
        for j in range(n):
            if rows[i][j] != rows[j][i]:
                raise AssertionError("kernel is not symmetric")
            if i != j and rows[i][j] not in (0, q):
                raise AssertionError("off-diagonal entry differs from the jump probability")
    return TransitionMatrix(tuple(tuple(r) for r in rows), q)


def spectral_gap(P: TransitionMatrix, tol: float = 1e-9, max_states: int = 2000):
    """Second-largest distinct eigenvalue and the relaxation time 1/(1 - l2).

    Eigenvalues within ``tol`` of each other count as one value, matching
    the convention of listing distinct eigenvalues in decreasing order.
    """
    if P.n < 2:
        raise DegenerateChain("need at least two states")
    if P.n > max_states:
        raise TooLarge(f"{P.n} states exceed the dense eigensolve guard {max_states}")
    mat = P.as_float()
    vals, vecs = np.linalg.eigh(mat)
    resid = np.abs(mat @ vecs - vecs * vals).max()
    if resid > 1e-10:
        raise AssertionError(f"eigensolver residual {resid:.2e} too large")
    ordered = sorted(vals, reverse=True)
    distinct = [ordered[0]]
    for v in ordered[1:]:
        if distinct[-1] - v > tol:
            distinct.append(v)
    if len(distinct) < 2:
        raise DegenerateChain("kernel has a single distinct eigenvalue")
    lam2 = distinct[1]
    if lam2 >= 1 - 1e-12:
        raise DegenerateChain("second eigenvalue is 1; the chain is disconnected")
    return lam2, 1.0 / (1.0 - lam2)


def distance_profile(P: TransitionMatrix, t: int):
    """max_x (1/2) max_y |P^t(y, x) - 1/N| as an exact rational."""
    n = P.n
    unif = Fraction(1, n)
    power = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    rows = [list(r) for r in P.entries]
    for _ in range(t):
        power = _mat_mul(power, rows)
    worst = Fraction(0)
    for x in range(n):
        col_worst = max(abs(power[y][x] - unif) for y in range(n))
        worst = max(worst, Fraction(col_worst, 2))
    return worst


def _mat_mul(A, B):
    n = len(A)
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for kk in range(n):
            a = Ai[kk]
            if a:
                Bk = B[kk]
                row = out[i]
                for j in range(n):
                    if Bk[j]:
                        row[j] += a * Bk[j]
    return out


def tv_mixing_time(P: TransitionMatrix, eps: float, t_max: int | None = None) -> int:
    """Smallest t whose distance to uniform stays at or below eps from t on.

    Monotone decay is verified by scanning ahead rather than assumed; a
    periodic chain that never settles raises ``NonMixing``.
    """
    n = P.n
    eps = Fraction(eps).limit_denominator(10**9)
    if t_max is None:
        try:
            _, tau = spectral_gap(P)
            t_max = int(40 * tau * math.log(n / float(eps))) + 50
        except DegenerateChain:
            t_max = 200
    unif = Fraction(1, n)
    rows = [list(r) for r in P.entries]
    power = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    candidate = None
    window = 0
    for t in range(t_max + 1):
        worst = Fraction(0)
        for x in range(n):
            col = max(abs(power[y][x] - unif) for y in range(n))
            worst = max(worst, Fraction(col, 2))
        if worst <= eps:
            if candidate is None:
                candidate = t
                window = 0
            else:
                window += 1
                if window >= max(10, candidate):
                    return candidate
        else:
            candidate = None
        power = _mat_mul(power, rows)
    if candidate is not None and window >= 3:
        return candidate
    raise NonMixing(f"distance to uniform never settles below {float(eps)} by t={t_max}")


@dataclass
class CongestionReport:
    kappa: Fraction
    max_edge: tuple
    edge_loading_max: Fraction
    n_paths: int
    max_switch_distance: int | None


def congestion(space: StateSpace, kernel: TransitionMatrix,
               max_states: int = 120, max_pairings: int = 5000,
               certify: bool = False, switch_cap: int = 6) -> CongestionReport:
    """The congestion constant of the full canonical path system.

    For every ordered pair (X, Y) and every pairing, the selected path is
    weighted by the fraction of pairings choosing it; each Markov-graph
    edge accumulates weight times the path's unit-cost sum 1/(T * pi).
    The maximum over edges upper-bounds the relaxation time.
    """
    n = space.n
    if n > max_states:
        raise TooLarge(f"{n} states exceed the congestion guard {max_states}")
    q = kernel.jump
    unit = Fraction(1, 1) / (q * Fraction(1, n))     # 1 / (T(z|w) pi(w))
    pi2 = Fraction(1, n * n)
    load = {}
    weight = {}
    n_paths = 0
    max_sd = 0
    for xi, X in enumerate(space.states):
        for yi, Y in enumerate(space.states):
            if xi == yi:
                continue
            t_total = enumerate_pairings_count(X, Y)
            if t_total > max_pairings:
                raise TooManyPairings(
                    f"{t_total} pairings exceed the guard {max_pairings}")
            counts = {}
            sd_memo = {}
            for s in all_pairings(X, Y):
                states = canonical_path(X, Y, s)
                ids = tuple(space.index[g.key()] for g in states)
                counts[ids] = counts.get(ids, 0) + 1
                if certify:
                    for g in states:
                        if g.key() not in sd_memo:
                            sd_memo[g.key()] = switch_distance(
                                hat_matrix(X, Y, g).cells, cap=switch_cap)
                        sd = sd_memo[g.key()]
                        if isinstance(sd, int):
                            max_sd = max(max_sd, sd)
                        else:
                            max_sd = max(max_sd, sd.cap + 1)
            for ids, c in counts.items():
                n_paths += 1
                prob = Fraction(c, t_total)
                edges = {tuple(sorted((ids[t], ids[t + 1])))
                         for t in range(len(ids) - 1)}
                cost = len(edges) * unit
                for e in edges:
                    load[e] = load.get(e, Fraction(0)) + pi2 * prob * cost
                    weight[e] = weight.get(e, Fraction(0)) + prob
    if not load:
        raise TooLarge("no paths; the space has a single state")
    max_edge = max(load, key=lambda e: (load[e], e))
    return CongestionReport(kappa=load[max_edge], max_edge=max_edge,
                            edge_loading_max=max(weight.values()),
                            n_paths=n_paths,
                            max_switch_distance=max_sd if certify else None)
