"""Independent brute-force oracles and instance builders for the tests.

Everything here deliberately avoids the package's own algorithms: margin
counts come from raw bitmask enumeration, friendly-path existence from a
path enumeration that recomputes friendliness through the inverse cousin
relation, and instances are assembled cell by cell.
"""

from __future__ import annotations

import numpy as np

from degswap import AlternatingCycle, BipartiteGraph
from degswap.core import allowed_swaps, apply_swap


def brute_margin_count(a, b) -> int:
    """Number of 0-1 matrices with row sums ``a`` and column sums ``b``,
    by enumerating all 2^(k*l) bitmasks (k*l <= 24)."""
    k, l = len(a), len(b)
    n = k * l
    if n > 24:
        raise ValueError("bitmask oracle limited to k*l <= 24")
    codes = np.arange(1 << n, dtype=np.int64)
    bits = (codes[:, None] >> np.arange(n)) & 1
    mats = bits.reshape(-1, k, l)
    ok_rows = (mats.sum(axis=2) == np.array(a)).all(axis=1)
    ok_cols = (mats.sum(axis=1) == np.array(b)).all(axis=1)
    return int((ok_rows & ok_cols).sum())


def brute_margin_matrices(a, b):
    """The matrices behind ``brute_margin_count`` as BipartiteGraph objects."""
    k, l = len(a), len(b)
    n = k * l
    codes = np.arange(1 << n, dtype=np.int64)
    bits = (codes[:, None] >> np.arange(n)) & 1
    mats = bits.reshape(-1, k, l)
    keep = ((mats.sum(axis=2) == np.array(a)).all(axis=1)
            & (mats.sum(axis=1) == np.array(b)).all(axis=1))
    return [BipartiteGraph(m.astype(np.uint8)) for m in mats[keep]]


def all_degree_pairs(max_k: int, max_l: int):
    """Every pair of non-increasing bounded degree lists with equal sums."""
    from itertools import combinations_with_replacement

    pairs = []
    for k in range(1, max_k + 1):
        for l in range(1, max_l + 1):
            seqs_a = [tuple(sorted(c, reverse=True))
                      for c in combinations_with_replacement(range(l + 1), k)]
            seqs_b = [tuple(sorted(c, reverse=True))
                      for c in combinations_with_replacement(range(k + 1), l)]
            by_sum = {}
            for sb in set(seqs_b):
                by_sum.setdefault(sum(sb), []).append(sb)
            for sa in set(seqs_a):
                for sb in by_sum.get(sum(sa), []):
                    pairs.append((sa, sb))
    return sorted(pairs)


# -- independent friendly-path oracle ---------------------------------------


def _oracle_cousins(pos, ell):
    """Same window as the package's cousin rule, but derived through the
    inverse relation: q is a cousin of p iff p lies in q's window."""
    out = []
    a, b = pos
    for qa in range(ell):
        for qb in range(ell):
            if (qb - qa) % ell < 2:
                continue
            # p is in the window of q when p's u-index is one of
            # {qb-1, qb} and p's v-index is one of {qa, qa+1}
            if (a - (qb - 1)) % ell in (0, 1) and (b - qa) % ell in (0, 1):
                out.append((qa, qb))
    return out


def friendly_path_exists(types: dict, ell: int) -> bool:
    """Exhaustive simple-path enumeration over friendly cells from the ring
    next to the main diagonal to the ring next to the small diagonal."""
    def friendly(p):
        return any(types[q] == types[p] for q in _oracle_cousins(p, ell))

    chords = [(a, b) for a in range(ell) for b in range(ell)
              if (b - a) % ell >= 2]
    fr = {p for p in chords if friendly(p)}
    starts = [p for p in fr if (p[1] - p[0]) % ell == ell - 1]
    goals = {p for p in fr if (p[1] - p[0]) % ell == 2}

    def dfs(p, visited):
        if p in goals:
            return True
        a, b = p
        for q in (((a + 1) % ell, b), ((a - 1) % ell, b),
                  (a, (b + 1) % ell), (a, (b - 1) % ell)):
            if q in fr and q not in visited:
                if dfs(q, visited | {q}):
                    return True
        return False

    return any(dfs(p, frozenset([p])) for p in starts)


# -- instance builders -------------------------------------------------------


def cycle_graph_pair(ell: int, types: dict):
    """Two realizations on ell + ell vertices differing in one alternating
    2*ell-cycle: the first holds the (t, t) edges, the second the
    (t, t+1 mod ell) edges, chords fixed to ``types`` in both."""
    adj_g = np.zeros((ell, ell), np.uint8)
    adj_h = np.zeros((ell, ell), np.uint8)
    for t in range(ell):
        adj_g[t, t] = 1
        adj_h[t, (t + 1) % ell] = 1
    for (a, b), ty in types.items():
        adj_g[a, b] = adj_h[a, b] = ty
    G, H = BipartiteGraph(adj_g), BipartiteGraph(adj_h)
    x_edges = frozenset((t, t) for t in range(ell))
    y_edges = frozenset((t, (t + 1) % ell) for t in range(ell))
    seq = []
    for t in range(ell):
        seq += [(t, t), (t, (t + 1) % ell)]
    return G, H, AlternatingCycle(tuple(seq), x_edges, y_edges)


def random_types(ell: int, rng, p: float) -> dict:
    return {(a, b): int(rng.random() < p)
            for a in range(ell) for b in range(ell) if (b - a) % ell >= 2}


def ring_blocker_types(ell: int, r0: int) -> dict:
    """All chords type 1 except ring ``r0``: that ring is unfriendly, wraps
    around, and cuts every path between the diagonals."""
    return {(a, b): 0 if (b - a) % ell == r0 else 1
            for a in range(ell) for b in range(ell) if (b - a) % ell >= 2}


def perturbed_environment(G, cycle_cells, pool, rng, tries: int = 30):
    """A realization differing from G only inside ``pool`` (a set of cells
    disjoint from the cycle), reached by a short random swap walk."""
    cur = G
    for _ in range(tries):
        moves = [s for s in allowed_swaps(cur)
                 if all((u, v) in pool
                        for u in (s.u1, s.u2) for v in (s.v1, s.v2))]
        if not moves:
            break
        cur = apply_swap(cur, moves[int(rng.integers(len(moves)))])
    return cur


def split_environment_pools(ell: int, cycle_cells, rng):
    """Randomly split the off-cycle cells into two disjoint pools, one for
    each side's environment perturbation."""
    rest = sorted({(a, b) for a in range(ell) for b in range(ell)} - set(cycle_cells))
    mask = rng.random(len(rest)) < 0.5
    pool_x = {c for c, m in zip(rest, mask) if m}
    pool_y = set(rest) - pool_x
    return pool_x, pool_y
