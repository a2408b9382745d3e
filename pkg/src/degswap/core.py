"""Bipartite degree sequences, graphs, swaps, and symmetric differences.

Conventions used throughout the package:

* The two vertex classes are U (size k) and V (size l).  A graph is stored
  as a dense k x l 0-1 biadjacency matrix, row u = U-vertex u, column
  v = V-vertex v, row 0 being u1.
* A degree sequence pair (a, b) lists the U degrees and the V degrees,
  both non-increasing.
* A swap exchanges a 2x2 one-factor of the biadjacency matrix for the
  complementary one-factor.  It is the elementary move of the Markov chain
  and preserves every vertex degree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegreeMismatch, NotGraphical, ShapeMismatch, SwapNotAllowed


@dataclass(frozen=True)
class BipartiteDegreeSequence:
    """A pair of non-increasing degree lists, one per vertex class.

    ``a`` holds the degrees of class U (length k), ``b`` the degrees of
    class V (length l).  Each U degree is at most l and each V degree at
    most k.  Equal degree sums are required for a realization to exist but
    are deliberately not enforced here; ``is_graphical`` decides that.
    """

    a: tuple
    b: tuple

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        b = tuple(int(x) for x in self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if not a or not b:
            raise ValueError("both degree lists must be non-empty")
        if any(x < 0 for x in a) or any(x < 0 for x in b):
            raise ValueError("degrees must be non-negative")
        if any(a[i] < a[i + 1] for i in range(len(a) - 1)):
            raise ValueError("U degrees must be non-increasing")
        if any(b[j] < b[j + 1] for j in range(len(b) - 1)):
            raise ValueError("V degrees must be non-increasing")
        if a[0] > len(b):
            raise ValueError("a U degree exceeds the size of class V")
        if b[0] > len(a):
            raise ValueError("a V degree exceeds the size of class U")

    @property
    def k(self) -> int:
        return len(self.a)

    @property
    def l(self) -> int:
        return len(self.b)

    def sums_match(self) -> bool:
        return sum(self.a) == sum(self.b)

    def is_semi_regular(self) -> bool:
        """True when one class has all degrees equal."""
        return len(set(self.a)) == 1 or len(set(self.b)) == 1

    def to_text(self) -> str:
        return " ".join(map(str, self.a)) + "\n" + " ".join(map(str, self.b)) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BipartiteDegreeSequence":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 2:
            raise ValueError("degree sequence text needs exactly two non-empty lines")
        a = tuple(int(t) for t in lines[0].split())
        b = tuple(int(t) for t in lines[1].split())
        return cls(a, b)


@dataclass(frozen=True)
class Swap:
    """A 4-vertex edge exchange, canonicalized with u1 < u2 and v1 < v2.

    ``orientation`` is 1 when the edges present before the swap are
    (u1, v1) and (u2, v2), and 2 when they are (u1, v2) and (u2, v1).
    """

    u1: int
    u2: int
    v1: int
    v2: int
    orientation: int

    def __post_init__(self):
        if not (self.u1 < self.u2 and self.v1 < self.v2):
            raise ValueError("swap indices must satisfy u1 < u2 and v1 < v2")
        if self.orientation not in (1, 2):
            raise ValueError("orientation must be 1 or 2")

    @classmethod
    def on(cls, ua: int, ub: int, va: int, vb: int, orientation_for_sorted=None,
           graph: "BipartiteGraph | None" = None) -> "Swap":
        """Build a canonical swap on the four given vertices.

        When ``graph`` is given the orientation is read off its biadjacency
        matrix (the diagonal holding the edges).
        """
        u1, u2 = sorted((ua, ub))
        v1, v2 = sorted((va, vb))
        if graph is not None:
            if graph.adj[u1, v1] and graph.adj[u2, v2]:
                ori = 1
            elif graph.adj[u1, v2] and graph.adj[u2, v1]:
                ori = 2
            else:
                raise SwapNotAllowed(f"no diagonal of ({u1},{u2};{v1},{v2}) carries both edges")
        else:
            ori = orientation_for_sorted
        return cls(u1, u2, v1, v2, ori)

    def inverse(self) -> "Swap":
        return Swap(self.u1, self.u2, self.v1, self.v2, 3 - self.orientation)

    def touches(self, u: int, v: int) -> bool:
        return u in (self.u1, self.u2) and v in (self.v1, self.v2)


@dataclass(frozen=True)
class EdgePartition:
    """The symmetric difference of two graphs, split into X-edges and Y-edges."""

    x_edges: frozenset
    y_edges: frozenset


class BipartiteGraph:
    """A simple bipartite graph held as a dense 0-1 biadjacency matrix.

    Instances are immutable; all mutations go through copies.  ``key()``
    returns a hashable canonical form (the raw bytes of the matrix).
    """

    __slots__ = ("adj", "k", "l", "row_deg", "col_deg", "_key")

    def __init__(self, adj):
        arr = np.array(adj, dtype=np.uint8)
        if arr.ndim != 2:
            raise ValueError("biadjacency matrix must be two-dimensional")
        if not np.isin(arr, (0, 1)).all():
            raise ValueError("biadjacency entries must be 0 or 1")
        arr.setflags(write=False)
        self.adj = arr
        self.k, self.l = arr.shape
        self.row_deg = tuple(int(x) for x in arr.sum(axis=1))
        self.col_deg = tuple(int(x) for x in arr.sum(axis=0))
        self._key = arr.tobytes()

    # -- identity ---------------------------------------------------------

    def key(self) -> bytes:
        return self._key

    def __eq__(self, other) -> bool:
        return (isinstance(other, BipartiteGraph) and self.k == other.k
                and self.l == other.l and self._key == other._key)

    def __hash__(self) -> int:
        return hash((self.k, self.l, self._key))

    def __repr__(self) -> str:
        return f"BipartiteGraph({self.k}x{self.l}, e={sum(self.row_deg)})"

    # -- queries ----------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def edges(self):
        us, vs = np.nonzero(self.adj)
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    def num_edges(self) -> int:
        return int(self.adj.sum())

    def bd(self) -> BipartiteDegreeSequence:
        """The degree sequence pair, sorted non-increasing."""
        return BipartiteDegreeSequence(tuple(sorted(self.row_deg, reverse=True)),
                                       tuple(sorted(self.col_deg, reverse=True)))

    def same_margins(self, other: "BipartiteGraph") -> bool:
        return (self.k == other.k and self.l == other.l
                and self.row_deg == other.row_deg and self.col_deg == other.col_deg)

    def swap_is_allowed(self, s: Swap) -> bool:
        a = self.adj
        if s.orientation == 1:
            return bool(a[s.u1, s.v1] and a[s.u2, s.v2]
                        and not a[s.u1, s.v2] and not a[s.u2, s.v1])
        return bool(a[s.u1, s.v2] and a[s.u2, s.v1]
                    and not a[s.u1, s.v1] and not a[s.u2, s.v2])

    # -- construction -----------------------------------------------------

    def with_edges(self, removals, additions) -> "BipartiteGraph":
        arr = self.adj.copy()
        arr.setflags(write=True)
        for (u, v) in removals:
            arr[u, v] = 0
        for (u, v) in additions:
            arr[u, v] = 1
        return BipartiteGraph(arr)

    # -- text format ------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.k} {self.l}"]
        for u in range(self.k):
            lines.append("".join("1" if self.adj[u, v] else "0" for v in range(self.l)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BipartiteGraph":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty graph text")
        k, l = (int(t) for t in lines[0].split())
        if len(lines) != k + 1:
            raise ValueError(f"expected {k} matrix rows, found {len(lines) - 1}")
        rows = []
        for ln in lines[1:]:
            if len(ln) != l or set(ln) - {"0", "1"}:
                raise ValueError(f"bad matrix row {ln!r}")
            rows.append([int(c) for c in ln])
        return cls(np.array(rows, dtype=np.uint8))


# -- realization --------------------------------------------------------------


def greedy_realize(ds: BipartiteDegreeSequence) -> BipartiteGraph:
    """Build a realization of ``ds`` greedily, or raise ``NotGraphical``.

    V-vertices are satisfied in non-increasing degree order; each one is
    connected to the U-vertices with the largest remaining capacity, ties
    broken by lowest index.  Getting stuck proves non-graphicality, so this
    doubles as the graphicality test.
    """
    if not ds.sums_match():
        raise NotGraphical(
            f"degree sums differ: sum(a)={sum(ds.a)} vs sum(b)={sum(ds.b)}")
    k, l = ds.k, ds.l
    adj = np.zeros((k, l), dtype=np.uint8)
    cap = list(ds.a)
    for j in range(l):
        d = ds.b[j]
        if d == 0:
            continue
        order = sorted(range(k), key=lambda u: (-cap[u], u))
        chosen = order[:d]
        if cap[chosen[-1]] == 0:
            raise NotGraphical(f"cannot satisfy V-vertex {j} with degree {d}")
        for u in chosen:
            adj[u, j] = 1
            cap[u] -= 1
    if any(cap):
        raise NotGraphical("leftover capacity after placing all V-vertices")
    return BipartiteGraph(adj)


def is_graphical(ds: BipartiteDegreeSequence) -> bool:
    """True iff a simple bipartite realization of ``ds`` exists."""
    try:
        greedy_realize(ds)
        return True
    except NotGraphical:
        return False


# -- swaps ---------------------------------------------------------------------


def apply_swap(G: BipartiteGraph, s: Swap) -> BipartiteGraph:
    """Apply an allowed swap, returning the new realization."""
    if not G.swap_is_allowed(s):
        raise SwapNotAllowed(f"{s} is not allowed in this graph")
    if s.orientation == 1:
        rem = [(s.u1, s.v1), (s.u2, s.v2)]
        add = [(s.u1, s.v2), (s.u2, s.v1)]
    else:
        rem = [(s.u1, s.v2), (s.u2, s.v1)]
        add = [(s.u1, s.v1), (s.u2, s.v2)]
    return G.with_edges(rem, add)


def allowed_swaps(G: BipartiteGraph) -> list:
    """All swaps allowed in G, in canonical (u1, u2, v1, v2) order."""
    out = []
    a = G.adj
    for u1 in range(G.k):
        for u2 in range(u1 + 1, G.k):
            diff = a[u1] ^ a[u2]
            cols = np.nonzero(diff)[0]
            ones = [int(v) for v in cols if a[u1, v]]
            zeros = [int(v) for v in cols if not a[u1, v]]
            for v_one in ones:
                for v_zero in zeros:
                    v1, v2 = sorted((v_one, v_zero))
                    ori = 1 if a[u1, v1] else 2
                    out.append(Swap(u1, u2, v1, v2, ori))
    out.sort(key=lambda s: (s.u1, s.u2, s.v1, s.v2))
    return out


def count_allowed_swaps(G: BipartiteGraph) -> int:
    """Number of allowed swaps, without materializing them."""
    total = 0
    a = G.adj.astype(np.int64)
    for u1 in range(G.k):
        for u2 in range(u1 + 1, G.k):
            ones = int(((a[u1] == 1) & (a[u2] == 0)).sum())
            zeros = int(((a[u1] == 0) & (a[u2] == 1)).sum())
            total += ones * zeros
    return total


def push_up(G: BipartiteGraph, v: int, active_cols=None):
    """Rewire so the neighborhood of V-vertex ``v`` is the d(v) largest-degree
    U-vertices, using at most d(v) swaps.

    Ties in the U ordering break by lowest index.  ``active_cols`` restricts
    the columns the pigeonhole witness may come from (used by the recursive
    transformation, which deletes columns as it goes); degrees are counted
    inside the active columns only.

    Returns (new graph, list of swaps applied, in order).
    """
    if active_cols is None:
        active_cols = list(range(G.l))
    active = sorted(active_cols)
    if v not in active:
        raise ValueError(f"column {v} is not active")
    arr = G.adj.copy()
    arr.setflags(write=True)
    deg = {u: int(arr[u, active].sum()) for u in range(G.k)}
    d = int(arr[:, v].sum())
    order = sorted(range(G.k), key=lambda u: (-deg[u], u))
    targets = order[:d]
    target_set = set(targets)
    swaps = []
    for _ in range(d + 1):
        missing = [u for u in targets if not arr[u, v]]
        if not missing:
            break
        u = missing[0]
        nbrs = [u2 for u2 in range(G.k) if arr[u2, v] and u2 not in target_set]
        u_prime = min(nbrs)
        v_prime = min(v2 for v2 in active
                      if v2 != v and arr[u, v2] and not arr[u_prime, v2])
        g = BipartiteGraph(arr)
        s = Swap.on(u, u_prime, v, v_prime, graph=g)
        swaps.append(s)
        arr[u, v], arr[u_prime, v] = 1, 0
        arr[u, v_prime], arr[u_prime, v_prime] = 0, 1
    else:
        raise AssertionError("push_up failed to converge within d(v) swaps")
    return BipartiteGraph(arr), swaps


# -- symmetric difference ------------------------------------------------------


def symmetric_difference(X: BipartiteGraph, Y: BipartiteGraph) -> EdgePartition:
    """Split E(X) xor E(Y) into X-edges and Y-edges.

    Requires equal shapes and equal per-vertex margins; under that condition
    every vertex touches as many X-edges as Y-edges.
    """
    if (X.k, X.l) != (Y.k, Y.l):
        raise ShapeMismatch(f"{X.k}x{X.l} vs {Y.k}x{Y.l}")
    if not X.same_margins(Y):
        raise DegreeMismatch("graphs do not share their degree vectors")
    x_only = np.nonzero((X.adj == 1) & (Y.adj == 0))
    y_only = np.nonzero((X.adj == 0) & (Y.adj == 1))
    x_edges = frozenset((int(u), int(v)) for u, v in zip(*x_only))
    y_edges = frozenset((int(u), int(v)) for u, v in zip(*y_only))
    return EdgePartition(x_edges, y_edges)
