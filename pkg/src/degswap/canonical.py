"""Canonical swap paths along alternating cycles.

The construction works on a cycle-local view.  An alternating cycle of
length 2m is written with local indices so that edge (u_t, v_t) belongs to
the start realization G and edge (u_t, v_{t+1}) (indices mod m) to the end
realization G'.  The m x m matrix over the cycle's vertex pairs then has
the G-edges on the main diagonal, the G'-edges on the diagonal above it
plus the wrap corner (the small diagonal), and chords everywhere else.
Chords carry the same value in G and G'; that shared value is the chord's
type.

The F view of an intermediate realization Z stores Z's value at diagonal
positions and M_G + M_G' + M_Z at chords, so chord cells read 0 or 2 when
the chord is off in Z and 1 or 3 when it is on, with type = value >= 2.

A path from G to G' is driven by a friendly path: a sequence of chords,
each having a same-type cousin, stepping one grid cell at a time from the
ring next to the main diagonal to the ring next to the small diagonal.
Each chord on it anchors an intermediate target realization (an OK or KO
pattern); consecutive targets differ in one short alternating cycle and
are bridged by swap sequences.  When no friendly path exists the blocking
structure forces a long same-type run on some anti-diagonal, which lets
the cycle be cut into two smaller cycles handled recursively, with the two
sub-sequences interleaved so that at most two temporarily wrong cells are
live at any moment.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import (BipartiteDegreeSequence, BipartiteGraph, Swap, apply_swap,
                   is_graphical, symmetric_difference)
from .errors import (CycleMismatch, DegreeMismatch, DiagonalPosition, Exceeds,
                     MarginMismatch, NoCousinWitness, PairingMismatch,
                     PreconditionViolation, ShapeMismatch, SpecViolation,
                     TooManyPairings)
from .pairings import AlternatingCycle, all_pairings, decompose, enumerate_pairings_count
from .ryser import replay, ryser_sequence

# ---------------------------------------------------------------------------
# positions on the cycle-local grid
# ---------------------------------------------------------------------------


def ring(pos, ell: int) -> int:
    """Cyclic offset of a cell: 0 on the main diagonal, 1 on the small
    diagonal, 2..ell-1 on chords."""
    a, b = pos
    return (b - a) % ell


def is_chord(pos, ell: int) -> bool:
    return ring(pos, ell) >= 2


def cousins(pos, ell: int) -> tuple:
    """The up-to-four chord cells in the reflected 2x2 window of ``pos``.

    For a chord (a, b) these are the cells with u-index in {b-1, b} and
    v-index in {a, a+1}, mod ell, diagonal cells excluded.  A chord and a
    cousin span a 2x2 submatrix whose other two corners both lie on the
    diagonals, which is what makes a same-type cousin a switch witness.
    """
    if not is_chord(pos, ell):
        raise DiagonalPosition(f"{pos} lies on a diagonal")
    a, b = pos
    cands = {((b - 1) % ell, a), ((b - 1) % ell, (a + 1) % ell),
             (b % ell, a), (b % ell, (a + 1) % ell)}
    return tuple(sorted(p for p in cands if is_chord(p, ell)))


def _orth_neighbors(pos, ell: int):
    a, b = pos
    return (((a - 1) % ell, b), ((a + 1) % ell, b),
            (a, (b - 1) % ell), (a, (b + 1) % ell))


def position_distance(p, q, ell: int) -> int:
    """Grid metric: unit horizontal or vertical steps, rows and columns wrap
    around, and main-diagonal cells cannot be entered."""
    if p == q:
        return 0
    dist = {p: 0}
    queue = deque([p])
    while queue:
        cur = queue.popleft()
        for nxt in _orth_neighbors(cur, ell):
            if ring(nxt, ell) == 0 or nxt in dist:
                continue
            dist[nxt] = dist[cur] + 1
            if nxt == q:
                return dist[nxt]
            queue.append(nxt)
    raise ValueError(f"{q} unreachable from {p}")


def _max_down_steps(ell: int) -> int:
    # cell ((i+s), (i-s)) sits on ring ell - 2s; chords need ring >= 2
    return (ell - 2) // 2


def _max_up_steps(ell: int) -> int:
    # cell ((i-s), (i+s)) sits on ring 2s; chords need ring <= ell - 1
    return (ell - 1) // 2


def down_line(i: int, ell: int) -> tuple:
    """Chord cells ((i+s) mod ell, (i-s) mod ell), s = 1.., walking from the
    main diagonal toward the small diagonal."""
    return tuple(((i + s) % ell, (i - s) % ell)
                 for s in range(1, _max_down_steps(ell) + 1))


def up_line(i: int, ell: int) -> tuple:
    """Chord cells ((i-s) mod ell, (i+s) mod ell), s = 1.., walking from the
    small diagonal toward the main diagonal."""
    return tuple(((i - s) % ell, (i + s) % ell)
                 for s in range(1, _max_up_steps(ell) + 1))


# ---------------------------------------------------------------------------
# cycle-local views
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycleFrame:
    """Embedding of a cycle into the host graph: local index t corresponds
    to global U-vertex u_ids[t] and V-vertex v_ids[t]."""

    u_ids: tuple
    v_ids: tuple

    @property
    def m(self) -> int:
        return len(self.u_ids)

    def cell_edge(self, pos) -> tuple:
        a, b = pos
        return (self.u_ids[a], self.v_ids[b])

    def main_edge(self, t: int) -> tuple:
        return (self.u_ids[t], self.v_ids[t])

    def small_edge(self, t: int) -> tuple:
        return (self.u_ids[t], self.v_ids[(t + 1) % self.m])

    def sub(self, arc) -> "CycleFrame":
        return CycleFrame(tuple(self.u_ids[t] for t in arc),
                          tuple(self.v_ids[t] for t in arc))

    @classmethod
    def from_cycle(cls, cycle: AlternatingCycle, G: BipartiteGraph) -> "CycleFrame":
        """Orient the cycle so its edges inside G become the main diagonal."""
        g_edges = {e for e in cycle.x_edges | cycle.y_edges if G.adj[e]}
        o_edges = (cycle.x_edges | cycle.y_edges) - g_edges
        if len(g_edges) != len(o_edges):
            raise CycleMismatch("cycle does not alternate against the start graph")
        next_v = {}
        for (u, v) in o_edges:
            if u in next_v:
                raise CycleMismatch("a U-vertex carries two target-side cycle edges")
            next_v[u] = v
        next_u = {}
        for (u, v) in g_edges:
            if v in next_u:
                raise CycleMismatch("a V-vertex carries two start-side cycle edges")
            next_u[v] = u
        u0, v0 = min(g_edges)
        us, vs = [u0], [v0]
        m = len(g_edges)
        for _ in range(m - 1):
            v_next = next_v[us[-1]]
            u_next = next_u[v_next]
            us.append(u_next)
            vs.append(v_next)
        if next_v[us[-1]] != v0:
            raise CycleMismatch("cycle traversal did not close")
        return cls(tuple(us), tuple(vs))


@dataclass(frozen=True)
class FMatrix:
    """The m x m cycle-local illustration matrix with entries 0..3.

    Diagonal cells hold the current realization's value at the cycle edge;
    chord cells hold start + end + current, so their parity says whether
    the chord is an edge right now and their magnitude carries the type.
    """

    ell: int
    cells: tuple

    def __post_init__(self):
        m = self.ell
        if len(self.cells) != m or any(len(r) != m for r in self.cells):
            raise ValueError("cells must form an ell x ell grid")
        for a in range(m):
            for b in range(m):
                v = self.cells[a][b]
                if ring((a, b), m) <= 1:
                    if v not in (0, 1):
                        raise ValueError(f"diagonal cell ({a},{b}) must be 0/1, got {v}")
                elif v not in (0, 1, 2, 3):
                    raise ValueError(f"chord cell ({a},{b}) out of range: {v}")

    @property
    def main_diag(self) -> tuple:
        return tuple((t, t) for t in range(self.ell))

    @property
    def small_diag(self) -> tuple:
        return tuple((t, (t + 1) % self.ell) for t in range(self.ell))

    def value(self, pos) -> int:
        return self.cells[pos[0]][pos[1]]

    def type_of(self, pos) -> int:
        """Chord type: the chord's value in the start (= end) realization."""
        if not is_chord(pos, self.ell):
            raise DiagonalPosition(f"{pos} lies on a diagonal")
        return 1 if self.cells[pos[0]][pos[1]] >= 2 else 0

    def in_current(self, pos) -> int:
        """Whether the cell's vertex pair is an edge of the current Z."""
        v = self.cells[pos[0]][pos[1]]
        if is_chord(pos, self.ell):
            return v % 2
        return v

    def chords(self) -> tuple:
        m = self.ell
        return tuple((a, b) for a in range(m) for b in range(m)
                     if is_chord((a, b), m))

    def is_friendly(self, pos) -> bool:
        t = self.type_of(pos)
        return any(self.type_of(q) == t for q in cousins(pos, self.ell))

    @classmethod
    def from_types(cls, ell: int, types) -> "FMatrix":
        """The start-state view: main diagonal 1, small diagonal 0, chords
        at three times their type."""
        cells = [[0] * ell for _ in range(ell)]
        for t in range(ell):
            cells[t][t] = 1
        for (a, b), ty in types.items():
            if not is_chord((a, b), ell):
                raise DiagonalPosition(f"type given for diagonal cell ({a},{b})")
            cells[a][b] = 3 * int(ty)
        return cls(ell, tuple(tuple(r) for r in cells))

    def to_local_hat(self) -> tuple:
        """Cycle-local start+end-current matrix; inverse of ``from_local_hat``."""
        m = self.ell
        conv = {1: -1, 0: 0, 3: 1, 2: 2}
        out = [[0] * m for _ in range(m)]
        for a in range(m):
            for b in range(m):
                v = self.cells[a][b]
                out[a][b] = 1 - v if ring((a, b), m) <= 1 else conv[v]
        return tuple(tuple(r) for r in out)

    @classmethod
    def from_local_hat(cls, ell: int, hat) -> "FMatrix":
        conv = {-1: 1, 0: 0, 1: 3, 2: 2}
        cells = [[0] * ell for _ in range(ell)]
        for a in range(ell):
            for b in range(ell):
                v = hat[a][b]
                cells[a][b] = 1 - v if ring((a, b), ell) <= 1 else conv[v]
        return cls(ell, tuple(tuple(r) for r in cells))


def _frame_types(G: BipartiteGraph, frame: CycleFrame) -> dict:
    types = {}
    m = frame.m
    for a in range(m):
        for b in range(m):
            if is_chord((a, b), m):
                types[frame.cell_edge((a, b))] = int(G.adj[frame.cell_edge((a, b))])
    return types


def _local_f(Z: BipartiteGraph, frame: CycleFrame, types: dict) -> FMatrix:
    m = frame.m
    cells = [[0] * m for _ in range(m)]
    for a in range(m):
        for b in range(m):
            e = frame.cell_edge((a, b))
            r = ring((a, b), m)
            if r <= 1:
                cells[a][b] = int(Z.adj[e])
            else:
                cells[a][b] = 2 * types[e] + int(Z.adj[e])
    return FMatrix(m, tuple(tuple(r) for r in cells))


def f_matrix(G: BipartiteGraph, Gp: BipartiteGraph, Z: BipartiteGraph,
             cycle: AlternatingCycle) -> FMatrix:
    """Cycle-local view of Z against the pair (G, Gp) whose symmetric
    difference is exactly ``cycle``."""
    part = symmetric_difference(G, Gp)
    if part.x_edges | part.y_edges != set(cycle.edge_seq):
        raise CycleMismatch("G and Gp do not differ in exactly this cycle")
    if (Z.k, Z.l) != (G.k, G.l) or not Z.same_margins(G):
        raise DegreeMismatch("Z does not realize the same degree sequence")
    frame = CycleFrame.from_cycle(cycle, G)
    return _local_f(Z, frame, _frame_types(G, frame))


@dataclass(frozen=True, eq=False)
class HatMatrix:
    """Entrywise M_X + M_Y - M_Z; entries in {-1, 0, 1, 2} with the margins
    of the common degree sequence."""

    cells: np.ndarray

    def __post_init__(self):
        self.cells.setflags(write=False)


def hat_matrix(X: BipartiteGraph, Y: BipartiteGraph, Z: BipartiteGraph) -> HatMatrix:
    if not ((X.k, X.l) == (Y.k, Y.l) == (Z.k, Z.l)):
        raise ShapeMismatch("hat matrix needs three equally shaped graphs")
    if not (X.same_margins(Y) and X.same_margins(Z)):
        raise DegreeMismatch("hat matrix needs three realizations of one sequence")
    cells = X.adj.astype(np.int8) + Y.adj.astype(np.int8) - Z.adj.astype(np.int8)
    return HatMatrix(cells)


# ---------------------------------------------------------------------------
# friendly paths and blocking sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FriendlyPath:
    """A chain of friendly chords from the ring next to the main diagonal to
    the ring next to the small diagonal, stepping one cell at a time.

    ``witnesses`` maps each position to its chosen same-type cousin and
    ``adjusted`` is the anchor sequence: the position itself for type-0
    chords, the witness for type-1 chords.  ``length_one`` flags the
    degenerate single-chord path possible when ell = 3.
    """

    positions: tuple
    witnesses: dict
    adjusted: tuple
    length_one: bool


@dataclass(frozen=True)
class SteinhausSet:
    """A king-connected set of unfriendly chords meeting every rook path
    between the two diagonals."""

    positions: frozenset
    ell: int

    def cousin_set(self) -> frozenset:
        out = set()
        for p in self.positions:
            out.update(cousins(p, self.ell))
        return frozenset(out)


def _witness(F: FMatrix, pos):
    t = F.type_of(pos)
    for q in cousins(pos, F.ell):
        if F.type_of(q) == t:
            return q
    return None


def _adjusted(positions, F: FMatrix) -> tuple:
    out = []
    for pos in positions:
        if F.type_of(pos) == 0:
            out.append(pos)
        else:
            w = _witness(F, pos)
            if w is None:
                raise NoCousinWitness(f"{pos} has no same-type cousin")
            out.append(w)
    return tuple(out)


def adjusted_positions(path: FriendlyPath, F: FMatrix) -> tuple:
    """Anchor sequence: type-0 positions stay, type-1 positions are replaced
    by their lowest same-type cousin."""
    return _adjusted(path.positions, F)


def _king_neighbors(pos, ell):
    a, b = pos
    out = []
    for da in (-1, 0, 1):
        for db in (-1, 0, 1):
            if da == db == 0:
                continue
            out.append(((a + da) % ell, (b + db) % ell))
    return out


def _blocks_all_rook_paths(block: set, ell: int) -> bool:
    """True when every orthogonal chord path from the main-diagonal ring to
    the small-diagonal ring meets ``block``."""
    starts = [p for p in down_up_rings(ell)[0] if p not in block]
    targets = {p for p in down_up_rings(ell)[1] if p not in block}
    seen = set(starts)
    queue = deque(starts)
    while queue:
        cur = queue.popleft()
        if cur in targets:
            return False
        for nxt in _orth_neighbors(cur, ell):
            if nxt in seen or not is_chord(nxt, ell) or nxt in block:
                continue
            seen.add(nxt)
            queue.append(nxt)
    return True


def down_up_rings(ell: int):
    """The chord rings adjacent to the main diagonal and the small diagonal."""
    near_main = tuple((t, (t - 1) % ell) for t in range(ell))
    near_small = tuple((t, (t + 2) % ell) for t in range(ell))
    return near_main, near_small


def find_friendly_path(F: FMatrix):
    """Either a friendly path or a blocking set, never both.

    Breadth-first search over friendly chords, seeded at the friendly cells
    of the ring next to the main diagonal, expanding in lexicographic order
    inside each layer.  On failure, the king-connected components of the
    unfriendly cells are scanned for one that cuts every rook path; its
    existence is the combinatorial guarantee behind the construction and a
    missing one raises loudly.
    """
    m = F.ell
    if m < 3:
        raise ValueError("the chord grid needs ell >= 3")
    near_main, near_small = down_up_rings(m)
    friendly = {p for p in F.chords() if F.is_friendly(p)}
    targets = {p for p in near_small if p in friendly}
    parent = {}
    frontier = sorted(p for p in near_main if p in friendly)
    seen = set(frontier)
    for p in frontier:
        parent[p] = None
    found = None
    while frontier and found is None:
        for p in frontier:
            if p in targets:
                found = p
                break
        if found is not None:
            break
        nxt_frontier = []
        for p in frontier:
            for q in sorted(_orth_neighbors(p, m)):
                if q in friendly and q not in seen:
                    seen.add(q)
                    parent[q] = p
                    nxt_frontier.append(q)
        frontier = sorted(nxt_frontier)
    if found is not None:
        pos = []
        cur = found
        while cur is not None:
            pos.append(cur)
            cur = parent[cur]
        pos.reverse()
        witnesses = {p: _witness(F, p) for p in pos}
        return FriendlyPath(tuple(pos), witnesses, _adjusted(pos, F), len(pos) == 1)

    unfriendly = set(F.chords()) - friendly
    comps = []
    assigned = set()
    for p in sorted(unfriendly):
        if p in assigned:
            continue
        comp = {p}
        queue = deque([p])
        assigned.add(p)
        while queue:
            cur = queue.popleft()
            for q in _king_neighbors(cur, m):
                if q in unfriendly and q not in comp:
                    comp.add(q)
                    assigned.add(q)
                    queue.append(q)
        comps.append(comp)
    blocking = [c for c in comps if _blocks_all_rook_paths(c, m)]
    if not blocking:
        raise SpecViolation("no friendly path and no single blocking component")
    best = min(blocking, key=lambda c: min(c))
    return SteinhausSet(frozenset(best), m)


def verify_friendly_path(path: FriendlyPath, F: FMatrix):
    """Check every clause of the friendly-path definition; raise on failure."""
    m = F.ell
    P = path.positions
    if not P:
        raise SpecViolation("empty path")
    if len(set(P)) != len(P):
        raise SpecViolation("path repeats a chord")
    for p in P:
        if not is_chord(p, m) or not F.is_friendly(p):
            raise SpecViolation(f"{p} is not a friendly chord")
    for p, q in zip(P, P[1:]):
        da = min((p[0] - q[0]) % m, (q[0] - p[0]) % m)
        db = min((p[1] - q[1]) % m, (q[1] - p[1]) % m)
        if da + db != 1:
            raise SpecViolation(f"{p} -> {q} is not a unit step")
    if ring(P[0], m) != m - 1:
        raise SpecViolation("path does not start next to the main diagonal")
    if ring(P[-1], m) != 2:
        raise SpecViolation("path does not end next to the small diagonal")
    adj = adjusted_positions(path, F)
    if adj != path.adjusted:
        raise SpecViolation("stored anchor sequence disagrees with recomputation")
    for i in range(len(P) - 1):
        if F.type_of(P[i]) == F.type_of(P[i + 1]):
            if position_distance(adj[i], adj[i + 1], m) > 3:
                raise SpecViolation("same-type anchors further than 3 apart")


def verify_steinhaus(ss: SteinhausSet, F: FMatrix):
    """Check every property the blocking set must carry; raise on failure."""
    m = F.ell
    T = ss.positions
    if not T:
        raise SpecViolation("empty blocking set")
    for p in T:
        if F.is_friendly(p):
            raise SpecViolation(f"{p} in the blocking set is friendly")
    seed = min(T)
    comp = {seed}
    queue = deque([seed])
    while queue:
        cur = queue.popleft()
        for q in _king_neighbors(cur, m):
            if q in T and q not in comp:
                comp.add(q)
                queue.append(q)
    if comp != set(T):
        raise SpecViolation("blocking set is not king-connected")
    if not _blocks_all_rook_paths(set(T), m):
        raise SpecViolation("blocking set misses a rook path")
    ctypes = {F.type_of(q) for q in ss.cousin_set()}
    if len(ctypes) != 1:
        raise SpecViolation("cousin set carries both types")
    ttypes = {F.type_of(p) for p in T}
    if len(ttypes) != 1 or ttypes == ctypes:
        raise SpecViolation("blocking set is not uniformly opposite-typed")
    cs = ss.cousin_set()
    for i in range(m):
        if not (cs & set(down_line(i, m))):
            raise SpecViolation(f"cousin set misses down-line {i}")
        if not (cs & set(up_line(i, m))):
            raise SpecViolation(f"cousin set misses up-line {i}")


def verify_same_state(F: FMatrix):
    """When no friendly path exists, every index must admit a cut pattern."""
    pats = _valid_patterns(F)
    have = {i for (i, *_rest) in pats}
    missing = set(range(F.ell)) - have
    if missing:
        raise SpecViolation(f"indices without a cut pattern: {sorted(missing)}")


# ---------------------------------------------------------------------------
# OK / KO target patterns
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OKKOSpec:
    """An anchored intermediate target.

    An OK target at chord (a, b) shifts the cycle segment from index a up
    to index b onto the small diagonal and removes the (type-1) anchor
    chord from the realization.  A KO target at (a, b) shifts the segment
    from b up to a, removing both bounding main-diagonal edges, and adds
    the (type-0) anchor chord instead.
    """

    kind: str
    anchor: tuple
    frame: CycleFrame

    def __post_init__(self):
        if self.kind not in ("OK", "KO"):
            raise ValueError("kind must be 'OK' or 'KO'")
        if not is_chord(self.anchor, self.frame.m):
            raise DiagonalPosition(f"anchor {self.anchor} lies on a diagonal")

    def anchor_type(self) -> int:
        return 1 if self.kind == "OK" else 0

    def pattern(self):
        """Target values for every main cell, small cell, and the anchor."""
        m = self.frame.m
        a, b = self.anchor
        mains = [1] * m
        smalls = [0] * m
        if self.kind == "OK":
            for t in _cyc_range((a + 1) % m, b, m):
                mains[t] = 0
            for t in _cyc_range(a, b, m):
                smalls[t] = 1
            anchor_val = 0
        else:
            for t in _cyc_range(b, (a + 1) % m, m):
                mains[t] = 0
            for t in _cyc_range(b, a, m):
                smalls[t] = 1
            anchor_val = 1
        return mains, smalls, anchor_val


def _cyc_range(s, e, m):
    out = []
    t = s
    while t != e:
        out.append(t)
        t = (t + 1) % m
        if len(out) > m:
            raise AssertionError("cyclic range did not close")
    return out


def _spec_target(Z: BipartiteGraph, prev: OKKOSpec | None, spec: OKKOSpec) -> BipartiteGraph:
    """The realization demanded by ``spec``, inheriting everything the
    pattern leaves free from Z, with the previous anchor restored to type."""
    frame = spec.frame
    m = frame.m
    want = {}
    if prev is not None:
        want[frame.cell_edge(prev.anchor)] = prev.anchor_type()
    mains, smalls, anchor_val = spec.pattern()
    for t in range(m):
        want[frame.main_edge(t)] = mains[t]
        want[frame.small_edge(t)] = smalls[t]
    want[frame.cell_edge(spec.anchor)] = anchor_val
    rem = [e for e, v in want.items() if v == 0 and Z.adj[e]]
    add = [e for e, v in want.items() if v == 1 and not Z.adj[e]]
    return Z.with_edges(rem, add)


def matches_spec(Z: BipartiteGraph, spec: OKKOSpec) -> bool:
    """Whether Z carries exactly the pattern cells demanded by the spec."""
    frame = spec.frame
    mains, smalls, anchor_val = spec.pattern()
    for t in range(frame.m):
        if Z.adj[frame.main_edge(t)] != mains[t]:
            return False
        if Z.adj[frame.small_edge(t)] != smalls[t]:
            return False
    return Z.adj[frame.cell_edge(spec.anchor)] == anchor_val


def _diff_cycle_cells(Za: BipartiteGraph, Zb: BipartiteGraph) -> list:
    """The cells where the two graphs differ, verified to form one
    alternating cycle; raises otherwise."""
    us, vs = np.nonzero(Za.adj != Zb.adj)
    cells = sorted((int(u), int(v)) for u, v in zip(us, vs))
    if not cells:
        return []
    by_row = {}
    by_col = {}
    for c in cells:
        by_row.setdefault(c[0], []).append(c)
        by_col.setdefault(c[1], []).append(c)
    for group in list(by_row.values()) + list(by_col.values()):
        if len(group) != 2:
            raise SpecViolation("pattern difference is not a disjoint cycle union")
        vals = sorted(int(Za.adj[c]) for c in group)
        if vals != [0, 1]:
            raise SpecViolation("pattern difference does not alternate")
    start = cells[0]
    seen = {start}
    cur, via_row = start, True
    while True:
        group = by_row[cur[0]] if via_row else by_col[cur[1]]
        nxt = group[0] if group[1] == cur else group[1]
        if nxt == start:
            break
        if nxt in seen:
            raise SpecViolation("pattern difference revisits a cell")
        seen.add(nxt)
        cur, via_row = nxt, not via_row
    if len(seen) != len(cells):
        raise SpecViolation("pattern difference splits into several cycles")
    return cells


def _bridge(Za: BipartiteGraph, Zb: BipartiteGraph) -> list:
    """Swaps carrying Za to Zb when they differ in one alternating cycle.

    The difference cycle's rows and columns span a small subgraph in both
    graphs with equal margins; the constructive transformation on that
    subgraph is lifted back to global coordinates.
    """
    cells = _diff_cycle_cells(Za, Zb)
    if not cells:
        return []
    rows = sorted({u for u, _ in cells})
    cols = sorted({v for _, v in cells})
    sub_a = BipartiteGraph(Za.adj[np.ix_(rows, cols)])
    sub_b = BipartiteGraph(Zb.adj[np.ix_(rows, cols)])
    local = ryser_sequence(sub_a, sub_b)
    lifted = [Swap(rows[s.u1], rows[s.u2], cols[s.v1], cols[s.v2], s.orientation)
              for s in local]
    return lifted


def _anchor_params(spec: OKKOSpec):
    # a KO pattern's bookkeeping parameters are the transposed anchor indices
    a, b = spec.anchor
    return spec.anchor if spec.kind == "OK" else (b, a)


def ok_ko_step(L_prev: BipartiteGraph, spec_prev: OKKOSpec, spec_next: OKKOSpec) -> list:
    """Swaps moving the realization matching ``spec_prev`` to the one
    matching ``spec_next`` (previous anchor restored to its type).

    The two targets differ in a single alternating cycle whose length is
    linear in the grid distance of the anchor parameters; before bridging,
    that is asserted.  The swap count is bounded by twice the edge count of
    the spanned subgraph: 24 for the adjacent same-kind case and 40 for
    the kind-changing case.
    """
    if spec_prev.frame != spec_next.frame:
        raise SpecViolation("patterns live on different cycle frames")
    if spec_prev == spec_next:
        return []
    if not matches_spec(L_prev, spec_prev):
        raise SpecViolation("graph does not match the claimed source pattern")
    L_next = _spec_target(L_prev, spec_prev, spec_next)
    cells = _diff_cycle_cells(L_prev, L_next)
    dist = position_distance(_anchor_params(spec_prev), _anchor_params(spec_next),
                             spec_prev.frame.m)
    cap = (2 if spec_prev.kind == spec_next.kind else 4) + 2 * dist
    if len(cells) > cap:
        raise SpecViolation(
            f"difference cycle of {len(cells)} exceeds {cap} for anchor distance {dist}")
    return _bridge(L_prev, L_next)


# ---------------------------------------------------------------------------
# the path construction
# ---------------------------------------------------------------------------


def _assert_right_form(Z: BipartiteGraph, frame: CycleFrame, types: dict):
    m = frame.m
    for t in range(m):
        if not Z.adj[frame.main_edge(t)]:
            raise PreconditionViolation(f"main edge {t} missing at block entry")
        if Z.adj[frame.small_edge(t)]:
            raise PreconditionViolation(f"small edge {t} present at block entry")
    for a in range(m):
        for b in range(m):
            if is_chord((a, b), m):
                e = frame.cell_edge((a, b))
                if int(Z.adj[e]) != types[e]:
                    raise PreconditionViolation(f"chord {e} off its type at block entry")


def _friendly_swaps(Z: BipartiteGraph, frame: CycleFrame, types: dict,
                    path: FriendlyPath):
    specs = []
    for pos, anchor in zip(path.positions, path.adjusted):
        t = types[frame.cell_edge(pos)]
        specs.append(OKKOSpec("OK" if t == 1 else "KO", anchor, frame))
    swaps = []
    cur = Z
    prev = None
    for spec in specs:
        nxt = _spec_target(cur, prev, spec)
        if prev is None:
            step = _bridge(cur, nxt)
        else:
            step = ok_ko_step(cur, prev, spec)
        swaps.extend(step)
        cur = nxt
        prev = spec
    # closing target: every main edge gone, every small edge in, anchor restored
    m = frame.m
    want = {frame.cell_edge(prev.anchor): prev.anchor_type()}
    for t in range(m):
        want[frame.main_edge(t)] = 0
        want[frame.small_edge(t)] = 1
    rem = [e for e, v in want.items() if v == 0 and cur.adj[e]]
    add = [e for e, v in want.items() if v == 1 and not cur.adj[e]]
    final = cur.with_edges(rem, add)
    swaps.extend(_bridge(cur, final))
    return swaps, final


def _valid_patterns(F: FMatrix) -> list:
    """Cut patterns (i, t, j, jp): the first j down-line cells at index i
    share type t, the first jp-1 up-line cells share 1-t, and up-line cell
    jp has type t again, with jp = j + 1 whenever jp >= 2."""
    m = F.ell
    max_down, max_up = _max_down_steps(m), _max_up_steps(m)
    out = []
    if max_down < 1 or max_up < 1:
        return out
    for i in range(m):
        down = [F.type_of(((i + s) % m, (i - s) % m)) for s in range(1, max_down + 1)]
        up = [F.type_of(((i - s) % m, (i + s) % m)) for s in range(1, max_up + 1)]
        t = down[0]
        run = 1
        while run < max_down and down[run] == t:
            run += 1
        p = next((s for s in range(1, max_up + 1) if up[s - 1] == t), None)
        if p is None:
            continue
        if p == 1:
            out.append((i, t, 0, 1))
        elif p <= run + 1:
            out.append((i, t, p - 1, p))
    return out


def _seam_in_arc(i, j, m) -> bool:
    arc = {(i - j + t0) % m for t0 in range(2 * j + 1)}
    return (m - 1) in arc and 0 in arc


def _choose_pattern(patterns, m):
    feasible = [pat for pat in patterns
                if not (pat[3] == 1 and pat[1] == 0 and m < 5)]
    if not feasible:
        raise SpecViolation("no feasible cut pattern on this block")
    return min(feasible, key=lambda pat: (
        0 if (pat[3] >= 2 and _seam_in_arc(pat[0], pat[2], m)) else 1,
        0 if pat[3] >= 2 else 1,
        pat[0], pat[3]))


def _first_touch(swaps, edge) -> int:
    u, v = edge
    for idx, s in enumerate(swaps):
        if s.touches(u, v):
            return idx
    raise SpecViolation("a block sequence never touches its closing cell")


def _solve_frame(Z: BipartiteGraph, frame: CycleFrame, types: dict,
                 expect_friendly: bool = False):
    """Swaps flipping the framed cycle from its main side to its small side.

    Returns (swaps, final graph).  Every emitted swap touches only cells of
    this frame, so sequences of disjoint frames commute.
    """
    m = frame.m
    _assert_right_form(Z, frame, types)
    if m == 1:
        raise SpecViolation("a one-edge block cannot arise")
    if m == 2:
        s = Swap.on(frame.u_ids[0], frame.u_ids[1],
                    frame.v_ids[0], frame.v_ids[1], graph=Z)
        return [s], apply_swap(Z, s)
    F = _local_f(Z, frame, types)
    res = find_friendly_path(F)
    if isinstance(res, FriendlyPath):
        return _friendly_swaps(Z, frame, types, res)
    if expect_friendly:
        raise SpecViolation("a block guaranteed friendly came out blocked")
    i, t, j, jp = _choose_pattern(_valid_patterns(F), m)
    if jp == 1:
        return _first_possibility(Z, frame, types, i, t)
    return _second_possibility(Z, frame, types, i, t, j, jp)


def _swap_on_cells(Z, frame, urow_a, urow_b, vcol_a, vcol_b) -> Swap:
    return Swap.on(frame.u_ids[urow_a], frame.u_ids[urow_b],
                   frame.v_ids[vcol_a], frame.v_ids[vcol_b], graph=Z)


def _first_possibility(Z, frame, types, i, t):
    m = frame.m
    im1, ip1 = (i - 1) % m, (i + 1) % m
    swaps = []
    if t == 1:
        # one swap settles index i and opens the chord (i-1, i+1) as the
        # closing cell of the remaining (m-1)-block
        s1 = _swap_on_cells(Z, frame, im1, i, i, ip1)
        swaps.append(s1)
        cur = apply_swap(Z, s1)
        child = frame.sub([(i + 1 + t0) % m for t0 in range(m - 1)])
        sub, cur = _solve_frame(cur, child, types)
        return swaps + sub, cur
    if m < 5:
        raise SpecViolation("type-0 adjacent pattern needs at least five indices")
    im2, ip2 = (i - 2) % m, (i + 2) % m
    sA = _swap_on_cells(Z, frame, im1, ip1, im1, ip1)
    cur = apply_swap(Z, sA)
    sB = _swap_on_cells(cur, frame, im1, i, i, ip1)
    cur = apply_swap(cur, sB)
    swaps.extend([sA, sB])
    child = frame.sub([(i + 2 + t0) % m for t0 in range(m - 3)])
    x = types[frame.cell_edge((im2, ip2))]
    if x == 1:
        sC = _swap_on_cells(cur, frame, im2, ip1, im1, ip2)
        cur = apply_swap(cur, sC)
        swaps.append(sC)
        sub, cur = _solve_frame(cur, child, types)
        return swaps + sub, cur
    sub, cur = _solve_frame(cur, child, types)
    swaps.extend(sub)
    sC = _swap_on_cells(cur, frame, im2, ip1, im1, ip2)
    cur = apply_swap(cur, sC)
    swaps.append(sC)
    return swaps, cur


def _second_possibility(Z, frame, types, i, t, j, jp):
    m = frame.m
    lo_u, hi_u = (i - jp) % m, (i + j) % m
    lo_v, hi_v = (i - j) % m, (i + jp) % m
    d_cell = ((i + j) % m, (i - j) % m)
    u_cell = ((i - jp) % m, (i + jp) % m)
    arc1 = [(i - j + t0) % m for t0 in range(j + jp)]
    arc2 = [(i + jp + t0) % m for t0 in range(m - j - jp)]
    sub1, sub2 = frame.sub(arc1), frame.sub(arc2)
    swaps = []
    cur = Z
    if t == 1:
        pre = _swap_on_cells(cur, frame, lo_u, hi_u, lo_v, hi_v)
        swaps.append(pre)
        cur = apply_swap(cur, pre)
    s1, _end1 = _solve_frame(cur, sub1, types, expect_friendly=True)
    s2, _end2 = _solve_frame(cur, sub2, types)
    c1 = _first_touch(s1, frame.cell_edge(d_cell))
    c2 = _first_touch(s2, frame.cell_edge(u_cell))
    interleaved = s1[:c1] + s2[:c2] + s1[c1:] + s2[c2:]
    for s in interleaved:
        cur = apply_swap(cur, s)
    swaps.extend(interleaved)
    if t == 0:
        post = _swap_on_cells(cur, frame, lo_u, hi_u, lo_v, hi_v)
        swaps.append(post)
        cur = apply_swap(cur, post)
    return swaps, cur


_cycle_swap_cache: dict = {}


def clear_path_cache():
    _cycle_swap_cache.clear()


def cycle_swaps(G: BipartiteGraph, Gp: BipartiteGraph, X: BipartiteGraph,
                Y: BipartiteGraph, cycle: AlternatingCycle) -> list:
    """The swap sequence behind ``path_along_cycle``; cached per (G, cycle)."""
    part = symmetric_difference(G, Gp)
    if part.x_edges | part.y_edges != set(cycle.edge_seq):
        raise CycleMismatch("G and Gp do not differ in exactly this cycle")
    cyc_cells = set(cycle.edge_seq)
    dxg = symmetric_difference(X, G)
    dgy = symmetric_difference(Gp, Y)
    side_x = dxg.x_edges | dxg.y_edges
    side_y = dgy.x_edges | dgy.y_edges
    if side_x & cyc_cells or side_y & cyc_cells or side_x & side_y:
        raise PreconditionViolation("the three symmetric differences overlap")
    key = (G.key(), cycle.edge_seq)
    hit = _cycle_swap_cache.get(key)
    if hit is not None:
        return hit
    frame = CycleFrame.from_cycle(cycle, G)
    types = _frame_types(G, frame)
    swaps, end = _solve_frame(G, frame, types)
    if end != Gp:
        raise SpecViolation("cycle construction missed its target")
    swaps = tuple(swaps)
    _cycle_swap_cache[key] = swaps
    return swaps


def path_along_cycle(G: BipartiteGraph, Gp: BipartiteGraph, X: BipartiteGraph,
                     Y: BipartiteGraph, cycle: AlternatingCycle) -> list:
    """Realizations G = Z_0, ..., Z_m = Gp, consecutive ones one swap apart,
    built along the given alternating cycle."""
    return replay(G, cycle_swaps(G, Gp, X, Y, cycle))


def canonical_path(X: BipartiteGraph, Y: BipartiteGraph, pairing, certify: bool = False,
                   switch_cap: int = 6):
    """The canonical path from X to Y selected by the pairing.

    The pairing's cycles are processed in decomposition order; the path
    passes through the partial targets X xor (first cycles) between them.
    With ``certify`` each visited realization also gets the switch distance
    of its three-term matrix against (X, Y).
    """
    part = symmetric_difference(X, Y)
    if pairing.x_edges != part.x_edges or pairing.y_edges != part.y_edges:
        raise PairingMismatch("pairing does not belong to this realization pair")
    decomp = decompose(X, Y, pairing)
    states = [X]
    cur = X
    for cyc in decomp.cycles:
        target = cur.with_edges(sorted(cyc.x_edges), sorted(cyc.y_edges))
        seg = cycle_swaps(cur, target, X, Y, cyc)
        for s in seg:
            cur = apply_swap(cur, s)
            states.append(cur)
        if cur != target:
            raise SpecViolation("segment did not land on its fixed point")
    if cur != Y:
        raise SpecViolation("path did not land on Y")
    if certify:
        certs = [switch_distance(hat_matrix(X, Y, Z).cells, cap=switch_cap)
                 for Z in states]
        return states, certs
    return states


def path_distribution(X: BipartiteGraph, Y: BipartiteGraph,
                      max_pairings: int = 5000) -> dict:
    """Exact distribution over canonical paths: each path's weight is the
    number of pairings selecting it over the total number of pairings."""
    total = enumerate_pairings_count(X, Y)
    if total > max_pairings:
        raise TooManyPairings(f"{total} pairings exceed the guard {max_pairings}")
    counts = {}
    for s in all_pairings(X, Y):
        gamma = tuple(st.key() for st in canonical_path(X, Y, s))
        counts[gamma] = counts.get(gamma, 0) + 1
    dist = {g: Fraction(c, total) for g, c in counts.items()}
    assert sum(dist.values()) == 1
    return dist


# ---------------------------------------------------------------------------
# switch distance
# ---------------------------------------------------------------------------


def switch_distance(M, cap: int = 6, entry_slack: int = 1):
    """Minimum number of 2x2 plus/minus switches carrying the integer matrix
    M to a 0-1 matrix, or ``Exceeds(cap)``.

    Switches commute, so some optimal sequence starts with a switch that
    moves the first out-of-range entry toward range; the search branches
    only over those, giving exact results whenever a witness exists with
    intermediate entries inside the allowed band (the input's value range
    widened by ``entry_slack``).  A switch repairs at most four units of
    deficiency, which prunes hopeless branches early.
    """
    mat = np.array(M, dtype=np.int64)
    if mat.ndim != 2:
        raise MarginMismatch("switch distance needs a matrix")
    rows = sorted((int(x) for x in mat.sum(axis=1)), reverse=True)
    cols = sorted((int(x) for x in mat.sum(axis=0)), reverse=True)
    try:
        ds = BipartiteDegreeSequence(tuple(rows), tuple(cols))
        ok = is_graphical(ds)
    except ValueError:
        ok = False
    if not ok:
        raise MarginMismatch("margins admit no 0-1 matrix")
    lo = min(-1, int(mat.min())) - entry_slack
    hi = max(2, int(mat.max())) + entry_slack
    k, l = mat.shape
    base = [int(x) for x in mat.ravel()]
    offset = -lo
    memo = {}

    def dfs(flat, budget):
        first = -1
        deficiency = 0
        for i, v in enumerate(flat):
            if v < 0:
                deficiency -= v
                if first < 0:
                    first = i
            elif v > 1:
                deficiency += v - 1
                if first < 0:
                    first = i
        if first < 0:
            return True
        if deficiency > 4 * budget:
            return False
        key = (bytes(v + offset for v in flat), budget)
        hit = memo.get(key)
        if hit is not None:
            return hit
        r, c = divmod(first, l)
        sign = 1 if flat[first] < 0 else -1
        found = False
        for r2 in range(k):
            if r2 == r:
                continue
            rb, r2b = r * l, r2 * l
            for c2 in range(l):
                if c2 == c:
                    continue
                i01, i10, i11 = rb + c2, r2b + c, r2b + c2
                v00 = flat[first] + sign
                v11 = flat[i11] + sign
                v01 = flat[i01] - sign
                v10 = flat[i10] - sign
                if not (lo <= v11 <= hi and lo <= v01 <= hi and lo <= v10 <= hi):
                    continue
                flat[first], flat[i11], flat[i01], flat[i10] = v00, v11, v01, v10
                if dfs(flat, budget - 1):
                    found = True
                flat[first] = v00 - sign
                flat[i11] = v11 - sign
                flat[i01] = v01 + sign
                flat[i10] = v10 + sign
                if found:
                    break
            if found:
                break
        memo[key] = found
        return found

    for d in range(cap + 1):
        if dfs(list(base), d):
            return d
    return Exceeds(cap)
