"""Command-line entry point.

Subcommands: check, realize, sample, transform, decompose, canonical-path,
mix-report.  Exit codes: 0 success, 1 domain error, 2 usage error.  Domain
errors print one line to stderr as ``error[Code]: message``.  Every
randomized subcommand takes --seed and defaults to DEFAULT_SEED, so equal
invocations produce byte-identical output.

Vertices in textual output are 1-based; a swap prints as "u1 u2 v1 v2",
listing the two U-vertices and then the two V-vertices.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .canonical import canonical_path, hat_matrix, switch_distance
from .chain import sample as chain_sample
from .core import BipartiteDegreeSequence, BipartiteGraph, apply_swap, greedy_realize
from .errors import DegSwapError, NotGraphical
from .mixing import build_kernel, congestion, enumerate_states, spectral_gap, tv_mixing_time
from .pairings import all_pairings, decompose, random_pairing
from .ryser import ryser_sequence

DEFAULT_SEED = 20259


def _read_ds(path: str) -> BipartiteDegreeSequence:
    with open(path, encoding="utf-8") as fh:
        return BipartiteDegreeSequence.from_text(fh.read())


def _read_graph(path: str) -> BipartiteGraph:
    with open(path, encoding="utf-8") as fh:
        return BipartiteGraph.from_text(fh.read())


def _swap_line(s) -> str:
    return f"{s.u1 + 1} {s.u2 + 1} {s.v1 + 1} {s.v2 + 1}"


def _vertex_label(w) -> str:
    side, idx = w
    return f"{side}{idx + 1}"


def cmd_check(args) -> int:
    ds = _read_ds(args.ds)
    try:
        greedy_realize(ds)
    except NotGraphical as exc:
        print(f"not graphical: {exc}")
        return 1
    print("graphical")
    return 0


def cmd_realize(args) -> int:
    sys.stdout.write(greedy_realize(_read_ds(args.ds)).to_text())
    return 0


def cmd_sample(args) -> int:
    ds = _read_ds(args.ds)
    if args.stats:
        hist = {}
        for i in range(args.count):
            g = chain_sample(ds, args.steps, args.seed + i)
            bits = "".join(str(int(x)) for x in g.adj.ravel())
            hist[bits] = hist.get(bits, 0) + 1
        print("state,count")
        for bits in sorted(hist):
            print(f"{bits},{hist[bits]}")
        return 0
    chunks = []
    for i in range(args.count):
        chunks.append(chain_sample(ds, args.steps, args.seed + i).to_text())
    sys.stdout.write("\n".join(chunks))
    return 0


def cmd_transform(args) -> int:
    g1, g2 = _read_graph(args.g1), _read_graph(args.g2)
    for s in ryser_sequence(g1, g2):
        print(_swap_line(s))
    return 0


def cmd_decompose(args) -> int:
    x, y = _read_graph(args.x), _read_graph(args.y)
    if args.all:
        pairings = list(all_pairings(x, y))
    else:
        pairings = [random_pairing(x, y, args.seed)]
    for pi, s in enumerate(pairings):
        dec = decompose(x, y, s)
        print(f"pairing {pi}")
        for ci, circ in enumerate(dec.circuits):
            verts = " ".join(_vertex_label(w) for w in _circuit_vertices(circ))
            print(f"  circuit {ci}: {verts}")
        for ci, cyc in enumerate(dec.cycles):
            verts = " ".join(_vertex_label(w) for w in cyc.vertex_seq())
            print(f"  cycle {ci}: {verts}")
    return 0


def _circuit_vertices(circ):
    from .pairings import _shared_vertex
    n = len(circ)
    return [_shared_vertex(circ[t], circ[(t + 1) % n]) for t in range(n)]


def cmd_canonical_path(args) -> int:
    x, y = _read_graph(args.x), _read_graph(args.y)
    if args.pairing_index is not None:
        for i, s in enumerate(all_pairings(x, y)):
            if i == args.pairing_index:
                pairing = s
                break
        else:
            raise DegSwapError(f"pairing index {args.pairing_index} out of range")
    else:
        pairing = random_pairing(x, y, args.seed)
    states = canonical_path(x, y, pairing)
    sys.stdout.write("\n".join(g.to_text() for g in states))
    if args.certify:
        print("---")
        print("step,swap,switch_distance")
        prev = None
        for i, g in enumerate(states):
            sd = switch_distance(hat_matrix(x, y, g).cells)
            sw = ""
            if prev is not None:
                sw = _swap_line(_recover_swap(prev, g))
            print(f"{i},{sw},{sd}")
            prev = g
    return 0


def _recover_swap(a: BipartiteGraph, b: BipartiteGraph):
    import numpy as np

    from .core import Swap
    us, vs = np.nonzero(a.adj != b.adj)
    rows, cols = sorted(set(int(u) for u in us)), sorted(set(int(v) for v in vs))
    return Swap.on(rows[0], rows[1], cols[0], cols[1], graph=a)


def cmd_mix_report(args) -> int:
    ds = _read_ds(args.ds)
    space = enumerate_states(ds)
    kernel = build_kernel(space)
    lam2, tau = spectral_gap(kernel)
    try:
        tmix = tv_mixing_time(kernel, args.eps)
        tmix_str = str(tmix)
    except DegSwapError as exc:
        tmix_str = f"none({exc.code})"
    rep = congestion(space, kernel, certify=True)
    print("n,lambda2,tau_rel,tv_mixing_time,kappa,max_edge,max_switch_distance")
    edge = f"{rep.max_edge[0]}-{rep.max_edge[1]}"
    print(f"{space.n},{lam2:.12g},{tau:.12g},{tmix_str},{rep.kappa}"
          f",{edge},{rep.max_switch_distance}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="degswap", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--version", action="version", version=f"degswap {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("check", help="test whether a degree sequence pair is graphical")
    q.add_argument("ds")
    q.set_defaults(func=cmd_check)

    q = sub.add_parser("realize", help="emit the greedy realization")
    q.add_argument("ds")
    q.set_defaults(func=cmd_realize)

    q = sub.add_parser("sample", help="run the swap chain and emit samples")
    q.add_argument("--ds", required=True)
    q.add_argument("--steps", type=int, default=200)
    q.add_argument("--seed", type=int, default=DEFAULT_SEED)
    q.add_argument("--count", type=int, default=1)
    q.add_argument("--stats", action="store_true",
                   help="emit a state,count CSV instead of graphs")
    q.set_defaults(func=cmd_sample)

    q = sub.add_parser("transform", help="swap sequence from one realization to another")
    q.add_argument("g1")
    q.add_argument("g2")
    q.set_defaults(func=cmd_transform)

    q = sub.add_parser("decompose", help="circuits and cycles of a pairing")
    q.add_argument("x")
    q.add_argument("y")
    q.add_argument("--seed", type=int, default=DEFAULT_SEED)
    q.add_argument("--all", action="store_true")
    q.set_defaults(func=cmd_decompose)

    q = sub.add_parser("canonical-path", help="the canonical path for one pairing")
    q.add_argument("x")
    q.add_argument("y")
    q.add_argument("--seed", type=int, default=DEFAULT_SEED)
    q.add_argument("--pairing-index", type=int, default=None)
    q.add_argument("--certify", action="store_true")
    q.set_defaults(func=cmd_canonical_path)

    q = sub.add_parser("mix-report", help="exact mixing diagnostics as CSV")
    q.add_argument("--ds", required=True)
    q.add_argument("--eps", type=float, default=0.01)
    q.set_defaults(func=cmd_mix_report)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DegSwapError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
