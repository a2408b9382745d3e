"""Decomposing the symmetric difference of two realizations.

At every vertex the symmetric difference has as many edges from one
realization as from the other, so the edges can be paired up vertex by
vertex.  Each such pairing glues the difference into closed alternating
circuits, which are then split into simple alternating cycles.  Different
pairings give different decompositions; this drives the path system used
by the congestion bound.
"""

from degswap import BipartiteGraph, all_pairings, decompose, enumerate_pairings_count

# symmetric difference: two 4-cycles sharing the first U-vertex
X = BipartiteGraph([[1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
Y = BipartiteGraph([[0, 1, 0, 1], [1, 0, 0, 0], [0, 0, 1, 0]])

print("pairings:", enumerate_pairings_count(X, Y))
for i, s in enumerate(all_pairings(X, Y)):
    dec = decompose(X, Y, s)
    print(f"\npairing {i}:")
    print("  circuit lengths:", [len(c) for c in dec.circuits])
    for j, cyc in enumerate(dec.cycles):
        verts = " ".join(f"{side}{idx + 1}" for side, idx in cyc.vertex_seq())
        print(f"  cycle {j}: {verts}")
