"""Realizing a bipartite degree sequence and walking between realizations.

Every degree sequence pair that is graphical at all can be realized
greedily, and any two realizations are connected by a short sequence of
2x2 swaps.  This script builds two realizations of one sequence and prints
the constructive transformation between them next to the exact distance.
"""


from degswap import (BipartiteDegreeSequence, apply_swap, greedy_realize,
                     is_graphical, ryser_sequence, sample, swap_distance)

ds = BipartiteDegreeSequence((3, 2, 2, 1), (3, 2, 2, 1))
print("degree sequence:", ds.a, "|", ds.b, "graphical:", is_graphical(ds))

G = greedy_realize(ds)
print("\ngreedy realization:")
print(G.to_text())

H = sample(ds, steps=500, seed=11)
print("after 500 chain steps:")
print(H.to_text())

seq = ryser_sequence(G, H)
print(f"constructive sequence: {len(seq)} swaps (cap 2e = {2 * G.num_edges()})")
cur = G
for s in seq:
    cur = apply_swap(cur, s)
    print(f"  swap u{s.u1 + 1},u{s.u2 + 1} x v{s.v1 + 1},v{s.v2 + 1}")
assert cur == H

print("exact swap distance:", swap_distance(G, H))
