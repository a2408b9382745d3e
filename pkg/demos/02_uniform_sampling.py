"""Sampling realizations uniformly with the swap chain.

The chain picks two U-vertices and two V-vertices uniformly at random and
swaps the induced 2x2 submatrix whenever it is a one-factor.  Its
stationary law is uniform over all realizations; here we check the
empirical histogram against the enumerated state space.
"""

from degswap import BipartiteDegreeSequence, sample
from degswap.mixing import enumerate_states

ds = BipartiteDegreeSequence((2, 2, 2), (3, 2, 1))
space = enumerate_states(ds)
print(f"{space.n} realizations of {ds.a} | {ds.b}")

counts = [0] * space.n
n_samples, steps = 3000, 200
for i in range(n_samples):
    g = sample(ds, steps=steps, seed=1000 + i)
    counts[space.index[g.key()]] += 1

print(f"\n{n_samples} samples at {steps} steps each:")
for i, c in enumerate(counts):
    bar = "#" * round(60 * c / n_samples)
    print(f"  state {i}: {c:5d}  {bar}")
print(f"uniform target: {n_samples // space.n} per state")
