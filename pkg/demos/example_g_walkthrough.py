"""Walk through the five-vector configuration G in three-space.

Run: python demos/example_g_walkthrough.py
"""
from powerideals import basis_monomials, example_g, flats_ideal_dims, hilbert_series, tutte
from powerideals.oracle import annihilation_check

G = example_g()
print("vectors:", [list(map(str, v)) for v in G.covectors])

T = tutte(G)
print("Tutte polynomial:", T)
print("bases:", T.evaluate(1, 1), " internal bases:", T.evaluate(0, 1))

# Closed form from the Tutte polynomial against a brute-force rank computation.
for k in (-2, -1, 0, 1):
    closed = hilbert_series(G, k)
    brute = flats_ideal_dims(G, k, G.n + 4)
    print(f"k={k:>2}  formula {list(closed.dims)}  linear algebra {list(brute.dims)}")

# An explicit monomial basis for the central space.
monos = basis_monomials(G, 0)
print(len(monos), "basis monomials for k=0, e.g.", ", ".join(str(m) for m in monos[:6]))
assert all(annihilation_check(G, 0, m.expand(G)) for m in monos)
print("each one is killed by the power ideal")
