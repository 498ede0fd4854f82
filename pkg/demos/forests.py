"""Counting forests of a graph as the dimension of its central space.

For the graphic configuration of a graph, T(2, 1) counts its forests, which
is also the total dimension of the k = 0 inverse system.

Run: python demos/forests.py
"""
from itertools import combinations

from powerideals import graphic, hilbert_series, tutte


def is_forest(edges):
    parent = {}

    def find(v):
        while parent.setdefault(v, v) != v:
            v = parent[v]
        return v

    for u, v in edges:
        a, b = find(u), find(v)
        if a == b:
            return False
        parent[a] = b
    return True


for n in (3, 4, 5):
    edges = list(combinations(range(1, n + 1), 2))
    cfg = graphic(edges)
    brute = sum(is_forest(S) for s in range(len(edges) + 1) for S in combinations(edges, s))
    print(f"K{n}: {brute} forests, T(2,1) = {tutte(cfg).evaluate(2, 1)}, "
          f"dim of central space = {hilbert_series(cfg, 0).total}")
