"""Independent reference implementations used only by the tests."""

from fractions import Fraction
from itertools import permutations

import networkx as nx
import numpy as np
import sympy

from distspec.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


def nx_distance_matrix(g: Graph) -> list[list[int]]:
    d = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    return [[d[i][j] for j in range(g.n)] for i in range(g.n)]


def sympy_charpoly(m) -> list[int]:
    x = sympy.Symbol("x")
    return [int(c) for c in sympy.Matrix(m).charpoly(x).all_coeffs()]


def naive_rank(m) -> int:
    """Plain rational Gaussian elimination."""
    a = [[Fraction(v) for v in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if a else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def numpy_inertia(m, tol=1e-9) -> tuple[int, int, int]:
    ev = np.linalg.eigvalsh(np.array(m, dtype=float))
    return int((ev > tol).sum()), int((abs(ev) <= tol).sum()), int((ev < -tol).sum())


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    eg = set(map(frozenset, g.edges()))
    return any({frozenset((p[u], p[v])) for u, v in h.edges()} == eg for p in permutations(range(g.n)))


def connected_atlas(max_n: int = 7) -> list[Graph]:
    return [from_nx(h) for h in nx.graph_atlas_g()[1:] if h.number_of_nodes() <= max_n and nx.is_connected(h)]
