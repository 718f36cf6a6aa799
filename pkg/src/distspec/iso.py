"""Brute-force isomorphism and canonical forms for small graphs.

Search is pruned by colour refinement (1-dimensional Weisfeiler-Leman),
which is an isomorphism invariant, so it never discards a valid mapping.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterator

from .graph import Graph, _bits, disjoint_union, relabel

MAX_CANON_ORDER = 10


def refine_colors(g: Graph, colors: list[int] | None = None) -> list[int]:
    """Stable colouring; colour ids are canonical (derived from sorted signatures)."""
    n = g.n
    col = list(colors) if colors is not None else [0] * n
    while True:
        sigs = [(col[v], tuple(sorted(col[u] for u in _bits(g.adj[v])))) for v in range(n)]
        index = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [index[s] for s in sigs]
        if len(index) == len(set(col)):
            return new
        col = new


def _extend(g: Graph, h: Graph, cg: list[int], ch: list[int], order: list[int],
            mapping: dict[int, int], used: int) -> Iterator[dict[int, int]]:
    k = len(mapping)
    if k == len(order):
        yield dict(mapping)
        return
    v = order[k]
    for w in range(h.n):
        if used >> w & 1 or ch[w] != cg[v]:
            continue
        ok = True
        for u, x in mapping.items():
            if g.has_edge(v, u) != h.has_edge(w, x):
                ok = False
                break
        if ok:
            mapping[v] = w
            yield from _extend(g, h, cg, ch, order, mapping, used | 1 << w)
            del mapping[v]


def isomorphisms(g: Graph, h: Graph, fixed: dict[int, int] | None = None) -> Iterator[dict[int, int]]:
    """All isomorphisms ``g -> h`` (optionally extending ``fixed``), lazily."""
    if g.n != h.n or g.num_edges != h.num_edges:
        return
    both = refine_colors(disjoint_union(g, h))
    cg, ch = both[: g.n], both[g.n:]
    if sorted(cg) != sorted(ch):
        return
    mapping: dict[int, int] = {}
    used = 0
    for v, w in (fixed or {}).items():
        if cg[v] != ch[w]:
            return
        mapping[v] = w
        used |= 1 << w
    for v, w in mapping.items():
        for u, x in mapping.items():
            if g.has_edge(v, u) != h.has_edge(w, x):
                return
    # most constrained colour classes first
    size = {c: cg.count(c) for c in set(cg)}
    order = list(mapping) + sorted((v for v in range(g.n) if v not in mapping), key=lambda v: (size[cg[v]], v))
    yield from _extend(g, h, cg, ch, order, mapping, used)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return next(isomorphisms(g, h), None) is not None


def orbits(g: Graph) -> list[list[int]]:
    """Orbits of the automorphism group, via union-find over found automorphisms."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    col = refine_colors(g)
    for v in range(g.n):
        for w in range(v + 1, g.n):
            if col[v] != col[w] or find(v) == find(w):
                continue
            sigma = next(isomorphisms(g, g, {v: w}), None)
            if sigma is not None:
                for a, b in sigma.items():
                    ra, rb = find(a), find(b)
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(find(v), []).append(v)
    return sorted(cells.values())


def _code(g: Graph, perm: tuple[int, ...]) -> int:
    # upper-triangle bits in graph6 order under the relabelling perm[v] -> position
    inv = [0] * g.n
    for v, p in enumerate(perm):
        inv[p] = v
    code = 0
    for j in range(1, g.n):
        row = g.adj[inv[j]]
        for i in range(j):
            code = code << 1 | (row >> inv[i] & 1)
    return code


def canonical_form(g: Graph) -> Graph:
    """Canonical representative: among labelings that order vertices by refined colour,
    the one with the lexicographically largest upper-triangle bit string."""
    if g.n > MAX_CANON_ORDER:
        raise ValueError(f"canonical form is brute force; order {g.n} > {MAX_CANON_ORDER}")
    col = refine_colors(g)
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(col[v], []).append(v)
    blocks = [classes[c] for c in sorted(classes)]
    best_code = -1
    best_perm: tuple[int, ...] = ()
    for choice in product(*(permutations(b) for b in blocks)):
        perm = [0] * g.n
        pos = 0
        for block in choice:
            for v in block:
                perm[v] = pos
                pos += 1
        code = _code(g, tuple(perm))
        if code > best_code:
            best_code, best_perm = code, tuple(perm)
    return relabel(g, best_perm)
