"""Membership in the class of connected graphs with -3 <= d_n and d_3 <= -1.

Two independent deciders live here: a structural one that reads the join
decomposition, and a spectral one that only counts inertia. The campaigns
check that they always agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .families import S, FamilySpec, KrJoin, T, TJoin
from .graph import (
    Graph, _bits, complement, complete, connected_components, cycle,
    disjoint_union, distance_matrix, empty, induced_subgraph, join, parse_graph6, path,
)
from .linalg import inertia_shifted, rank, shifted_rank


class ClassifyPrecondition(ValueError):
    """Input lies outside the class definition (disconnected, complete, or order < 4)."""


class PatternUnavailable(LookupError):
    pass


# -- forbidden patterns ---------------------------------------------------------

# no construction is known for H6; it can be supplied as graph6 at runtime
H6_GRAPH6: Optional[str] = None

PATTERN_NAMES = ("P4", "C5", "H0", "H1", "H2", "H3", "H4", "H5", "H6", "I1", "I2", "I3", "I4")


def set_h6(graph6: Optional[str]) -> None:
    global H6_GRAPH6
    if graph6 is not None:
        parse_graph6(graph6)
    H6_GRAPH6 = graph6


def _p4_plus(extra: Sequence[int]) -> Graph:
    # P4 on 0-1-2-3 plus vertex 4 joined to the given path vertices
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3)] + [(4, v) for v in extra])


def forbidden_pattern(name: str) -> Graph:
    k1, k2, k3, p3 = complete(1), complete(2), complete(3), path(3)
    builders = {
        "P4": lambda: path(4),
        "C5": lambda: cycle(5),
        "H0": lambda: _p4_plus([0, 3, 1]),
        "H1": lambda: _p4_plus([0, 3, 1, 2]),
        "H2": lambda: join(p3, p3),
        "H3": lambda: join(k1, disjoint_union(p3, k1)),
        "H4": lambda: join(p3, empty(2)),
        "H5": lambda: join(k1, disjoint_union(k3, k2)),
        "I1": lambda: join(k1, disjoint_union(complete(6), k1)),
        "I2": lambda: join(k1, disjoint_union(complete(4), empty(2))),
        "I3": lambda: join(k3, disjoint_union(complete(5), k1)),
        "I4": lambda: join(k1, disjoint_union(k3, empty(3))),
    }
    if name == "H6":
        if H6_GRAPH6 is None:
            raise PatternUnavailable("H6 has no construction; supply one with set_h6()")
        return parse_graph6(H6_GRAPH6)
    if name not in builders:
        raise KeyError(f"unknown pattern {name!r}")
    return builders[name]()


def available_patterns(include_h6: bool = True) -> list[tuple[str, Graph]]:
    """Patterns in search order: smallest first, then by name order."""
    out = []
    for name in PATTERN_NAMES:
        if name == "H6" and (not include_h6 or H6_GRAPH6 is None):
            continue
        out.append((name, forbidden_pattern(name)))
    out.sort(key=lambda item: item[1].n)
    return out


# -- induced subgraphs and cographs ------------------------------------------------

def contains_induced(g: Graph, pattern: Graph) -> Optional[dict[int, int]]:
    """First embedding (pattern vertex -> g vertex) preserving edges and non-edges."""
    k = pattern.n
    if k > g.n:
        return None
    # pattern vertices in BFS order from a max-degree vertex keeps the partial map connected
    order: list[int] = []
    seen = 0
    for start in sorted(range(k), key=lambda v: (-pattern.degree(v), v)):
        if seen >> start & 1:
            continue
        queue = [start]
        seen |= 1 << start
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in sorted(_bits(pattern.adj[v]), key=lambda u: (-pattern.degree(u), u)):
                if not seen >> u & 1:
                    seen |= 1 << u
                    queue.append(u)
    pdeg = [pattern.degree(v) for v in range(k)]
    gdeg = [g.degree(v) for v in range(g.n)]
    image = [-1] * k

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        v = order[i]
        for w in range(g.n):
            if used >> w & 1 or gdeg[w] < pdeg[v]:
                continue
            if all(pattern.has_edge(v, order[j]) == g.has_edge(w, image[order[j]]) for j in range(i)):
                image[v] = w
                if extend(i + 1, used | 1 << w):
                    return True
        image[v] = -1
        return False

    return {v: image[v] for v in range(k)} if extend(0, 0) else None


def join_factors(g: Graph) -> list[list[int]]:
    """Vertex sets of the maximal join factors (components of the complement)."""
    return connected_components(complement(g))


def join_decompose(g: Graph) -> list[Graph]:
    return [induced_subgraph(g, f) for f in join_factors(g)]


def is_p4_free(g: Graph) -> bool:
    return contains_induced(g, path(4)) is None


def p4_free_by_subsets(g: Graph) -> bool:
    """Cograph test by definition: every induced subgraph on >= 2 vertices is
    disconnected or has a disconnected complement. Exponential in n."""
    for size in range(2, g.n + 1):
        for s in combinations(range(g.n), size):
            h = induced_subgraph(g, s)
            if h.is_connected() and complement(h).is_connected():
                return False
    return True


# -- structural classification ----------------------------------------------------

@dataclass(frozen=True)
class ClassVerdict:
    in_class: bool
    method: str
    family: Optional[FamilySpec] = None
    witness: Optional[dict] = field(default=None)


def _clique_sizes(g: Graph) -> Optional[list[int]]:
    """Descending component sizes if every component is a clique, else None."""
    sizes = []
    for comp in connected_components(g):
        s = len(comp)
        if any(bin(g.adj[v]).count("1") != s - 1 for v in comp):
            return None
        sizes.append(s)
    return sorted(sizes, reverse=True)


def _piece(sizes: list[int]) -> Optional[T]:
    if sizes == [4, 1]:
        return T(1)
    if sizes == [3, 1, 1]:
        return T(2)
    if sizes == [3, 1]:
        return T(3)
    if sizes and max(sizes) <= 2 and len(sizes) >= 2:
        return T(4, sizes.count(2), sizes.count(1))
    return None


def _factor_shape(g: Graph) -> tuple[int, list[Optional[list[int]]]]:
    """Number of single-vertex factors and the clique-size lists of the others."""
    r = 0
    big = []
    for f in join_decompose(g):
        if f.n == 1:
            r += 1
        else:
            big.append(_clique_sizes(f))
    return r, big


def identify_family(g: Graph) -> Optional[FamilySpec]:
    """The family instance isomorphic to ``g``, read off its join factors, or None."""
    r, big = _factor_shape(g)
    if any(sizes is None for sizes in big):
        return None
    if len(big) == 1:
        sizes = big[0]
        if sizes == [5, 1] and r in (1, 2):
            return S(r - 1, 2 - r)
        piece = _piece(sizes)
        if piece is not None and r >= 1:
            return KrJoin(r, piece)
        return None
    if len(big) == 2 and r == 0:
        a, b = big
        for x, y in ((a, b), (b, a)):
            if x == [5, 1] and max(y) <= 2:
                return S(y.count(2), y.count(1))
        pa, pb = _piece(a), _piece(b)
        if pa is not None and pb is not None:
            return TJoin(pa, pb)
    return None


def _require_scope(g: Graph) -> None:
    if g.n < 4:
        raise ClassifyPrecondition(f"order {g.n} < 4")
    if not g.is_connected():
        raise ClassifyPrecondition("graph is disconnected")
    if g.is_complete():
        raise ClassifyPrecondition("graph is complete")


def find_forbidden(g: Graph, include_h6: bool = True) -> Optional[tuple[str, dict[int, int]]]:
    for name, pat in available_patterns(include_h6):
        emb = contains_induced(g, pat)
        if emb is not None:
            return name, emb
    return None


def classify_structural(g: Graph) -> ClassVerdict:
    _require_scope(g)
    fam = identify_family(g)
    if fam is not None:
        return ClassVerdict(True, "structural", family=fam)
    hit = find_forbidden(g)
    if hit is not None:
        name, emb = hit
        return ClassVerdict(False, "structural", witness={"pattern": name, "embedding": emb})
    return ClassVerdict(False, "structural", witness={"reason": "structural mismatch: join factors match no family"})


def classify_spectral(g: Graph) -> ClassVerdict:
    _require_scope(g)
    d = distance_matrix(g)
    plus1 = inertia_shifted(d, 1)
    plus3 = inertia_shifted(d, 3)
    ok = plus1.n_pos <= 2 and plus3.n_neg == 0
    witness = None
    if not ok:
        witness = {"inertia_D+I": tuple(plus1), "inertia_D+3I": tuple(plus3)}
    return ClassVerdict(ok, "spectral", witness=witness)


# -- exactly two eigenvalues outside {-1, -3} ---------------------------------------

def is_H_member(g: Graph) -> bool:
    d = distance_matrix(g).rows()
    return shifted_rank(d, -1) + shifted_rank(d, -3) == g.n + 2


def h_form(g: Graph) -> Optional[FamilySpec]:
    """Which of (K5 u K1) v mK2, K_r v mK2 (m >= 2), m1K2 v m2K2 (m1, m2 >= 2) ``g`` is."""
    if not g.is_connected():
        return None
    fam = identify_family(g)
    if isinstance(fam, S) and fam.n == 0:
        return fam
    if isinstance(fam, KrJoin) and fam.rhs.kind == 4 and fam.rhs.n == 0 and fam.rhs.m >= 2:
        return fam
    if isinstance(fam, TJoin) and all(t.kind == 4 and t.n == 0 and t.m >= 2 for t in (fam.lhs, fam.rhs)):
        return fam
    return None


# -- multiplicity certificates --------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """``lower_bound`` independent eigenvectors for ``eigenvalue``, each checked exactly."""

    eigenvalue: int
    lower_bound: int
    witnesses: tuple[tuple[int, ...], ...]
    groups: tuple[tuple[int, ...], ...]


def _closed_twin_classes(g: Graph) -> list[list[int]]:
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(g.adj[v] | 1 << v, []).append(v)
    return sorted(classes.values())


def _indicator(n: int, plus: Sequence[int], minus: Sequence[int]) -> tuple[int, ...]:
    x = [0] * n
    for v in plus:
        x[v] += 1
    for v in minus:
        x[v] -= 1
    return tuple(x)


def is_eigenvector(d: Sequence[Sequence[int]], x: Sequence[int], lam: int) -> bool:
    return any(x) and all(sum(a * b for a, b in zip(row, x)) == lam * xi for row, xi in zip(d, x))


def multiplicity_certificates(g: Graph, max_r: int = 3) -> list[Certificate]:
    d = distance_matrix(g).rows()
    n = g.n
    certs: list[Certificate] = []
    twins = _closed_twin_classes(g)

    # a clique whose vertices share their outside neighbourhood: -1 with multiplicity |S| - 1
    for cls in twins:
        if len(cls) >= 2:
            ws = tuple(_indicator(n, [cls[0]], [v]) for v in cls[1:])
            certs.append(Certificate(-1, len(ws), ws, (tuple(cls),)))

    # m disjoint r-cliques with a common outside neighbourhood: -(r+1) with multiplicity m - 1
    for r in range(1, max_r + 1):
        by_outside: dict[int, list[list[int]]] = {}
        for cls in twins:
            if len(cls) == r:
                mask = sum(1 << v for v in cls)
                by_outside.setdefault(g.adj[cls[0]] & ~mask, []).append(cls)
        for outside, cliques in sorted(by_outside.items()):
            if len(cliques) < 2:
                continue
            ws = tuple(_indicator(n, cliques[0], c) for c in cliques[1:])
            certs.append(Certificate(-(r + 1), len(ws), ws, tuple(tuple(c) for c in cliques)))

    for c in certs:
        if not all(is_eigenvector(d, x, c.eigenvalue) for x in c.witnesses):
            raise AssertionError(f"certificate for {c.eigenvalue} failed exact check")
    return certs


def certified_bounds(certs: Sequence[Certificate]) -> dict[int, int]:
    """Sum of lower bounds per eigenvalue (witness supports are disjoint across groups)."""
    out: dict[int, int] = {}
    for c in certs:
        out[c.eigenvalue] = out.get(c.eigenvalue, 0) + c.lower_bound
    return out


def witness_rank(certs: Sequence[Certificate], lam: int) -> int:
    vecs = [list(x) for c in certs if c.eigenvalue == lam for x in c.witnesses]
    return rank(vecs) if vecs else 0
