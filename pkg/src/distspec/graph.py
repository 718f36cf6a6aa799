"""Simple undirected graphs stored as adjacency bitrows.

Vertices are ``0..n-1``. ``adj[v]`` is an int whose bit ``u`` is set iff
``uv`` is an edge. Values are immutable; every constructor returns a new graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 1024


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    pass


class DisconnectedGraph(GraphError):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside [0, {MAX_ORDER}]")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def is_complete(self) -> bool:
        return self.num_edges == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        return self.n > 0 and len(connected_components(self)) == 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, g6={to_graph6(self)!r})"


# -- graph6 -----------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = [chr(126)] + [chr(63 + (n >> s & 63)) for s in (12, 6, 0)]
    acc = nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6Error("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} at position {pos} outside 63..126")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated order header")
        if vals[1] == 63:
            raise Graph6Error("orders above 258047 are not supported")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        if n <= 62:
            raise Graph6Error("non-canonical long order header")
        body = vals[4:]
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise Graph6Error(f"truncated body: expected {need} bytes, got {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"trailing data: expected {need} bytes, got {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# -- constructors -------------------------------------------------------------

def complete(s: int) -> Graph:
    if s < 1:
        raise GraphError("complete graph needs at least one vertex")
    full = (1 << s) - 1
    return Graph(s, tuple(full ^ (1 << v) for v in range(s)))


def empty(s: int) -> Graph:
    """``s`` isolated vertices (sK1)."""
    if s < 1:
        raise GraphError("empty graph needs at least one vertex")
    return Graph(s, (0,) * s)


def path(s: int) -> Graph:
    return Graph.from_edges(s, [(i, i + 1) for i in range(s - 1)])


def cycle(s: int) -> Graph:
    if s < 3:
        raise GraphError("cycle needs at least three vertices")
    return Graph.from_edges(s, [(i, (i + 1) % s) for i in range(s)])


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    for h in graphs:
        shift = len(rows)
        if shift + h.n > MAX_ORDER:
            raise GraphError(f"combined order exceeds {MAX_ORDER}")
        rows.extend(r << shift for r in h.adj)
    return Graph(len(rows), tuple(rows))


def join(*graphs: Graph) -> Graph:
    u = disjoint_union(*graphs)
    full = (1 << u.n) - 1
    rows = list(u.adj)
    start = 0
    for h in graphs:
        block = ((1 << h.n) - 1) << start
        for v in range(start, start + h.n):
            rows[v] |= full & ~block
        start += h.n
    return Graph(u.n, tuple(rows))


def copies(g: Graph, k: int) -> Graph:
    """``k`` disjoint copies of ``g``."""
    return disjoint_union(*([g] * k))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    verts = sorted(set(s))
    if not verts:
        raise GraphError("induced subgraph of an empty vertex set")
    if verts[0] < 0 or verts[-1] >= g.n:
        raise GraphError("vertex out of range")
    rows = []
    for v in verts:
        row = g.adj[v]
        rows.append(sum(1 << i for i, u in enumerate(verts) if row >> u & 1))
    return Graph(len(verts), tuple(rows))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    rows = [0] * g.n
    for v in range(g.n):
        rows[perm[v]] = sum(1 << perm[u] for u in _bits(g.adj[v]))
    return Graph(g.n, tuple(rows))


# -- traversal ---------------------------------------------------------------

def connected_components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(list(_bits(comp)))
    return comps


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    d: tuple[tuple[int, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.d[ij[0]][ij[1]]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.d]

    def shifted(self, t: int) -> list[list[int]]:
        """Rows of ``D + t*I``."""
        return [[x + t if i == j else x for j, x in enumerate(r)] for i, r in enumerate(self.d)]

    def max(self) -> int:
        return max((max(r) for r in self.d), default=0)

    def principal(self, s: Sequence[int]) -> list[list[int]]:
        return [[self.d[i][j] for j in s] for i in s]


def distance_rows(g: Graph) -> list[list[int]]:
    n = g.n
    full = (1 << n) - 1
    out = []
    for src in range(n):
        row = [0] * n
        reached = frontier = 1 << src
        dist = 0
        while frontier:
            dist += 1
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~reached
            reached |= frontier
            for u in _bits(frontier):
                row[u] = dist
        if reached != full:
            raise DisconnectedGraph(f"vertex {src} cannot reach every vertex")
        out.append(row)
    return out


def distance_matrix(g: Graph) -> DistanceMatrix:
    if g.n == 0:
        raise DisconnectedGraph("the null graph has no distance matrix")
    return DistanceMatrix(g.n, tuple(tuple(r) for r in distance_rows(g)))


def diameter(g: Graph) -> int:
    return distance_matrix(g).max()
