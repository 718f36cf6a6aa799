"""Distance equitable partitions and their divisor matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, distance_matrix
from .iso import orbits
from .linalg import char_poly, mat_mul, poly_divides, real_roots
from .spectra import eigenvalues_sym

MAX_ORBIT_ORDER = 10


class PartitionError(ValueError):
    pass


class NotEquitable(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    cells: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, n: int, cells: Iterable[Iterable[int]]) -> Partition:
        norm = [tuple(sorted(c)) for c in cells]
        if any(not c for c in norm):
            raise PartitionError("empty cell")
        flat = [v for c in norm for v in c]
        if sorted(flat) != list(range(n)):
            raise PartitionError(f"cells do not partition 0..{n - 1}")
        return cls(tuple(sorted(norm)))

    @classmethod
    def unit(cls, n: int) -> Partition:
        return cls((tuple(range(n)),))

    @classmethod
    def discrete(cls, n: int) -> Partition:
        return cls(tuple((v,) for v in range(n)))

    @property
    def k(self) -> int:
        return len(self.cells)

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cells)

    def cell_of(self) -> list[int]:
        out = [0] * self.n
        for i, c in enumerate(self.cells):
            for v in c:
                out[v] = i
        return out

    def characteristic_matrix(self) -> list[list[int]]:
        where = self.cell_of()
        return [[int(where[v] == j) for j in range(self.k)] for v in range(self.n)]


def _check(g: Graph, p: Partition) -> None:
    if p.n != g.n:
        raise PartitionError(f"partition covers {p.n} vertices, graph has {g.n}")


def _cell_sums(d: Sequence[Sequence[int]], p: Partition) -> list[list[int]]:
    """``out[v][j] = d(v, V_j)``."""
    return [[sum(row[u] for u in cell) for cell in p.cells] for row in d]


def is_distance_equitable(g: Graph, p: Partition) -> bool:
    _check(g, p)
    sums = _cell_sums(distance_matrix(g).d, p)
    return all(all(sums[v] == sums[cell[0]] for v in cell) for cell in p.cells)


def refine_distance_equitable(g: Graph, seed: Partition | None = None) -> Partition:
    """Coarsest distance equitable partition refining ``seed`` (default: one cell).

    Every cell is split simultaneously by the vector of distance sums into the
    current cells, until the number of cells stops growing.
    """
    seed = seed or Partition.unit(g.n)
    _check(g, seed)
    d = distance_matrix(g).d
    p = seed
    while True:
        where = p.cell_of()
        sums = _cell_sums(d, p)
        groups: dict[tuple, list[int]] = {}
        for v in range(g.n):
            groups.setdefault((where[v], tuple(sums[v])), []).append(v)
        q = Partition.of(g.n, groups.values())
        if q.k == p.k:
            return q
        p = q


def orbit_partition(g: Graph) -> Partition:
    if g.n > MAX_ORBIT_ORDER:
        raise PartitionError(f"orbit search is brute force; order {g.n} > {MAX_ORBIT_ORDER}")
    return Partition.of(g.n, orbits(g))


@dataclass(frozen=True)
class DivisorMatrix:
    b: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.b)

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.b]


def divisor_matrix(g: Graph, p: Partition, check_all: bool = False) -> DivisorMatrix:
    """Distance divisor matrix, read off the least vertex of each cell.

    With ``check_all`` every vertex is compared against its representative;
    the plain call relies on :func:`is_distance_equitable` having held.
    """
    if not is_distance_equitable(g, p):
        raise NotEquitable("partition is not distance equitable")
    sums = _cell_sums(distance_matrix(g).d, p)
    if check_all:
        for cell in p.cells:
            assert all(sums[v] == sums[cell[0]] for v in cell)
    return DivisorMatrix(tuple(tuple(sums[cell[0]]) for cell in p.cells))


def verify_commutation(g: Graph, p: Partition) -> bool:
    """``D C == C B`` in exact integer arithmetic."""
    b = divisor_matrix(g, p).rows()
    c = p.characteristic_matrix()
    d = distance_matrix(g).rows()
    return mat_mul(d, c) == mat_mul(c, b)


def verify_divisibility(g: Graph, p: Partition) -> bool:
    b = divisor_matrix(g, p).rows()
    return poly_divides(char_poly(b), char_poly(distance_matrix(g).rows()))


def divisor_radius(g: Graph, p: Partition) -> float:
    """Largest real root of ``det(xI - B)``."""
    return real_roots(char_poly(divisor_matrix(g, p).rows()))[-1][0]


def verify_radius(g: Graph, p: Partition, tol: float = 1e-8) -> bool:
    rho = max(eigenvalues_sym(distance_matrix(g).rows()))
    return abs(divisor_radius(g, p) - rho) <= tol
