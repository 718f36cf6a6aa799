"""Named graph families and their closed-form distance spectra.

Notation follows the usual shorthand:

* ``T1 = K4 u K1``, ``T2 = K3 u 2K1``, ``T3 = K3 u K1``, ``T4(m, n) = mK2 u nK1``
* ``S(m, n) = (mK2 u nK1) v (K5 u K1)``
* ``KrJoin(r, T)`` is ``K_r v T`` and ``TJoin(T, T')`` is ``T v T'``
* ``Friendship(k) = K1 v kK2``

Every closed form is a multiset of fixed integer eigenvalues plus the real
roots of one integer polynomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Union

from .graph import Graph, complete, copies, disjoint_union, join
from .linalg import IntPolynomial


class FamilyError(ValueError):
    pass


def _union_of_cliques(blocks: list[tuple[int, int]]) -> Graph:
    """``blocks`` is a list of (clique size, count)."""
    parts = [copies(complete(s), c) for s, c in blocks if c > 0]
    if not parts:
        raise FamilyError("empty union")
    return disjoint_union(*parts)


@dataclass(frozen=True)
class T:
    """One of the disjoint-union-of-cliques pieces ``T1..T4``."""

    kind: int
    m: int = 0
    n: int = 0

    def __post_init__(self) -> None:
        if self.kind not in (1, 2, 3, 4):
            raise FamilyError(f"unknown piece T{self.kind}")
        if self.kind == 4:
            if self.m < 0 or self.n < 0 or self.m + self.n < 2:
                raise FamilyError(f"T4({self.m},{self.n}) needs m, n >= 0 and m + n >= 2")
        elif self.m or self.n:
            raise FamilyError(f"T{self.kind} takes no parameters")

    @property
    def order(self) -> int:
        return {1: 5, 2: 5, 3: 4}.get(self.kind, 2 * self.m + self.n)

    def blocks(self) -> list[tuple[int, int]]:
        return {
            1: [(4, 1), (1, 1)],
            2: [(3, 1), (1, 2)],
            3: [(3, 1), (1, 1)],
            4: [(2, self.m), (1, self.n)],
        }[self.kind]

    def graph(self) -> Graph:
        return _union_of_cliques(self.blocks())

    def __str__(self) -> str:
        return f"T4({self.m},{self.n})" if self.kind == 4 else f"T{self.kind}"


@dataclass(frozen=True)
class S:
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            raise FamilyError(f"S({self.m},{self.n}) needs m, n >= 0 and m + n >= 1")

    @property
    def order(self) -> int:
        return 2 * self.m + self.n + 6

    def graph(self) -> Graph:
        return join(_union_of_cliques([(2, self.m), (1, self.n)]), _union_of_cliques([(5, 1), (1, 1)]))

    def __str__(self) -> str:
        return f"S({self.m},{self.n})"


@dataclass(frozen=True)
class KrJoin:
    r: int
    rhs: T

    def __post_init__(self) -> None:
        if self.r < 1:
            raise FamilyError("K_r needs r >= 1")

    @property
    def order(self) -> int:
        return self.r + self.rhs.order

    def graph(self) -> Graph:
        return join(complete(self.r), self.rhs.graph())

    def __str__(self) -> str:
        return f"K{self.r}v{self.rhs}"


@dataclass(frozen=True)
class TJoin:
    lhs: T
    rhs: T

    @property
    def order(self) -> int:
        return self.lhs.order + self.rhs.order

    def graph(self) -> Graph:
        return join(self.lhs.graph(), self.rhs.graph())

    def __str__(self) -> str:
        return f"{self.lhs}v{self.rhs}"


@dataclass(frozen=True)
class Friendship:
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise FamilyError("F_k needs k >= 1")

    @property
    def order(self) -> int:
        return 2 * self.k + 1

    def graph(self) -> Graph:
        return join(complete(1), copies(complete(2), self.k))

    def canonical(self) -> FamilySpec:
        return KrJoin(1, T(4, self.k, 0)) if self.k >= 2 else self

    def __str__(self) -> str:
        return f"F({self.k})"


FamilySpec = Union[S, KrJoin, TJoin, Friendship]


def build_family(spec: FamilySpec) -> Graph:
    return spec.graph()


# -- text form -----------------------------------------------------------------

_PIECE = r"T[123]|T4\(\d+,\d+\)"


def _parse_piece(text: str) -> T:
    if text in ("T1", "T2", "T3"):
        return T(int(text[1]))
    m = re.fullmatch(r"T4\((\d+),(\d+)\)", text)
    if not m:
        raise FamilyError(f"cannot parse piece {text!r}")
    return T(4, int(m[1]), int(m[2]))


def parse_family(text: str, params: list[int] | None = None) -> FamilySpec:
    """Parse ``S(2,1)``, ``K3vT1``, ``K2vT4(3,0)``, ``T1vT4(1,1)``, ``F(3)``.

    ``params`` lets a bare tag take its numbers separately: ``("S", [2, 1])``.
    """
    s = text.replace(" ", "")
    if params:
        s = f"{s}({','.join(map(str, params))})"
    if m := re.fullmatch(r"S\((\d+),(\d+)\)", s):
        return S(int(m[1]), int(m[2]))
    if m := re.fullmatch(r"F\((\d+)\)", s):
        return Friendship(int(m[1]))
    if m := re.fullmatch(rf"K(\d+)v({_PIECE})", s):
        return KrJoin(int(m[1]), _parse_piece(m[2]))
    if m := re.fullmatch(rf"K\((\d+)\)v({_PIECE})", s):
        return KrJoin(int(m[1]), _parse_piece(m[2]))
    if m := re.fullmatch(rf"({_PIECE})v({_PIECE})", s):
        return TJoin(_parse_piece(m[1]), _parse_piece(m[2]))
    raise FamilyError(f"cannot parse family {text!r}")


# -- closed forms -----------------------------------------------------------------

@dataclass(frozen=True)
class ClosedFormSpectrum:
    """``fixed`` integer eigenvalues with multiplicities plus the real roots of ``poly``."""

    fixed: tuple[tuple[int, int], ...]
    poly: IntPolynomial
    order: int
    row: str

    def __post_init__(self) -> None:
        if self.poly.degree + sum(m for _, m in self.fixed) != self.order:
            raise FamilyError(f"closed form for {self.row} does not account for {self.order} eigenvalues")

    def multiplicity(self, lam: int) -> int:
        """Exact multiplicity of the integer ``lam`` (fixed part plus polynomial roots)."""
        fixed = sum(m for v, m in self.fixed if v == lam)
        return fixed + self.poly.multiplicity_of_root(lam)


def _P(*desc: int) -> IntPolynomial:
    return IntPolynomial.from_descending(desc)


def _fixed(**kw: int) -> tuple[tuple[int, int], ...]:
    # keys like m1 -> -1, m2 -> -2, p1 -> 1
    out = []
    for key, mult in kw.items():
        val = int(key[1:]) * (-1 if key[0] == "m" else 1)
        if mult < 0:
            raise FamilyError(f"negative multiplicity for {val}")
        if mult:
            out.append((val, mult))
    return tuple(out)


# irrational parts of the parameter-free rows, from their natural block partitions
_CONSTANT_ROWS: dict[str, tuple[tuple[tuple[int, int], ...], IntPolynomial]] = {
    "T1vT1": (_fixed(p1=1, m1=6, m3=1), _P(1, -8, -29)),
    "T1vT2": (_fixed(m1=5, m2=1, m3=1), _P(1, -10, -19, 46)),
    "T1vT3": (_fixed(m1=5), _P(1, -5, -42, -34, 62)),
    "T2vT2": (_fixed(p2=1, m1=4, m2=2, m3=1), _P(1, -9, -34)),
    "T2vT3": (_fixed(m1=4, m2=1), _P(1, -6, -44, -18, 100)),
    "T3vT3": (_fixed(m1=4), _P(1, -6, -22) * _P(1, 2, -2)),
}


def _t4_pair(a: T, b: T) -> ClosedFormSpectrum:
    # orient so that the "richer" side comes first: mixed, then pure K2, then pure K1
    def rank(t: T) -> int:
        return 0 if t.m and t.n else (1 if t.m else 2)

    if rank(a) > rank(b):
        a, b = b, a
    m1, n1, m2, n2 = a.m, a.n, b.m, b.n
    order = 2 * (m1 + m2) + n1 + n2
    sm, sn = m1 + m2, n1 + n2
    key = (rank(a), rank(b))
    if key == (0, 0):
        fixed = _fixed(m1=sm, m2=sn - 2, m3=sm - 2)
        poly = _P(
            1,
            10 - 4 * sm - 2 * sn,
            12 * m1 * m2 - 28 * sm - 16 * sn + 6 * (m1 * n2 + m2 * n1) + 3 * n1 * n2 + 37,
            48 * m1 * m2 - 64 * sm - 42 * sn + 30 * (m1 * n2 + m2 * n1) + 18 * n1 * n2 + 60,
            -(48 * (sm - m1 * m2) + 36 * sn - 36 * (m1 * n2 + m2 * n1) - 27 * n1 * n2 - 36),
        )
        row = "T4(m1,n1)vT4(m2,n2)"
    elif key == (0, 1):
        fixed = _fixed(m1=sm, m2=n1 - 1, m3=sm - 2)
        poly = _P(
            1,
            8 - 4 * sm - 2 * n1,
            12 * m1 * m2 - 20 * sm - 12 * n1 + 6 * m2 * n1 + 21,
            -24 * sm + 18 * m2 * n1 + 24 * m1 * m2 - 18 * n1 + 18,
        )
        row = "T4(m1,n1)vT4(m2,0)"
    elif key == (0, 2):
        fixed = _fixed(m1=m1, m2=sn - 2, m3=m1 - 1)
        poly = _P(
            1,
            7 - 2 * sn - 4 * m1,
            6 * m1 * n2 - 10 * sn - 16 * m1 + 3 * n1 * n2 + 16,
            -12 * sn + 12 * m1 * n2 + 9 * n1 * n2 - 16 * m1 + 12,
        )
        row = "T4(m1,n1)vT4(0,n2)"
    elif key == (1, 1):
        fixed = _fixed(m1=sm, m3=sm - 2)
        poly = _P(1, 6 - 4 * sm, -12 * sm + 12 * m1 * m2 + 9)
        row = "T4(m1,0)vT4(m2,0)"
    elif key == (1, 2):
        fixed = _fixed(m1=m1, m2=n2 - 1, m3=m1 - 1)
        poly = _P(1, 5 - 4 * m1 - 2 * n2, 6 * m1 * n2 - 8 * m1 - 6 * n2 + 6)
        row = "T4(m1,0)vT4(0,n2)"
    else:
        fixed = _fixed(m2=sn - 2)
        poly = _P(1, 4 - 2 * sn, -4 * sn + 3 * n1 * n2 + 4)
        row = "T4(0,n1)vT4(0,n2)"
    return ClosedFormSpectrum(fixed, poly, order, row)


def _piece_with_t4(i: int, t: T) -> ClosedFormSpectrum:
    m, n = t.m, t.n
    order = 5 + 2 * m + n if i in (1, 2) else 4 + 2 * m + n
    mixed, pure_m = m and n, m and not n
    table: dict[tuple[int, str], Callable[[], tuple]] = {
        (1, "mn"): lambda: (_fixed(m1=m + 3, m2=n - 1, m3=m - 1),
                            _P(1, 2 - 2 * n - 4 * m, -(6 * m + 5 * n + 25), 42 * m + 22 * n - 98, 76 * m + 57 * n - 96)),
        (1, "m"): lambda: (_fixed(m1=m + 3, m3=m - 1), _P(1, -4 * m, 2 * m - 25, 38 * m - 48)),
        (1, "n"): lambda: (_fixed(m1=3, m2=n - 1), _P(1, -(2 * n + 1), n - 22, 19 * n - 32)),
        (2, "mn"): lambda: (_fixed(m1=m + 2, m2=n, m3=m - 1),
                            _P(1, 1 - 2 * n - 4 * m, -(2 * m + 3 * n + 34), 64 * m + 35 * n - 124, 104 * m + 78 * n - 120)),
        (2, "m"): lambda: (_fixed(m1=m + 2, m2=1, m3=m - 1), _P(1, -(4 * m + 1), 6 * m - 32, 52 * m - 60)),
        (2, "n"): lambda: (_fixed(m1=2, m2=n), _P(1, -(2 * n + 2), 3 * n - 28, 26 * n - 40)),
        (3, "mn"): lambda: (_fixed(m1=m + 2, m2=n - 1, m3=m - 1),
                            _P(1, 3 - 2 * n - 4 * m, -(8 * m + 6 * n + 16), 28 * m + 14 * n - 72, 56 * m + 42 * n - 72)),
        (3, "m"): lambda: (_fixed(m1=m + 2, m3=m - 1), _P(1, -(4 * m - 1), -18, 28 * m - 36)),
        (3, "n"): lambda: (_fixed(m1=2, m2=n - 1), _P(1, -2 * n, -16, 14 * n - 24)),
    }
    shape = "mn" if mixed else ("m" if pure_m else "n")
    fixed, poly = table[(i, shape)]()
    row = f"T{i}vT4({'m' if m else 0},{'n' if n else 0})"
    return ClosedFormSpectrum(fixed, poly, order, row)


def _kr_join(r: int, t: T) -> ClosedFormSpectrum:
    order = r + t.order
    if t.kind == 1:
        return ClosedFormSpectrum(_fixed(m1=r + 2), _P(1, -(r + 2), -(2 * r + 19), 3 * r - 16), order, "KrvT1")
    if t.kind == 2:
        return ClosedFormSpectrum(_fixed(m1=r + 1, m2=1), _P(1, -(r + 3), -(r + 24), 6 * r - 20), order, "KrvT2")
    if t.kind == 3:
        return ClosedFormSpectrum(_fixed(m1=r + 1), _P(1, -(r + 1), -(2 * r + 14), 2 * r - 12), order, "KrvT3")
    m, n = t.m, t.n
    if m and n:
        return ClosedFormSpectrum(
            _fixed(m1=m + r - 1, m2=n - 1, m3=m - 1),
            _P(1, 6 - 2 * n - 4 * m - r, 2 * m * r - 8 * n - 5 * r - 12 * m + n * r + 11,
               -(8 * m + 6 * n + 6 * r - 4 * m * r - 3 * n * r - 6)),
            order, "KrvT4(m,n)")
    if m:
        return ClosedFormSpectrum(_fixed(m1=m + r - 1, m3=m - 1),
                                  _P(1, 4 - r - 4 * m, 2 * m * r - 4 * m - 3 * r + 3), order, "KrvT4(m,0)")
    return ClosedFormSpectrum(_fixed(m1=r - 1, m2=n - 1),
                              _P(1, 3 - r - 2 * n, n * r - 2 * n - 2 * r + 2), order, "KrvT4(0,n)")


def _s(m: int, n: int) -> ClosedFormSpectrum:
    order = 2 * m + n + 6
    if (m, n) == (0, 1):
        return ClosedFormSpectrum(_fixed(m1=4), _P(1, -4, -26, -16), order, "S(0,1)")
    if m and n:
        return ClosedFormSpectrum(_fixed(m1=m + 4, m2=n - 1, m3=m),
                                  _P(1, -(2 * n + 4 * m + 2), 2 * n + 8 * m - 28, 32 * m + 24 * n - 40), order, "S(m,n)")
    if m:
        # also covers S(1,0)
        return ClosedFormSpectrum(_fixed(m1=m + 4, m3=m), _P(-1, 4 * m + 4, 20 - 16 * m), order,
                                  "S(1,0)" if m == 1 else "S(m,0)")
    return ClosedFormSpectrum(_fixed(m1=4, m2=n - 1), _P(1, -(2 * n + 2), 2 * n - 28, 24 * n - 40), order, "S(0,n)")


def expected_spectrum(spec: FamilySpec) -> ClosedFormSpectrum:
    if isinstance(spec, Friendship):
        if spec.k == 1:
            return ClosedFormSpectrum(_fixed(m1=2), _P(1, -2), 3, "K3")
        spec = spec.canonical()
    if isinstance(spec, S):
        return _s(spec.m, spec.n)
    if isinstance(spec, KrJoin):
        return _kr_join(spec.r, spec.rhs)
    if isinstance(spec, TJoin):
        a, b = sorted((spec.lhs, spec.rhs), key=lambda t: t.kind)
        if b.kind <= 3:
            fixed, poly = _CONSTANT_ROWS[f"T{a.kind}vT{b.kind}"]
            return ClosedFormSpectrum(fixed, poly, spec.order, f"T{a.kind}vT{b.kind}")
        if a.kind <= 3:
            return _piece_with_t4(a.kind, b)
        return _t4_pair(a, b)
    raise FamilyError(f"not a family spec: {spec!r}")


def family_grid(r_max: int = 4, p_max: int = 5) -> list[FamilySpec]:
    """Every family instance with r in [1, r_max] and each of m, n in [0, p_max]."""
    pieces = [T(1), T(2), T(3)] + [T(4, m, n) for m in range(p_max + 1) for n in range(p_max + 1) if m + n >= 2]
    out: list[FamilySpec] = [S(m, n) for m in range(p_max + 1) for n in range(p_max + 1) if m + n >= 1]
    out += [KrJoin(r, t) for r in range(1, r_max + 1) for t in pieces]
    for i, a in enumerate(pieces):
        for b in pieces[i:]:
            out.append(TJoin(a, b))
    return out


def h_family_instances(max_order: int) -> list[FamilySpec]:
    """The three families with exactly two eigenvalues outside {-1, -3}, up to ``max_order``."""
    out: list[FamilySpec] = []
    for m in range(1, max_order):
        if 2 * m + 6 <= max_order:
            out.append(S(m, 0))
    for r in range(1, max_order + 1):
        for m in range(2, max_order + 1):
            if r + 2 * m <= max_order:
                out.append(KrJoin(r, T(4, m, 0)))
    for m1 in range(2, max_order + 1):
        for m2 in range(m1, max_order + 1):
            if 2 * (m1 + m2) <= max_order:
                out.append(TJoin(T(4, m1, 0), T(4, m2, 0)))
    return out
