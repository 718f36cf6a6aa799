"""Exact integer linear algebra and polynomial tools.

Nothing here touches floating point except the final conversion of isolated
roots to ``float``. Matrices are plain lists of rows of Python ints.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

IntMatrix = Sequence[Sequence[int]]


class IntPolynomial:
    """Univariate polynomial with integer coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def from_descending(cls, coeffs: Sequence[int]) -> IntPolynomial:
        return cls(list(reversed(coeffs)))

    @classmethod
    def from_roots(cls, roots: Sequence[int]) -> IntPolynomial:
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        o = _coerce(other).coeffs
        a = self.coeffs
        m = max(len(a), len(o))
        return IntPolynomial([(a[i] if i < len(a) else 0) + (o[i] if i < len(o) else 0) for i in range(m)])

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> IntPolynomial:
        return _coerce(other) - self

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        o = _coerce(other).coeffs
        a = self.coeffs
        if not a or not o:
            return IntPolynomial([])
        out = [0] * (len(a) + len(o) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(o):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> IntPolynomial:
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def primitive(self) -> IntPolynomial:
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = 0
        for c in self.coeffs:
            g = _gcd(g, c)
        s = -1 if self.leading < 0 else 1
        return IntPolynomial([s * c // g for c in self.coeffs])

    def multiplicity_of_root(self, r: int | Fraction) -> int:
        """Exact multiplicity of ``r`` as a root."""
        if self.is_zero():
            raise ValueError("zero polynomial")
        k = 0
        p = self
        while p(r) == 0:
            k += 1
            p = p.derivative()
        return k

    def descending(self) -> list[int]:
        return list(reversed(self.coeffs))

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                body = ("" if a == 1 else str(a)) + ("x" if i == 1 else f"x^{i}")
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(p: IntPolynomial | int) -> IntPolynomial:
    return p if isinstance(p, IntPolynomial) else IntPolynomial([p])


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


# -- rational polynomial helpers (ascending lists of Fraction) -----------------

def _rat_divmod(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        c = num[-1] / lead
        q[shift] = c
        for i, d in enumerate(den):
            num[i + shift] -= c * d
        num.pop()
        while num and num[-1] == 0:
            num.pop()
    return q, num


def _to_int_poly(coeffs: Sequence[Fraction]) -> IntPolynomial:
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // _gcd(lcm, c.denominator)
    return IntPolynomial([int(c * lcm) for c in coeffs]).primitive()


def poly_divmod(q: IntPolynomial, p: IntPolynomial) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder of ``q / p`` over the rationals."""
    if p.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    return _rat_divmod([Fraction(c) for c in q.coeffs], [Fraction(c) for c in p.coeffs])


def poly_divides(p: IntPolynomial, q: IntPolynomial) -> bool:
    """True iff ``p`` divides ``q`` over the rationals."""
    _, rem = poly_divmod(q, p)
    return not rem


def poly_quotient(q: IntPolynomial, p: IntPolynomial) -> IntPolynomial:
    """Exact quotient ``q / p``; raises if the division is not exact or not integral."""
    quo, rem = poly_divmod(q, p)
    if rem:
        raise ValueError(f"{p} does not divide {q}")
    if any(c.denominator != 1 for c in quo):
        raise ValueError("quotient has non-integer coefficients")
    return IntPolynomial([int(c) for c in quo])


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over the rationals (positive leading coefficient)."""
    x = [Fraction(c) for c in a.coeffs]
    y = [Fraction(c) for c in b.coeffs]
    while y:
        _, r = _rat_divmod(x, y)
        x, y = y, r
    if not x:
        return IntPolynomial([])
    return _to_int_poly(x)


def _rat_gcd(x: list[Fraction], y: list[Fraction]) -> list[Fraction]:
    while y:
        _, r = _rat_divmod(x, y)
        x, y = y, r
    lead = x[-1]
    return [c / lead for c in x]


def _rat_deriv(x: list[Fraction]) -> list[Fraction]:
    return [i * c for i, c in enumerate(x)][1:]


def _rat_sub(x: list[Fraction], y: list[Fraction]) -> list[Fraction]:
    m = max(len(x), len(y))
    out = [(x[i] if i < len(x) else 0) - (y[i] if i < len(y) else 0) for i in range(m)]
    while out and out[-1] == 0:
        out.pop()
    return out


def square_free_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: ``p = c * prod f_i^i`` with each ``f_i`` square-free and pairwise coprime."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    f = [Fraction(c) for c in p.coeffs]
    if len(f) == 1:
        return []
    df = _rat_deriv(f)
    a = _rat_gcd(f, df)
    b, _ = _rat_divmod(f, a)
    c, _ = _rat_divmod(df, a)
    d = _rat_sub(c, _rat_deriv(b))
    out = []
    i = 1
    while len(b) > 1:
        g = _rat_gcd(b, d) if d else [c / b[-1] for c in b]
        if len(g) > 1:
            out.append((_to_int_poly(g), i))
        b, _ = _rat_divmod(b, g)
        if d:
            c, _ = _rat_divmod(d, g)
        else:
            c = []
        d = _rat_sub(c, _rat_deriv(b))
        i += 1
    return out


# -- matrices --------------------------------------------------------------------

def char_poly(m: IntMatrix) -> IntPolynomial:
    """``det(xI - m)`` by Berkowitz's division-free algorithm."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("char_poly needs a square matrix")
    # coefficient vector, descending powers
    v = [1]
    for k in range(n):
        a = m[k][k]
        col = [m[i][k] for i in range(k)]
        row = [m[k][j] for j in range(k)]
        # toeplitz column: 1, -a, -R C, -R M C, ..., -R M^{k-1} C
        t = [1, -a]
        w = col
        for _ in range(k):
            t.append(-sum(r * x for r, x in zip(row, w)))
            w = [sum(m[i][j] * w[j] for j in range(k)) for i in range(k)]
        nv = [0] * (k + 2)
        for i in range(k + 2):
            s = 0
            for j in range(min(i + 1, k + 1)):
                s += t[i - j] * v[j]
            nv[i] = s
        v = nv
    return IntPolynomial.from_descending(v)


def rank(m: IntMatrix) -> int:
    """Exact rank over the rationals via fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    prev = 1
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        pr = a[r]
        for i in range(r + 1, rows):
            ai = a[i]
            f = ai[c]
            a[i] = [(p * x - f * y) // prev for x, y in zip(ai, pr)]
        prev = p
        r += 1
        if r == rows:
            break
    return r


class Inertia(NamedTuple):
    n_pos: int
    n_zero: int
    n_neg: int


def inertia(m: IntMatrix) -> Inertia:
    """Inertia of a symmetric integer matrix by exact congruence.

    Symmetric Bareiss elimination: the working matrix is always the current
    Schur complement scaled by the previous pivot, so signs are tracked
    relative to that scale. An all-zero active diagonal is repaired with the
    unimodular congruence ``row_i += row_j, col_i += col_j``.
    """
    n = len(m)
    a = [list(map(int, row)) for row in m]
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("inertia needs a symmetric matrix")
    active = list(range(n))
    prev = 1
    pos = neg = 0
    while active:
        piv = next((i for i in active if a[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            for k in active:
                a[i][k] += a[j][k]
            for k in active:
                a[k][i] += a[k][j]
            piv = i
        p = a[piv][piv]
        if (p > 0) == (prev > 0):
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        col = {i: a[i][piv] for i in active}
        for i in active:
            ci = col[i]
            ai = a[i]
            for j in active:
                num = p * ai[j] - ci * a[piv][j]
                q, r = divmod(num, prev)
                assert r == 0, "Bareiss division must be exact"
                ai[j] = q
        prev = p
    return Inertia(pos, n - pos - neg, neg)


def inertia_shifted(d, t: int) -> Inertia:
    """Inertia of ``D + t*I`` for a distance matrix (or any symmetric int matrix)."""
    rows = d.shifted(t) if hasattr(d, "shifted") else [
        [x + t if i == j else x for j, x in enumerate(r)] for i, r in enumerate(d)]
    return inertia(rows)


def shifted_rank(m: IntMatrix, lam: int) -> int:
    """``rank(m - lam*I)``."""
    return rank([[x - lam if i == j else x for j, x in enumerate(r)] for i, r in enumerate(m)])


def mat_mul(a: IntMatrix, b: IntMatrix) -> list[list[int]]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


# -- real roots ------------------------------------------------------------------

def sturm_sequence(p: IntPolynomial) -> list[list[Fraction]]:
    seq = [[Fraction(c) for c in p.coeffs], [Fraction(c) for c in p.derivative().coeffs]]
    while seq[-1]:
        _, r = _rat_divmod(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    return [s for s in seq if s]


def _eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _sign_changes(seq: list[list[Fraction]], x: Fraction) -> int:
    changes = 0
    last = 0
    for s in seq:
        v = _eval(s, x)
        if v:
            sgn = 1 if v > 0 else -1
            if last and sgn != last:
                changes += 1
            last = sgn
    return changes


def count_roots(p: IntPolynomial, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``."""
    seq = sturm_sequence(p)
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def _root_bound(p: IntPolynomial) -> Fraction:
    lead = abs(p.leading)
    return 1 + Fraction(max((abs(c) for c in p.coeffs[:-1]), default=0), lead)


def isolate_real_roots(p: IntPolynomial, eps: float = 1e-10) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals ``[lo, hi]`` of width ``<= eps``, one per distinct real root of square-free ``p``."""
    if p.degree < 1:
        return []
    seq = sturm_sequence(p)
    bound = _root_bound(p)
    width = Fraction(eps)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound, _sign_changes(seq, -bound), _sign_changes(seq, bound))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        k = vlo - vhi
        if k == 0:
            continue
        if k == 1:
            out.append(_refine(p, lo, hi, width))
            continue
        mid = (lo + hi) / 2
        vmid = _sign_changes(seq, mid)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi, vmid, vhi))
    out.sort()
    return out


def _refine(p: IntPolynomial, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    # exactly one root in (lo, hi]; lo itself may be a root owned by the neighbouring
    # interval, so orient the bisection by the sign at hi
    if p(hi) == 0:
        return hi, hi
    shi = p(hi) > 0
    while hi - lo > width:
        mid = (lo + hi) / 2
        v = p(mid)
        if v == 0:
            return mid, mid
        if (v > 0) == shi:
            hi = mid
        else:
            lo = mid
    return lo, hi


def real_roots(p: IntPolynomial, eps: float = 1e-10) -> list[tuple[float, int]]:
    """All real roots with multiplicities, ascending; each value within ``eps`` of the true root."""
    if p.is_zero():
        raise ValueError("zero polynomial has no isolated roots")
    if eps <= 0:
        raise ValueError("eps must be positive")
    roots = []
    for factor, mult in square_free_decomposition(p):
        for lo, hi in isolate_real_roots(factor, eps):
            roots.append((float((lo + hi) / 2), mult))
    roots.sort()
    return roots
