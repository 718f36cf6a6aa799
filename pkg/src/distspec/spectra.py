"""Numerical distance spectra with exact reconciliation of integer eigenvalues."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, diameter, distance_matrix, induced_subgraph
from .linalg import shifted_rank

GROUP_TOL = 1e-6
EXACT_EIGENVALUES = (-1, -2, -3)
MAX_SWEEPS = 100


class NotSymmetric(ValueError):
    pass


class JacobiDidNotConverge(RuntimeError):
    pass


class ClusterMismatch(RuntimeError):
    """Float grouping disagrees with an exact rank count."""


class InterlacingPrecondition(ValueError):
    pass


def eigenvalues_sym(m, tol: float = 1e-12) -> list[float]:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending."""
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetric("matrix must be square")
    n = a.shape[0]
    if n and np.max(np.abs(a - a.T)) > 1e-12:
        raise NotSymmetric("matrix is not symmetric within 1e-12")
    a = (a + a.T) / 2
    frob = np.linalg.norm(a)
    target = tol * frob
    # zeroing entries this small moves eigenvalues far less than the stopping tolerance
    negligible = 1e-20 * frob
    for _ in range(MAX_SWEEPS):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= target:
            return sorted(np.diag(a).tolist())
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= negligible:
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                elif theta:
                    t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                else:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q]
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :]
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
    raise JacobiDidNotConverge(f"no convergence in {MAX_SWEEPS} sweeps")


@dataclass(frozen=True)
class Spectrum:
    """Descending eigenvalues with multiplicities.

    ``exact[i]`` is True when ``entries[i]`` is an integer eigenvalue whose
    multiplicity was certified by an exact rank computation.
    """

    entries: tuple[tuple[float, int], ...]
    exact: tuple[bool, ...]

    @property
    def order(self) -> int:
        return sum(m for _, m in self.entries)

    def values(self) -> list[float]:
        """All eigenvalues, descending, repeated by multiplicity."""
        return [v for v, m in self.entries for _ in range(m)]

    def __getitem__(self, i: int) -> float:
        """``spec[i]`` is the i-th largest eigenvalue, 1-based like the usual notation."""
        if not 1 <= i <= self.order:
            raise IndexError(i)
        return self.values()[i - 1]

    def multiplicity(self, value: float, tol: float = GROUP_TOL) -> int:
        return sum(m for v, m in self.entries if abs(v - value) < tol)

    def __str__(self) -> str:
        return format_spectrum(self.entries)


def format_spectrum(entries: Iterable[tuple[float, int]]) -> str:
    parts = []
    for v, m in entries:
        r = round(v)
        s = str(r) if abs(v - r) < 1e-9 else f"{v:.2f}"
        parts.append(s if m == 1 else f"({s})^{m}")
    return "[" + ", ".join(parts) + "]"


def group_eigenvalues(values: Sequence[float], tol: float = GROUP_TOL) -> list[tuple[float, int]]:
    """Cluster descending values; a gap between ``tol`` and ``10*tol`` is ambiguous."""
    vals = sorted(values, reverse=True)
    groups: list[list[float]] = []
    for v in vals:
        if groups and groups[-1][-1] - v < tol:
            groups[-1].append(v)
        else:
            if groups and groups[-1][-1] - v < 10 * tol:
                raise ClusterMismatch(f"ambiguous eigenvalue gap near {v:.9f}")
            groups.append([v])
    return [(sum(g) / len(g), len(g)) for g in groups]


def spectrum_from_matrix(d: Sequence[Sequence[int]]) -> Spectrum:
    n = len(d)
    groups = group_eigenvalues(eigenvalues_sym(d))
    exact_mult = {lam: n - shifted_rank(d, lam) for lam in EXACT_EIGENVALUES}
    entries = []
    flags = []
    seen = set()
    for v, m in groups:
        lam = round(v)
        if lam in exact_mult and abs(v - lam) < GROUP_TOL:
            if exact_mult[lam] != m:
                raise ClusterMismatch(f"eigenvalue {lam}: float cluster {m}, exact {exact_mult[lam]}")
            entries.append((float(lam), m))
            flags.append(True)
            seen.add(lam)
        else:
            entries.append((v, m))
            flags.append(False)
    for lam, m in exact_mult.items():
        if m and lam not in seen:
            raise ClusterMismatch(f"eigenvalue {lam} has exact multiplicity {m} but no float cluster")
    return Spectrum(tuple(entries), tuple(flags))


def distance_spectrum(g: Graph) -> Spectrum:
    return spectrum_from_matrix(distance_matrix(g).rows())


def spectra_equal(a: Spectrum, b: Spectrum, tol: float = 1e-7) -> bool:
    if a.order != b.order or len(a.entries) != len(b.entries):
        return False
    for (va, ma), (vb, mb), ea, eb in zip(a.entries, b.entries, a.exact, b.exact):
        if ma != mb or abs(va - vb) >= tol:
            return False
        if (ea or eb) and va != vb:
            return False
    return True


def interlaces(big: Sequence[float], small: Sequence[float], slack: float = 1e-8) -> bool:
    """Cauchy interlacing for descending lists: ``big[n-m+i] <= small[i] <= big[i]``."""
    lam = sorted(big, reverse=True)
    mu = sorted(small, reverse=True)
    n, m = len(lam), len(mu)
    if m > n:
        return False
    return all(lam[n - m + i] - slack <= mu[i] <= lam[i] + slack for i in range(m))


def interlacing_check(g: Graph, s: Iterable[int]) -> bool:
    """Do the distance eigenvalues of ``g[s]`` interlace those of ``g``?

    Only meaningful when ``g[s]`` is connected with diameter below 3, since
    then its distance matrix is a principal submatrix of ``D(g)``.
    """
    h = induced_subgraph(g, s)
    if not h.is_connected():
        raise InterlacingPrecondition("induced subgraph is disconnected")
    if diameter(h) >= 3:
        raise InterlacingPrecondition("induced subgraph has diameter >= 3")
    big = eigenvalues_sym(distance_matrix(g).rows())
    small = eigenvalues_sym(distance_matrix(h).rows())
    return interlaces(big, small)
