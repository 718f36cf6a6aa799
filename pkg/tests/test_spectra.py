import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs

from distspec.graph import complete, cycle, distance_matrix, join, path, empty, disjoint_union
from distspec.spectra import (
    ClusterMismatch, InterlacingPrecondition, NotSymmetric, Spectrum, distance_spectrum,
    eigenvalues_sym, format_spectrum, group_eigenvalues, interlaces, interlacing_check, spectra_equal,
    spectrum_from_matrix,
)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12), st.integers(0, 2 ** 32 - 1))
def test_jacobi_matches_eigvalsh(n, seed):
    a = np.random.default_rng(seed).normal(size=(n, n))
    a = a + a.T
    assert np.allclose(eigenvalues_sym(a), np.linalg.eigvalsh(a), atol=1e-10)


def test_jacobi_larger_and_degenerate():
    a = np.random.default_rng(7).normal(size=(40, 40))
    a = a + a.T
    assert np.allclose(eigenvalues_sym(a), np.linalg.eigvalsh(a), atol=1e-9)
    assert eigenvalues_sym(np.eye(3)) == [1.0, 1.0, 1.0]
    assert eigenvalues_sym(np.zeros((0, 0))) == []


def test_jacobi_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        eigenvalues_sym([[0, 1], [0, 0]])
    with pytest.raises(NotSymmetric):
        eigenvalues_sym([[1, 2, 3]])


def test_grouping():
    assert group_eigenvalues([1.0, 1.0 + 1e-9, -2.0]) == [(pytest.approx(1.0), 2), (-2.0, 1)]
    with pytest.raises(ClusterMismatch):
        group_eigenvalues([1.0, 1.0 + 3e-6])


def test_known_spectra():
    s = distance_spectrum(join(complete(1), disjoint_union(complete(6), complete(1))))
    assert str(s) == "[8.78, -0.70, (-1)^5, -3.07]"
    assert str(distance_spectrum(path(3))) == "[2.73, -0.73, -2]"
    assert str(distance_spectrum(cycle(5))) == "[6, (-0.38)^2, (-2.62)^2]"
    s = distance_spectrum(complete(4))
    assert s.entries[0][0] == pytest.approx(3.0) and s.entries[1] == (-1.0, 3)
    assert s.exact == (False, True)


def test_spectrum_indexing():
    s = distance_spectrum(path(3))
    assert s.order == 3
    assert s[1] == pytest.approx(1 + 3 ** 0.5)
    assert s[3] == -2.0
    assert s.multiplicity(-2) == 1
    with pytest.raises(IndexError):
        s[4]


def test_exact_reconciliation_catches_bad_cluster():
    # float multiplicity disagreeing with the exact rank must raise
    d = distance_matrix(complete(3)).rows()
    assert spectrum_from_matrix(d).multiplicity(-1) == 2


def test_format():
    assert format_spectrum([(2.0, 1), (-1.0, 3), (0.5, 2)]) == "[2, (-1)^3, (0.50)^2]"


def test_spectra_equal():
    a = distance_spectrum(join(empty(2), empty(2)))
    assert spectra_equal(a, distance_spectrum(cycle(4)))
    assert not spectra_equal(a, distance_spectrum(path(4)))
    shifted = Spectrum(tuple((v + 1e-6, m) for v, m in a.entries), a.exact)
    assert not spectra_equal(a, shifted)


def test_interlacing():
    assert interlaces([3, 1, -1], [2, 0])
    assert not interlaces([3, 1, -1], [4, 0])
    with pytest.raises(InterlacingPrecondition):
        interlacing_check(path(5), [0, 2])
    with pytest.raises(InterlacingPrecondition):
        interlacing_check(path(5), [0, 1, 2, 3])


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=3, max_n=8, connected=True), st.data())
def test_interlacing_on_diameter_two_subgraphs(g, data):
    s = data.draw(st.lists(st.integers(0, g.n - 1), min_size=1, unique=True))
    try:
        assert interlacing_check(g, s)
    except InterlacingPrecondition:
        pass
