import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from distspec.classify import is_p4_free
from distspec.families import (
    ClosedFormSpectrum, FamilyError, Friendship, KrJoin, S, T, TJoin, build_family, expected_spectrum,
    family_grid, h_family_instances, parse_family,
)
from distspec.graph import complete, distance_matrix, disjoint_union, join
from distspec.iso import are_isomorphic
from distspec.linalg import IntPolynomial, char_poly
from distspec.spectra import distance_spectrum

# two-decimal spectra printed for the parameter-free rows
CONSTANT_ROWS = {
    "S(0,1)": "[7.66, -0.71, (-1)^4, -2.96]",
    "S(1,0)": "[8.47, -0.47, (-1)^5, -3]",
    "T1vT1": "[10.71, 1, (-1)^6, -2.71, -3]",
    "T1vT2": "[11.32, 1.46, (-1)^5, -2, -2.78, -3]",
    "T1vT3": "[9.65, 0.85, (-1)^5, -2.60, -2.90]",
    "T2vT2": "[11.87, 2, (-1)^4, (-2)^2, -2.87, -3]",
    "T2vT3": "[10.34, 1.25, (-1)^4, -2, -2.63, -2.95]",
    "T3vT3": "[8.57, 0.73, (-1)^4, -2.57, -2.73]",
}


def full_poly(cf: ClosedFormSpectrum) -> IntPolynomial:
    p = cf.poly if cf.poly.leading > 0 else -cf.poly
    for v, m in cf.fixed:
        p = p * IntPolynomial.from_descending([1, -v]) ** m
    return p


def test_builders():
    assert build_family(S(0, 1)) == join(disjoint_union(complete(1)), disjoint_union(complete(5), complete(1)))
    assert build_family(S(0, 1)).n == 7
    f3 = build_family(Friendship(3))
    assert f3 == build_family(KrJoin(1, T(4, 3, 0)))
    assert f3.n == 7 and f3.num_edges == 9
    assert build_family(TJoin(T(4, 2, 0), T(4, 3, 0))).n == 10


@pytest.mark.parametrize("bad", [lambda: T(4, 1, 0), lambda: T(4, 0, 1), lambda: S(0, 0), lambda: T(1, 1, 0),
                                 lambda: T(5), lambda: KrJoin(0, T(1)), lambda: Friendship(0)])
def test_parameter_ranges(bad):
    with pytest.raises(FamilyError):
        bad()


def test_parse():
    assert parse_family("S(2,1)") == S(2, 1)
    assert parse_family("K3vT1") == KrJoin(3, T(1))
    assert parse_family("K2vT4", [3, 0]) == KrJoin(2, T(4, 3, 0))
    assert parse_family("T1 v T4(1,1)") == TJoin(T(1), T(4, 1, 1))
    assert parse_family("F", [3]) == Friendship(3)
    assert parse_family(str(TJoin(T(4, 2, 1), T(3)))) == TJoin(T(4, 2, 1), T(3))
    with pytest.raises(FamilyError):
        parse_family("Q(1)")


@pytest.mark.parametrize("name,printed", CONSTANT_ROWS.items())
def test_constant_rows_match_printed_values(name, printed):
    spec = parse_family(name)
    assert str(distance_spectrum(build_family(spec))) == printed
    assert full_poly(expected_spectrum(spec)) == char_poly(distance_matrix(build_family(spec)).rows())


def test_closed_form_examples():
    cf = expected_spectrum(KrJoin(2, T(4, 3, 0)))
    assert dict(cf.fixed) == {-1: 4, -3: 2}
    assert cf.poly.descending() == [1, 4 - 2 - 12, 12 - 12 - 6 + 3]
    cf = expected_spectrum(S(2, 3))
    assert dict(cf.fixed) == {-1: 6, -2: 2, -3: 2}
    assert cf.poly.descending() == [1, -16, 6 + 16 - 28, 64 + 72 - 40]
    assert expected_spectrum(Friendship(1)).order == 3


def test_grid_closed_forms_are_exact():
    """Every row over the grid reproduces the exact characteristic polynomial."""
    for spec in family_grid(4, 5):
        cf = expected_spectrum(spec)
        assert full_poly(cf) == char_poly(distance_matrix(build_family(spec)).rows()), (spec, cf.row)


def _t4_divisor_poly(m1, n1, m2, n2):
    x = sympy.Symbol("x")
    b = sympy.Matrix([[4 * m1 - 3, 2 * n1, 2 * m2, n2], [4 * m1, 2 * n1 - 2, 2 * m2, n2],
                      [2 * m1, n1, 4 * m2 - 3, 2 * n2], [2 * m1, n1, 4 * m2, 2 * n2 - 2]])
    return [int(c) for c in b.charpoly(x).all_coeffs()]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 6), st.integers(1, 6))
def test_mixed_t4_join_quartic_is_the_divisor_polynomial(m1, n1, m2, n2):
    cf = expected_spectrum(TJoin(T(4, m1, n1), T(4, m2, n2)))
    assert cf.poly.descending() == _t4_divisor_poly(m1, n1, m2, n2)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 8), st.integers(2, 8))
def test_k2_k1_join_quadratic(m1, n2):
    x = sympy.Symbol("x")
    b = sympy.Matrix([[4 * m1 - 3, n2], [2 * m1, 2 * n2 - 2]])
    cf = expected_spectrum(TJoin(T(4, 0, n2), T(4, m1, 0)))
    assert cf.poly.descending() == [int(c) for c in b.charpoly(x).all_coeffs()]


def test_join_orientation_does_not_matter():
    for a, b in [(T(1), T(4, 2, 1)), (T(4, 0, 3), T(4, 2, 2)), (T(4, 3, 0), T(4, 0, 2)), (T(3), T(2))]:
        assert full_poly(expected_spectrum(TJoin(a, b))) == full_poly(expected_spectrum(TJoin(b, a)))


def test_families_are_cographs():
    for spec in family_grid(2, 3):
        assert is_p4_free(build_family(spec))


def test_h_instances():
    specs = h_family_instances(10)
    assert S(1, 0) in specs and S(2, 0) in specs
    assert KrJoin(1, T(4, 2, 0)) in specs
    assert TJoin(T(4, 2, 0), T(4, 3, 0)) in specs
    assert all(build_family(s).n <= 10 for s in specs)
    for i, a in enumerate(specs):
        for b in specs[i + 1:]:
            assert not are_isomorphic(build_family(a), build_family(b))
