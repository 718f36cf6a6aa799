import pytest
from hypothesis import given, settings

from conftest import graphs
from oracles import brute_isomorphic, connected_atlas

from distspec import classify
from distspec.classify import (
    ClassifyPrecondition, PatternUnavailable, certified_bounds, classify_spectral, classify_structural,
    contains_induced, find_forbidden, forbidden_pattern, h_form, is_H_member, is_p4_free, join_decompose,
    multiplicity_certificates, p4_free_by_subsets, witness_rank,
)
from distspec.families import Friendship, KrJoin, S, T, TJoin, build_family
from distspec.graph import (
    complete, cycle, disjoint_union, distance_matrix, empty, join, parse_graph6, path, to_graph6,
)
from distspec.linalg import shifted_rank
from distspec.spectra import distance_spectrum

# smallest distance eigenvalue of interest for each drawn pattern: (index, value)
PATTERN_VALUES = {
    "C5": (3, -0.38), "H0": (3, -0.91), "H1": (3, -0.72), "H2": (3, -0.70), "H3": (3, -0.77),
    "H4": (3, -0.83), "H5": (6, -3.43), "I1": (8, -3.07), "I2": (7, -3.21), "I3": (9, -3.03), "I4": (7, -3.10),
}


@pytest.mark.parametrize("name", sorted(PATTERN_VALUES))
def test_pattern_values(name):
    i, v = PATTERN_VALUES[name]
    assert distance_spectrum(forbidden_pattern(name))[i] == pytest.approx(v, abs=0.005)


def test_p4_smallest_eigenvalue_is_minus_two_minus_root_two():
    assert distance_spectrum(forbidden_pattern("P4"))[4] == pytest.approx(-2 - 2 ** 0.5, abs=1e-12)


def test_patterns_violate_the_spectral_condition():
    for name, g in classify.available_patterns():
        assert not classify_spectral(g).in_class, name


def test_h6_is_configurable():
    assert classify.H6_GRAPH6 is None
    with pytest.raises(PatternUnavailable):
        forbidden_pattern("H6")
    try:
        classify.set_h6(to_graph6(cycle(6)))
        assert forbidden_pattern("H6") == cycle(6)
        assert "H6" in [n for n, _ in classify.available_patterns()]
        assert "H6" not in [n for n, _ in classify.available_patterns(include_h6=False)]
    finally:
        classify.set_h6(None)
    with pytest.raises(KeyError):
        forbidden_pattern("H9")


def test_contains_induced():
    emb = contains_induced(cycle(5), path(4))
    assert emb is not None and len(set(emb.values())) == 4
    g, p = cycle(5), path(4)
    assert all(p.has_edge(a, b) == g.has_edge(emb[a], emb[b]) for a in range(4) for b in range(4) if a != b)
    assert contains_induced(complete(5), path(3)) is None
    assert contains_induced(path(3), path(4)) is None
    assert all(contains_induced(build_family(S(1, 1)), pat) is None for _, pat in classify.available_patterns())


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7), graphs(max_n=4))
def test_induced_search_against_brute_force(g, pat):
    from itertools import combinations

    from distspec.graph import induced_subgraph

    want = any(brute_isomorphic(induced_subgraph(g, s), pat) for s in combinations(range(g.n), pat.n)) \
        if pat.n <= g.n else False
    assert (contains_induced(g, pat) is not None) == want


def test_join_decompose():
    assert [f.n for f in join_decompose(complete(4))] == [1, 1, 1, 1]
    fk = join_decompose(build_family(Friendship(3)))
    assert [f.n for f in fk] == [1, 6] and fk[1].num_edges == 3
    assert join_decompose(cycle(5)) == [cycle(5)]


def test_p4_free():
    assert is_p4_free(join(empty(2), empty(3), empty(1)))
    assert not is_p4_free(path(4))


@pytest.mark.parametrize("g", [g for g in connected_atlas(6)] + [cycle(7), path(7)], ids=to_graph6)
def test_p4_free_agrees_with_subset_definition(g):
    assert is_p4_free(g) == p4_free_by_subsets(g)


def test_structural_examples():
    v = classify_structural(join(complete(2), disjoint_union(complete(5), complete(1))))
    assert v.in_class and v.family == S(1, 0)
    v = classify_structural(join(complete(1), disjoint_union(complete(6), complete(1))))
    assert not v.in_class and v.witness["pattern"] == "I1"
    v = classify_structural(join(complete(3), disjoint_union(complete(5), complete(1))))
    assert not v.in_class and v.witness["pattern"] == "I3"
    assert classify_structural(build_family(S(3, 2))).family == S(3, 2)
    assert classify_structural(build_family(TJoin(T(2), T(4, 1, 3)))).family == TJoin(T(2), T(4, 1, 3))


def test_spectral_examples():
    assert not classify_spectral(path(4)).in_class
    assert classify_spectral(path(4)).witness["inertia_D+3I"][2] == 1
    assert classify_spectral(cycle(5)).witness["inertia_D+I"][0] == 3
    assert classify_spectral(build_family(S(2, 0))).in_class


@pytest.mark.parametrize("g", [complete(5), path(3), disjoint_union(path(2), path(2))], ids=to_graph6)
def test_precondition(g):
    with pytest.raises(ClassifyPrecondition):
        classify_structural(g)
    with pytest.raises(ClassifyPrecondition):
        classify_spectral(g)


def test_classifiers_agree_on_every_small_connected_graph():
    for g in connected_atlas(7):
        if g.n < 4 or g.is_complete():
            continue
        a, b = classify_structural(g), classify_spectral(g)
        assert a.in_class == b.in_class, to_graph6(g)
        if b.in_class:
            # members contain none of the drawn patterns
            assert find_forbidden(g) is None
        else:
            assert "pattern" in a.witness


H_FORMS_SMALL = [S(m, 0) for m in (1,)] + [KrJoin(r, T(4, m, 0)) for r in range(1, 4) for m in (2, 3) if r + 2 * m <= 7]


def test_h_membership_matches_forms_by_brute_force():
    forms = [build_family(s) for s in H_FORMS_SMALL]
    for g in connected_atlas(7):
        want = any(brute_isomorphic(g, f) for f in forms if f.n == g.n)
        assert is_H_member(g) == want == (h_form(g) is not None), to_graph6(g)
        if want:
            assert classify_spectral(g).in_class


def test_h_examples():
    assert is_H_member(build_family(Friendship(4)))
    assert is_H_member(build_family(S(3, 0)))
    assert not is_H_member(complete(6))
    assert h_form(build_family(TJoin(T(4, 2, 0), T(4, 2, 0)))) == TJoin(T(4, 2, 0), T(4, 2, 0))
    assert h_form(build_family(KrJoin(2, T(4, 2, 1)))) is None


def _exact_mult(g, lam):
    return g.n - shifted_rank(distance_matrix(g).rows(), lam)


def test_certificate_examples():
    g = build_family(KrJoin(3, T(4, 3, 2)))
    bounds = certified_bounds(multiplicity_certificates(g))
    assert bounds == {-1: 2 + 3, -2: 1, -3: 2}
    star = join(complete(1), empty(5))
    assert certified_bounds(multiplicity_certificates(star)) == {-2: 4}
    assert certified_bounds(multiplicity_certificates(build_family(Friendship(4))))[-3] == 3


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=2, max_n=9, connected=True))
def test_certificates_are_sound(g):
    certs = multiplicity_certificates(g)
    for lam, total in certified_bounds(certs).items():
        assert witness_rank(certs, lam) == total
        assert total <= _exact_mult(g, lam)


def test_certificates_on_parsed_graph():
    g = parse_graph6("D?{")
    assert certified_bounds(multiplicity_certificates(g)) == {-2: 3}
