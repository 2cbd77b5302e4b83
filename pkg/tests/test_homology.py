import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import geometric_boundary, random_complex
from oracles import brute_betti, brute_cobetti
from spernerkit.chains import Chain, Cochain, coboundary
from spernerkit.complex import SimplicialMap, boundary_subcomplex, build_complex, standard_simplex
from spernerkit.errors import NotACocycleError, NotACycleError, NotASubcomplexError
from spernerkit.f2 import f2_rank
from spernerkit.homology import (
    HomologyClass,
    are_cohomologous,
    boundary_matrix,
    coboundary_matrix,
    cohomology_ranks,
    connecting_hom,
    homology_basis,
    homology_ranks,
    homology_subdivision_map,
    induced_on_homology,
    parity_functional,
)
from spernerkit.approximation import pseudo_identical_map
from spernerkit.subdivision import barycentric_subdivide, iterated_barycentric, random_stellar

D2 = standard_simplex(2).complex
CYCLE = build_complex([[0, 1], [0, 2], [1, 2]])
BD3 = boundary_subcomplex(standard_simplex(3).complex)


def test_boundary_matrix_of_triangle():
    M = boundary_matrix(D2, 2)
    assert (M.nrows, M.ncols) == (3, 1) and f2_rank(M) == 1


def test_homology_rank_examples():
    assert homology_ranks(D2) == [1, 0, 0]
    assert homology_ranks(CYCLE) == [1, 1]
    assert homology_ranks(BD3) == [1, 0, 1]


def test_cohomology_rank_examples():
    T = barycentric_subdivide(standard_simplex(2)).refined.complex
    assert cohomology_ranks(T, boundary_subcomplex(T))[2] == 1
    assert cohomology_ranks(D2)[0] == 1
    assert cohomology_ranks(CYCLE)[1] == 1
    with pytest.raises(NotASubcomplexError):
        cohomology_ranks(D2, build_complex([[0, 5]]))


@given(st.integers(0, 2 ** 31 - 1))
def test_ranks_match_enumeration(seed):
    K = random_complex(np.random.default_rng(seed), 5, 2)
    assert homology_ranks(K) == brute_betti(K)
    assert cohomology_ranks(K) == brute_cobetti(K)
    # absolute homology and cohomology agree over a field
    assert homology_ranks(K) == cohomology_ranks(K)


@given(st.integers(0, 2 ** 31 - 1))
def test_relative_ranks_match_enumeration(seed):
    rng = np.random.default_rng(seed)
    K = random_complex(rng, 5, 2)
    simp = list(K.simplices)
    Q = None
    picks = [simp[i] for i in rng.choice(len(simp), size=min(2, len(simp)), replace=False)]
    from spernerkit.complex import Complex
    Q = Complex.from_maximal(picks)
    assert cohomology_ranks(K, Q) == brute_cobetti(K, Q)


@given(st.integers(0, 2 ** 31 - 1))
def test_boundaries_inside_cycles(seed):
    K = random_complex(np.random.default_rng(seed))
    for m in range(K.dimension + 1):
        rank_b = f2_rank(boundary_matrix(K, m + 1))
        dim_z = K.count(m) - f2_rank(boundary_matrix(K, m))
        assert rank_b <= dim_z
        assert f2_rank(coboundary_matrix(K, m)) == f2_rank(boundary_matrix(K, m + 1))


def test_are_cohomologous_examples():
    T = barycentric_subdivide(standard_simplex(2)).refined.complex
    Q = boundary_subcomplex(T)
    tops = T.simplices_of_dim(2)
    b = Cochain.of(T, [tops[0]])
    assert are_cohomologous(b, b, Q)
    assert are_cohomologous(b, Cochain.of(T, [tops[3]]), Q)
    assert not are_cohomologous(Cochain.of(CYCLE, [(0, 1)]), Cochain.zero(CYCLE, 1))
    with pytest.raises(NotACocycleError):
        are_cohomologous(Cochain.of(D2, [(0, 1)]), Cochain.zero(D2, 1))


def test_connecting_hom_examples():
    S = standard_simplex(1).complex
    Q = build_complex([[0], [1]])
    img = connecting_hom(S, Q, HomologyClass(Cochain.of(Q, [(0,)])))
    assert img.representative.support == {(0, 1)} and not img.is_zero()
    zero = connecting_hom(S, Q, HomologyClass(Cochain.zero(Q, 0)))
    assert zero.is_zero()
    T = barycentric_subdivide(standard_simplex(2)).refined.complex
    dT = boundary_subcomplex(T)
    edge = dT.simplices_of_dim(1)[0]
    img = connecting_hom(T, dT, HomologyClass(Cochain.of(dT, [edge])))
    sigma = Cochain.of(T, [T.cofaces[edge][0]])
    assert img.same_as(HomologyClass(sigma, dT))
    with pytest.raises(NotACocycleError):
        connecting_hom(S, build_complex([[0, 1]]), Cochain.of(S, [(0,)]))


def test_connecting_ranks_differ_in_dimension_one():
    T = barycentric_subdivide(standard_simplex(1)).refined.complex
    dT = boundary_subcomplex(T)
    assert cohomology_ranks(dT) == [2]
    assert cohomology_ranks(T, dT)[1] == 1


def test_class_validation():
    with pytest.raises(NotACycleError):
        HomologyClass(Chain.of(D2, [(0, 1)]))
    with pytest.raises(NotACycleError):
        homology_subdivision_map(Chain.of(D2, [(0, 1)]), barycentric_subdivide(standard_simplex(2)))
    with pytest.raises(NotACocycleError):
        HomologyClass(Cochain.of(D2, [(0,)]))


def test_subdivision_map_examples():
    G = geometric_boundary(2)
    sub = barycentric_subdivide(G)
    gen = HomologyClass(Chain.of(G.complex, G.complex.simplices_of_dim(1)))
    img = homology_subdivision_map(gen, sub)
    assert not img.is_zero() and len(img.representative) == 6
    assert homology_subdivision_map(HomologyClass(Chain.zero(G.complex, 1)), sub).is_zero()
    pt = homology_subdivision_map(HomologyClass(Chain.of(G.complex, [(0,)])), sub)
    assert pt.representative.support == {(0,)}


def test_induced_on_homology_examples():
    S = standard_simplex(2)
    sub = barycentric_subdivide(S)
    phi = pseudo_identical_map(sub)
    for m in range(3):
        for z in homology_basis(S.complex, m):
            h = HomologyClass(z)
            back = induced_on_homology(phi, homology_subdivision_map(h, sub))
            assert back.same_as(h)
    E = standard_simplex(1).complex
    P = build_complex([[0]])
    collapse = SimplicialMap(E, P, {0: 0, 1: 0})
    h = induced_on_homology(collapse, HomologyClass(Chain.of(E, [(1,)])))
    assert h.representative.support == {(0,)} and not h.is_zero()
    with pytest.raises(NotACycleError):
        induced_on_homology(collapse, Chain.of(E, [(0, 1)]))


def test_stellar_invariance_both_ways(rng):
    for S in (standard_simplex(3), geometric_boundary(3)):
        for _ in range(5):
            sub, _ = random_stellar(S, rng)
            phi = pseudo_identical_map(sub)
            for m in range(S.complex.dimension + 1):
                for z in homology_basis(S.complex, m):
                    h = HomologyClass(z)
                    assert induced_on_homology(phi, homology_subdivision_map(h, sub)).same_as(h)
                for z in homology_basis(sub.refined.complex, m):
                    h = HomologyClass(z)
                    assert homology_subdivision_map(induced_on_homology(phi, h), sub).same_as(h)


def test_parity_functional():
    T = iterated_barycentric(standard_simplex(2), 1).refined.complex
    dT = boundary_subcomplex(T)
    assert parity_functional(Cochain.of(T, [T.simplices_of_dim(2)[0]])) == 1
    assert parity_functional(Cochain.zero(T, 2)) == 0
    for t in T.simplices_of_dim(1):
        if t not in dT:
            assert parity_functional(coboundary(Cochain.of(T, [t]))) == 0
