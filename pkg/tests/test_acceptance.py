"""Acceptance criteria, one test each. The terminal summary prints a PASS/FAIL line per criterion."""
import io
import itertools
import time
from pathlib import Path

import numpy as np
import pytest

from conftest import geometric_boundary, random_complex
from spernerkit.approximation import pseudo_identical_map
from spernerkit.chains import (
    Chain,
    Cochain,
    boundary,
    coboundary,
    cone_chain,
    double_cone_chain,
    induced_chain_map,
    induced_cochain_map,
    pairing,
    subdivide_chain,
)
from spernerkit.cli import dispatch
from spernerkit.complex import Complex, SimplicialMap, boundary_subcomplex, standard_simplex
from spernerkit.fixpoint import approximate_fixed_point, builtin_map
from spernerkit.homology import (
    HomologyClass,
    are_cohomologous,
    cohomology_ranks,
    connecting_hom,
    homology_ranks,
)
from spernerkit.sperner import (
    build_graph,
    cochain_cross_check,
    enumerate_full_cells,
    face_counts,
    follow_path,
    random_coloring,
    validate_coloring,
)
from spernerkit.subdivision import (
    CenterChooser,
    barycentric_subdivide,
    centers_subdivide,
    iterated_barycentric,
    mesh,
    random_interior_point,
    random_stellar,
    stellar_sequence,
)

HERE = Path(__file__).parent


def basis(K, m, cls=Chain):
    return [cls(m, frozenset([s]), K) for s in K.simplices_of_dim(m)]


def random_sum(rng, K, m, cls=Chain):
    return cls(m, frozenset(s for s in K.simplices_of_dim(m) if rng.random() < 0.5), K)


# -- 1 ---------------------------------------------------------------------

def test_criterion_01_chain_laws():
    rng = np.random.default_rng(1)
    start = time.perf_counter()
    corpus = [random_complex(rng, 5, 3) for _ in range(200)]
    corpus += [iterated_barycentric(standard_simplex(n), k).refined.complex
               for n in range(1, 4) for k in range(3)]
    for K in corpus:
        for m in range(K.dimension + 1):
            chains = basis(K, m) + [random_sum(rng, K, m)]
            for a in chains:
                if m >= 1:
                    assert not boundary(boundary(a))
            for b in basis(K, m, Cochain) + [random_sum(rng, K, m, Cochain)]:
                assert not coboundary(coboundary(b))
    elapsed = time.perf_counter() - start
    print(f"chain laws on {len(corpus)} complexes in {elapsed:.2f}s")
    assert elapsed < 10


# -- 2 ---------------------------------------------------------------------

def random_simplicial_map(rng):
    """A random vertex map restricted to the simplices whose images land in the target."""
    while True:
        T = random_complex(rng, 4, 3)
        src = [sorted(rng.choice(6, size=rng.integers(1, 5), replace=False).tolist()) for _ in range(4)]
        assign = {v: int(rng.integers(4)) for v in range(6)}
        S0 = Complex.from_maximal(src)
        keep = [s for s in S0.simplices if tuple(sorted({assign[v] for v in s})) in T]
        if keep:
            S = Complex.from_maximal(keep)
            return SimplicialMap(S, T, {v: assign[v] for v in S.vertices})


def test_criterion_02_commutation():
    rng = np.random.default_rng(2)
    for _ in range(100):
        phi = random_simplicial_map(rng)
        S, T = phi.source, phi.target
        for m in range(S.dimension + 1):
            for a in basis(S, m) + [random_sum(rng, S, m)]:
                if m >= 1:
                    assert boundary(induced_chain_map(phi, a)) == induced_chain_map(phi, boundary(a))
        for m in range(T.dimension + 1):
            for rho in basis(T, m, Cochain) + [random_sum(rng, T, m, Cochain)]:
                assert coboundary(induced_cochain_map(phi, rho)) == induced_cochain_map(phi, coboundary(rho))
                a = random_sum(rng, S, m) if m <= S.dimension else Chain.zero(S, m)
                assert pairing(induced_cochain_map(phi, rho), a) == pairing(rho, induced_chain_map(phi, a))


# -- 3 ---------------------------------------------------------------------

ALEXANDER_BASES = {
    "simplex1": lambda: standard_simplex(1),
    "simplex2": lambda: standard_simplex(2),
    "simplex3": lambda: standard_simplex(3),
    "sphere2": lambda: geometric_boundary(3),
}


def test_criterion_03_alexander_lemma():
    rng = np.random.default_rng(3)
    for name, make in ALEXANDER_BASES.items():
        G = make()
        subs = [iterated_barycentric(G, 1), iterated_barycentric(G, 2), random_stellar(G, rng)[0]]
        for sub in subs:
            phi = pseudo_identical_map(sub)
            for m in range(G.complex.dimension + 1):
                for a in basis(G.complex, m):
                    assert induced_chain_map(phi, subdivide_chain(a, sub)) == a, (name, a.support)


# -- 4 and 5 ---------------------------------------------------------------

SHAPES = [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2)]


@pytest.fixture(scope="module")
def coloring_corpus():
    rng = np.random.default_rng(4)
    subs = {nk: iterated_barycentric(standard_simplex(nk[0]), nk[1]) for nk in SHAPES}
    return [random_coloring(subs[SHAPES[j % len(SHAPES)]], rng) for j in range(500)]


def test_criterion_04_sperner_parity(coloring_corpus):
    for col in coloring_corpus:
        assert validate_coloring(col)
        assert len(enumerate_full_cells(col)) % 2 == 1
        for i in range(col.n + 1):
            fc = face_counts(col, i)
            assert fc.h + 2 * fc.g == fc.e + 2 * fc.f
            e2, pe, h2, ph = cochain_cross_check(col, i)
            assert e2 == pe and h2 == ph


def test_criterion_05_path_following(coloring_corpus):
    for col in coloring_corpus:
        g = build_graph(col)
        full = set(enumerate_full_cells(col))
        assert all(g.degree(v) in (1, 2) for v in g.nodes)
        ends = set(g.endpoints())
        assert ends == {g.start} | full
        assert len(ends) % 2 == 0
        assert follow_path(g) in full


# -- 6 ---------------------------------------------------------------------

def _jitter_chooser(rng):
    def pick(s, G):
        return random_interior_point(s, G, rng)
    return CenterChooser("custom", pick)


def test_criterion_06_homology_ranks():
    rng = np.random.default_rng(6)
    for n in range(0, 5):
        D = standard_simplex(n)
        expect = [1] + [0] * n
        assert homology_ranks(D.complex) == expect
        variants = [barycentric_subdivide(D).refined, random_stellar(D, rng)[0].refined if n else D,
                    centers_subdivide(D, _jitter_chooser(rng)).refined]
        for V in variants:
            assert homology_ranks(V.complex) == expect
        if n == 0:
            continue
        B = geometric_boundary(n)
        expect = [0] * n
        expect[0] += 1
        expect[n - 1] += 1
        assert homology_ranks(B.complex) == expect
        for V in (barycentric_subdivide(B).refined, random_stellar(B, rng)[0].refined if n > 1 else B,
                  centers_subdivide(B, _jitter_chooser(rng)).refined):
            assert homology_ranks(V.complex) == expect


# -- 7 ---------------------------------------------------------------------

@pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (3, 1)])
def test_criterion_07_relative_cohomology(n, k):
    T = iterated_barycentric(standard_simplex(n), k).refined.complex
    dT = boundary_subcomplex(T)
    rel = cohomology_ranks(T, dT)
    assert rel[n] == 1
    tops = T.simplices_of_dim(n)
    first = Cochain.of(T, [tops[0]])
    for t in tops[1:]:
        assert are_cohomologous(first, Cochain.of(T, [t]), relative_to=dT)
    generator = HomologyClass(Cochain.of(dT, [dT.simplices_of_dim(n - 1)[0]]))
    image = connecting_hom(T, dT, generator)
    assert not image.is_zero()
    assert cohomology_ranks(dT)[n - 1] == rel[n] == 1


# -- 8 ---------------------------------------------------------------------

def test_criterion_08_subdivision_geometry():
    for G in (standard_simplex(1), standard_simplex(2), standard_simplex(3),
              barycentric_subdivide(standard_simplex(2)).refined):
        n = G.complex.dimension
        assert mesh(barycentric_subdivide(G).refined) <= n / (n + 1) * mesh(G) + 1e-12
    for n in range(1, 5):
        count = barycentric_subdivide(standard_simplex(n)).refined.complex.count(n)
        assert count == np.prod(range(1, n + 2))
    for n in range(1, 4):
        a = stellar_sequence(standard_simplex(n))
        b = centers_subdivide(standard_simplex(n))
        assert a.refined.complex == b.refined.complex
        for v in b.refined.complex.vertices:
            assert np.allclose(a.refined.coords[v], b.refined.coords[v], atol=1e-12)
            assert a.carrier_of_vertex[v] == b.carrier_of_vertex[v]


# -- 9 ---------------------------------------------------------------------

def test_criterion_09_fixed_points():
    start = time.perf_counter()
    r = approximate_fixed_point(builtin_map("identity", 2), 0.05)
    assert r.residual == 0
    for t in (0.25, 0.5, 1.0):
        f = builtin_map("contraction", 2, t=t)
        res = [approximate_fixed_point(f, eps).residual for eps in (0.1, 0.05, 0.025)]
        print(f"contraction t={t}: residuals {[round(x, 6) for x in res]}")
        assert all(b <= a for a, b in zip(res, res[1:]))
        assert res[-1] <= 3 * 0.025
    elapsed = time.perf_counter() - start
    print(f"fixed points in {elapsed:.2f}s")
    assert elapsed < 60


# -- 10 --------------------------------------------------------------------

def test_criterion_10_double_cone():
    rng = np.random.default_rng(10)
    for _ in range(100):
        G = standard_simplex(3)
        if rng.random() < 0.5:
            G = random_stellar(G, rng)[0].refined
        sub, sigma = random_stellar(G, rng)
        S, R = G.complex, sub.refined.complex
        (w,) = set(R.vertices) - set(S.vertices)
        v = int(rng.choice(sigma))
        K = S.closed_star(sigma)
        L = [t for t in K.simplices if not set(sigma) <= set(t)]
        for tau in L:
            alpha = Chain(len(tau) - 1, frozenset([tau]), S)
            lhs = boundary(double_cone_chain(w, v, alpha, sigma, R))
            rhs = (subdivide_chain(cone_chain(v, alpha), sub)
                   + cone_chain(w, alpha.on(R))
                   + double_cone_chain(w, v, boundary(alpha, augmented=True), sigma, R))
            assert lhs.support == rhs.support, (sigma, v, tau)


# -- 11 --------------------------------------------------------------------

GOLDEN = [
    ("homology_boundary_tetrahedron.txt", ["homology", HERE / "data" / "boundary_tetrahedron.txt"]),
    ("sperner_segment_three_edges.txt", ["sperner", HERE / "data" / "segment_three_edges.txt",
                                         "--labels", HERE / "data" / "segment_three_edges.labels"]),
    ("fixpoint_cyclic_shift.txt", ["fixpoint", "--dim", "2", "--map", "cyclic_shift", "--eps", "0.02"]),
]


def test_criterion_11_cli_golden():
    for golden, argv in GOLDEN:
        out = io.StringIO()
        assert dispatch([str(a) for a in argv], out) == 0
        assert out.getvalue() == (HERE / "golden" / golden).read_text(), golden
