"""Abstract and geometric simplicial complexes, simplicial maps, structural predicates.

Simplices are sorted tuples of non-negative vertex ids.  A complex is an
immutable, downward-closed family of such tuples; geometric complexes attach a
coordinate vector to every vertex.
"""
from __future__ import annotations

import itertools
from collections import defaultdict, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    EmptyComplexError,
    MapNotSimplicialError,
    NotNonBranchingError,
    PointOutsideComplexError,
)

Simplex = tuple  # sorted tuple[int, ...]

DEFAULT_ATOL = 1e-9


def simplex(vertices: Iterable[int]) -> Simplex:
    """Canonical form of a vertex set: sorted, duplicate free, nonempty."""
    s = tuple(sorted(set(int(v) for v in vertices)))
    if not s:
        raise ValueError("a simplex needs at least one vertex")
    if s[0] < 0:
        raise ValueError(f"vertex ids must be non-negative, got {s[0]}")
    return s


def dim(s: Simplex) -> int:
    return len(s) - 1


def facets(s: Simplex) -> list[Simplex]:
    """Codimension-one faces, in the order obtained by deleting s[0], s[1], ..."""
    if len(s) == 1:
        return []
    return [s[:i] + s[i + 1:] for i in range(len(s))]


def all_faces(s: Simplex) -> Iterable[Simplex]:
    for k in range(1, len(s) + 1):
        yield from itertools.combinations(s, k)


@dataclass(frozen=True, eq=False)
class Complex:
    """A finite abstract simplicial complex.

    Build with :func:`build_complex` or :meth:`from_family`; the raw
    constructor trusts that ``simplices`` is already downward closed.
    """

    simplices: frozenset

    @classmethod
    def from_maximal(cls, maximal: Iterable[Iterable[int]]) -> "Complex":
        family = set()
        for m in maximal:
            family.update(all_faces(simplex(m)))
        return cls(frozenset(family))

    @classmethod
    def from_family(cls, family: Iterable[Iterable[int]]) -> "Complex":
        fam = frozenset(simplex(s) for s in family)
        for s in fam:
            for f in facets(s):
                if f not in fam:
                    raise ValueError(f"family is not downward closed: {f} missing under {s}")
        return cls(fam)

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        return self is other or self.simplices == other.simplices

    def __hash__(self):
        return hash(self.simplices)

    def __contains__(self, s) -> bool:
        return tuple(s) in self.simplices

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self):
        return iter(self.ordered)

    def __repr__(self) -> str:
        return f"Complex(dim={self.dimension}, f={self.f_vector})"

    @cached_property
    def by_dim(self) -> dict[int, tuple]:
        groups = defaultdict(list)
        for s in self.simplices:
            groups[len(s) - 1].append(s)
        return {d: tuple(sorted(g)) for d, g in sorted(groups.items())}

    @cached_property
    def ordered(self) -> tuple:
        return tuple(s for d in sorted(self.by_dim) for s in self.by_dim[d])

    @cached_property
    def dimension(self) -> int:
        return max(self.by_dim) if self.by_dim else -1

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self.by_dim.get(0, ()))

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.by_dim.get(d, ())) for d in range(self.dimension + 1))

    @cached_property
    def index(self) -> dict:
        """Position of each simplex within the lexicographic list of its dimension."""
        idx = {}
        for group in self.by_dim.values():
            for i, s in enumerate(group):
                idx[s] = i
        return idx

    @cached_property
    def maximal(self) -> tuple:
        covered = set()
        for s in self.simplices:
            covered.update(facets(s))
        return tuple(s for s in self.ordered if s not in covered)

    @cached_property
    def cofaces(self) -> dict:
        """Map from each simplex to the sorted simplices one dimension up containing it."""
        up = defaultdict(list)
        for s in self.simplices:
            for f in facets(s):
                up[f].append(s)
        return {s: tuple(sorted(up.get(s, ()))) for s in self.simplices}

    def simplices_of_dim(self, m: int) -> tuple:
        return self.by_dim.get(m, ())

    def count(self, m: int) -> int:
        return len(self.by_dim.get(m, ()))

    def is_subcomplex_of(self, other: "Complex") -> bool:
        return self.simplices <= other.simplices

    def star(self, s: Simplex) -> frozenset:
        """Simplices having ``s`` as a face."""
        ss = set(s)
        return frozenset(t for t in self.simplices if ss.issubset(t))

    def closed_star(self, s: Simplex) -> "Complex":
        fam = set()
        for t in self.star(s):
            fam.update(all_faces(t))
        return Complex(frozenset(fam))


def build_complex(maximal_simplices: Sequence[Sequence[int]]) -> Complex:
    """Downward closure of a list of vertex lists."""
    if len(maximal_simplices) == 0:
        raise EmptyComplexError("a complex needs at least one simplex")
    for m in maximal_simplices:
        if len(m) == 0:
            raise ValueError("empty vertex list")
    return Complex.from_maximal(maximal_simplices)


@dataclass(frozen=True, eq=False)
class GeometricComplex:
    """A complex with a point of R^d attached to every vertex."""

    complex: Complex
    coords: Mapping[int, tuple]

    def __post_init__(self):
        missing = [v for v in self.complex.vertices if v not in self.coords]
        if missing:
            raise ValueError(f"vertices without coordinates: {missing}")
        arity = {len(self.coords[v]) for v in self.complex.vertices}
        if len(arity) > 1:
            raise ValueError("coordinate arity must be uniform")

    def __eq__(self, other):
        if not isinstance(other, GeometricComplex):
            return NotImplemented
        return self.complex == other.complex and all(
            tuple(self.coords[v]) == tuple(other.coords[v]) for v in self.complex.vertices
        )

    def __hash__(self):
        return hash(self.complex)

    def __repr__(self) -> str:
        return f"GeometricComplex(dim={self.complex.dimension}, ambient={self.ambient_dim}, f={self.complex.f_vector})"

    @property
    def ambient_dim(self) -> int:
        v = self.complex.vertices
        return len(self.coords[v[0]]) if v else 0

    def point(self, v: int) -> np.ndarray:
        return np.asarray(self.coords[v], dtype=float)

    def points(self, s: Simplex) -> np.ndarray:
        return np.array([self.coords[v] for v in s], dtype=float)

    @cached_property
    def _solvers(self):
        out = []
        for s in self.complex.maximal:
            A = np.vstack([self.points(s).T, np.ones(len(s))])
            out.append((s, A, np.linalg.pinv(A)))
        return out

    def is_affinely_independent(self, s: Simplex, atol: float = DEFAULT_ATOL) -> bool:
        return affinely_independent(self.points(s), atol)

    def validate(self, atol: float = DEFAULT_ATOL) -> None:
        for s in self.complex.maximal:
            if not self.is_affinely_independent(s, atol):
                raise ValueError(f"vertices of {s} are affinely dependent")


def affinely_independent(pts: np.ndarray, atol: float = DEFAULT_ATOL) -> bool:
    if len(pts) <= 1:
        return True
    diffs = pts[1:] - pts[0]
    return np.linalg.matrix_rank(diffs, tol=atol) == len(pts) - 1


def standard_simplex(n: int) -> GeometricComplex:
    """The n-simplex with vertex i at the i-th basis vector of R^(n+1)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    eye = np.eye(n + 1)
    coords = {i: tuple(float(c) for c in eye[i]) for i in range(n + 1)}
    return GeometricComplex(Complex.from_maximal([range(n + 1)]), coords)


def carrier(x, G: GeometricComplex, atol: float = DEFAULT_ATOL) -> tuple[Simplex, tuple[float, ...]]:
    """Minimal simplex of ``G`` containing ``x`` with the barycentric coordinates of x in it.

    Coordinates at or below ``atol`` are treated as zero when selecting the face.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (G.ambient_dim,):
        raise PointOutsideComplexError(f"point has {x.shape} entries, ambient dimension is {G.ambient_dim}")
    rhs = np.append(x, 1.0)
    for s, A, pinv in G._solvers:
        a = pinv @ rhs
        if np.min(a) < -atol or np.max(np.abs(A @ a - rhs)) > atol:
            continue
        keep = [i for i in range(len(s)) if a[i] > atol]
        face = tuple(s[i] for i in keep)
        coeffs = _face_coordinates(G, face, x)
        return face, coeffs
    raise PointOutsideComplexError(f"{x.tolist()} lies in no simplex")


def _face_coordinates(G: GeometricComplex, face: Simplex, x: np.ndarray) -> tuple[float, ...]:
    A = np.vstack([G.points(face).T, np.ones(len(face))])
    a, *_ = np.linalg.lstsq(A, np.append(x, 1.0), rcond=None)
    a = np.clip(a, 0.0, None)
    a = a / a.sum()
    return tuple(float(c) for c in a)


def barycentric_coordinates(x, s: Simplex, G: GeometricComplex) -> np.ndarray:
    """Affine coordinates of ``x`` with respect to the vertices of ``s`` (no sign check)."""
    A = np.vstack([G.points(s).T, np.ones(len(s))])
    a, *_ = np.linalg.lstsq(A, np.append(np.asarray(x, dtype=float), 1.0), rcond=None)
    return a


@dataclass(frozen=True)
class PseudoManifoldReport:
    non_branching: bool
    strongly_connected: bool
    dim_homogeneous: bool

    @property
    def is_pseudo_manifold(self) -> bool:
        return self.non_branching and self.strongly_connected and self.dim_homogeneous


def _top_coface_counts(S: Complex) -> dict:
    n = S.dimension
    return {t: len(S.cofaces[t]) for t in S.simplices_of_dim(n - 1)}


def is_non_branching(S: Complex) -> bool:
    return all(c in (1, 2) for c in _top_coface_counts(S).values())


def pseudo_manifold_report(S: Complex) -> PseudoManifoldReport:
    """Non-branching, strongly connected and dimensionally homogeneous flags.

    A 0-dimensional complex is treated as having no (-1)-faces: it is
    non-branching, and strongly connected only when it is a single point.
    """
    if len(S) == 0:
        raise EmptyComplexError("pseudo-manifold predicates need a nonempty complex")
    n = S.dimension
    tops = S.simplices_of_dim(n)
    non_branching = is_non_branching(S)

    seen = {tops[0]}
    queue = deque([tops[0]])
    while queue:
        s = queue.popleft()
        for f in facets(s):
            for t in S.cofaces[f]:
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
    strongly_connected = len(seen) == len(tops)

    homogeneous = all(len(m) == n + 1 for m in S.maximal)
    return PseudoManifoldReport(non_branching, strongly_connected, homogeneous)


def boundary_subcomplex(S: Complex) -> Complex:
    """All faces of the (n-1)-simplices lying in exactly one n-simplex."""
    counts = _top_coface_counts(S)
    bad = [t for t, c in counts.items() if c not in (1, 2)]
    if bad:
        raise NotNonBranchingError(f"{len(bad)} codimension-one simplices violate non-branching, e.g. {bad[0]}")
    return Complex.from_maximal([t for t, c in counts.items() if c == 1]) if counts else Complex(frozenset())


@dataclass(frozen=True, eq=False)
class SimplicialMap:
    """Vertex assignment carrying every simplex of ``source`` to a simplex of ``target``."""

    source: Complex
    target: Complex
    assignment: Mapping[int, int]

    def __post_init__(self):
        for v in self.source.vertices:
            if v not in self.assignment:
                raise MapNotSimplicialError(f"vertex {v} has no image")
        for s in self.source.maximal:
            img = self(s)
            if img not in self.target:
                raise MapNotSimplicialError(f"{s} maps to {img}, not a simplex of the target")

    def __call__(self, s: Simplex) -> Simplex:
        return tuple(sorted({self.assignment[v] for v in s}))

    def __eq__(self, other):
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and all(self.assignment[v] == other.assignment[v] for v in self.source.vertices))

    def __hash__(self):
        return hash((self.source, self.target))

    def compose(self, inner: "SimplicialMap") -> "SimplicialMap":
        """``self`` after ``inner``."""
        return SimplicialMap(inner.source, self.target,
                             {v: self.assignment[inner.assignment[v]] for v in inner.source.vertices})

    @classmethod
    def identity(cls, S: Complex) -> "SimplicialMap":
        return cls(S, S, {v: v for v in S.vertices})


def apply_map(phi: SimplicialMap, s: Simplex) -> Simplex:
    return phi(s)


def verify_intersections(G: GeometricComplex, atol: float = 1e-9) -> list[tuple[Simplex, Simplex]]:
    """Pairs of maximal simplices whose intersection is not their common face.

    Desk-scale check for ambient dimension <= 3 (one small LP per pair).
    """
    from scipy.optimize import linprog

    if G.ambient_dim > 3:
        raise ValueError("intersection verification is limited to ambient dimension <= 3")
    bad = []
    tops = G.complex.maximal
    for s, t in itertools.combinations(tops, 2):
        P, Q = G.points(s), G.points(t)
        common = set(s) & set(t)
        ns, nt = len(s), len(t)
        # variables: a (coords in s), b (coords in t)
        A_eq = np.zeros((G.ambient_dim + 2, ns + nt))
        A_eq[:G.ambient_dim, :ns] = P.T
        A_eq[:G.ambient_dim, ns:] = -Q.T
        A_eq[G.ambient_dim, :ns] = 1
        A_eq[G.ambient_dim + 1, ns:] = 1
        b_eq = np.zeros(G.ambient_dim + 2)
        b_eq[G.ambient_dim:] = 1
        c = np.zeros(ns + nt)
        for i, v in enumerate(s):
            if v not in common:
                c[i] = -1.0
        res = linprog(c, A_eq=A_eq, b_eq=b_eq, bounds=[(0, None)] * (ns + nt), method="highs")
        if res.status == 2:
            if common:
                bad.append((s, t))
            continue
        if res.status == 0 and -res.fun > atol:
            bad.append((s, t))
    return bad
