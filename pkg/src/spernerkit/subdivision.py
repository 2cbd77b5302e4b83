"""Barycentric, centers-generated, stellar and iterated subdivisions with carrier bookkeeping."""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Mapping, Optional

import numpy as np

from .complex import (
    DEFAULT_ATOL,
    Complex,
    GeometricComplex,
    Simplex,
    all_faces,
    barycentric_coordinates,
    carrier,
)
from .errors import BudgetExceeded, CenterNotInteriorError


@dataclass(frozen=True, eq=False)
class Subdivision:
    """A refinement of ``parent`` together with the carrier of every refined vertex.

    ``levels`` counts how many elementary operations were composed to get here.
    """

    refined: GeometricComplex
    parent: GeometricComplex
    carrier_of_vertex: Mapping[int, Simplex]
    levels: int = 1

    def simplex_carrier(self, t: Simplex) -> Simplex:
        """Smallest parent simplex containing the refined simplex ``t``."""
        out = set()
        for v in t:
            out.update(self.carrier_of_vertex[v])
        return tuple(sorted(out))

    @cached_property
    def _by_carrier(self) -> dict:
        groups = defaultdict(list)
        for t in self.refined.complex.simplices:
            groups[self.simplex_carrier(t)].append(t)
        return {c: tuple(sorted(g)) for c, g in groups.items()}

    def pieces(self, s: Simplex) -> tuple:
        """Refined simplices of the same dimension as ``s`` that lie inside it."""
        return tuple(t for t in self._by_carrier.get(tuple(s), ()) if len(t) == len(s))

    def contained_in(self, s: Simplex) -> frozenset:
        """All refined simplices lying in the parent simplex ``s`` (any dimension)."""
        out = set()
        for face in all_faces(tuple(s)):
            out.update(self._by_carrier.get(face, ()))
        return frozenset(out)

    @classmethod
    def identity(cls, G: GeometricComplex) -> "Subdivision":
        return cls(G, G, {v: (v,) for v in G.complex.vertices}, levels=0)

    @classmethod
    def from_geometry(cls, refined: GeometricComplex, parent: GeometricComplex,
                      atol: float = DEFAULT_ATOL) -> "Subdivision":
        """Recover carrier data of an arbitrary refinement by point location."""
        carriers = {v: carrier(refined.point(v), parent, atol)[0] for v in refined.complex.vertices}
        return cls(refined, parent, carriers)


def compose(first: Subdivision, second: Subdivision) -> Subdivision:
    """``second`` refines ``first.refined``; the result refines ``first.parent``."""
    carriers = {}
    for v, c in second.carrier_of_vertex.items():
        out = set()
        for u in c:
            out.update(first.carrier_of_vertex[u])
        carriers[v] = tuple(sorted(out))
    return Subdivision(second.refined, first.parent, carriers, first.levels + second.levels)


@dataclass(frozen=True)
class CenterChooser:
    """Rule picking an interior point of each simplex: the barycenter, or ``custom(s, G)``."""

    rule: str = "barycenter"
    custom: Optional[Callable] = field(default=None, compare=False)

    def __post_init__(self):
        if self.rule not in ("barycenter", "custom"):
            raise ValueError(f"unknown center rule {self.rule!r}")
        if self.rule == "custom" and self.custom is None:
            raise ValueError("custom rule needs a callable")

    def __call__(self, s: Simplex, G: GeometricComplex) -> np.ndarray:
        if len(s) == 1 or self.rule == "barycenter":
            return barycenter(s, G)
        return np.asarray(self.custom(s, G), dtype=float)


def barycenter(s: Simplex, G: GeometricComplex) -> np.ndarray:
    return G.points(s).mean(axis=0)


def _check_interior(s: Simplex, w: np.ndarray, G: GeometricComplex, atol: float) -> None:
    if len(s) == 1:
        if not np.allclose(w, G.point(s[0]), atol=atol, rtol=0):
            raise CenterNotInteriorError(f"the only interior point of {s} is the vertex itself")
        return
    a = barycentric_coordinates(w, s, G)
    resid = G.points(s).T @ a - w
    if np.min(a) <= atol or np.max(np.abs(resid)) > atol:
        raise CenterNotInteriorError(f"{w.tolist()} is not interior to {s}")


def center_ids(S: Complex) -> dict:
    """Fresh ids for the centers of all simplices of dimension >= 1.

    Vertices keep their own id.  Others are numbered from max id + 1 in
    order of increasing dimension, lexicographic within a dimension.
    """
    ids = {(v,): v for v in S.vertices}
    nxt = max(S.vertices) + 1
    for d in range(1, S.dimension + 1):
        for s in S.simplices_of_dim(d):
            ids[s] = nxt
            nxt += 1
    return ids


def _full_flags(s: Simplex):
    for perm in itertools.permutations(s):
        yield [tuple(sorted(perm[: j + 1])) for j in range(len(perm))]


def centers_subdivide(G: GeometricComplex, chooser: CenterChooser = CenterChooser(),
                      atol: float = DEFAULT_ATOL) -> Subdivision:
    """Subdivision whose simplices are the flags of parent simplices, one center per simplex."""
    S = G.complex
    ids = center_ids(S)
    coords = {}
    carriers = {}
    for s, i in ids.items():
        w = chooser(s, G)
        if len(s) > 1:
            _check_interior(s, w, G, atol)
        coords[i] = tuple(float(c) for c in w)
        carriers[i] = s
    tops = []
    for m in S.maximal:
        for flag in _full_flags(m):
            tops.append([ids[f] for f in flag])
    return Subdivision(GeometricComplex(Complex.from_maximal(tops), coords), G, carriers)


def barycentric_subdivide(G: GeometricComplex) -> Subdivision:
    return centers_subdivide(G, CenterChooser())


def stellar_subdivide(G: GeometricComplex, s: Simplex, w=None, new_id: int | None = None,
                      atol: float = DEFAULT_ATOL) -> Subdivision:
    """Replace the closed star of ``s`` by the cone from ``w`` over the faces not containing ``s``.

    ``w`` defaults to the barycenter.  A move at a vertex with ``w`` equal to
    that vertex changes nothing.
    """
    S = G.complex
    s = tuple(s)
    if s not in S:
        raise ValueError(f"{s} is not a simplex of the complex")
    w = barycenter(s, G) if w is None else np.asarray(w, dtype=float)
    _check_interior(s, w, G, atol)
    if len(s) == 1:
        return Subdivision(G, G, {v: (v,) for v in S.vertices})
    z = max(S.vertices) + 1 if new_id is None else new_id
    if z in S.vertices:
        raise ValueError(f"vertex id {z} already in use")
    star = S.star(s)
    base = set(s)
    link_side = {t for t in S.closed_star(s).simplices if not base.issubset(t)}
    family = set(S.simplices - star)
    family.add((z,))
    for t in link_side:
        family.add(tuple(sorted(t + (z,))))
    coords = dict(G.coords)
    coords[z] = tuple(float(c) for c in w)
    carriers = {v: (v,) for v in S.vertices}
    carriers[z] = s
    return Subdivision(GeometricComplex(Complex(frozenset(family)), coords), G, carriers)


def stellar_sequence(G: GeometricComplex, chooser: CenterChooser = CenterChooser(),
                     atol: float = DEFAULT_ATOL) -> Subdivision:
    """One stellar move per parent simplex, in non-increasing dimension (lexicographic ties)."""
    S = G.complex
    ids = center_ids(S)
    cur = G
    carriers = {v: (v,) for v in S.vertices}
    for d in range(S.dimension, -1, -1):
        for s in S.simplices_of_dim(d):
            step = stellar_subdivide(cur, s, chooser(s, G), new_id=ids[s] if d else None, atol=atol)
            cur = step.refined
            if d:
                carriers[ids[s]] = s
    return Subdivision(cur, G, carriers, levels=len(S))


def iterated_barycentric(G: GeometricComplex, k: int) -> Subdivision:
    sub = Subdivision.identity(G)
    for _ in range(k):
        sub = compose(sub, barycentric_subdivide(sub.refined))
    return sub


def mesh(G: GeometricComplex) -> float:
    """Largest distance between two vertices of a common simplex."""
    best = 0.0
    for s in G.complex.maximal:
        if len(s) < 2:
            continue
        P = G.points(s)
        d = P[:, None, :] - P[None, :, :]
        best = max(best, float(np.sqrt((d * d).sum(axis=-1)).max()))
    return best


def refine_to_mesh(G: GeometricComplex, eps: float, cap: int = 30) -> Subdivision:
    """Iterate barycentric subdivision until the mesh drops below ``eps``."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    sub = Subdivision.identity(G)
    while mesh(sub.refined) >= eps:
        if sub.levels >= cap:
            raise BudgetExceeded(f"mesh {mesh(sub.refined):.3g} still >= {eps} after {cap} refinements")
        sub = compose(sub, barycentric_subdivide(sub.refined))
    return sub


def random_interior_point(s: Simplex, G: GeometricComplex, rng: np.random.Generator) -> np.ndarray:
    """A point of ``s`` with barycentric weights bounded away from zero."""
    a = rng.dirichlet(np.ones(len(s))) * 0.8 + 0.2 / len(s)
    return a @ G.points(s)


def random_stellar(G: GeometricComplex, rng: np.random.Generator, min_dim: int = 1) -> tuple[Subdivision, Simplex]:
    """A single stellar move at a random simplex of dimension >= ``min_dim``."""
    pool = [s for s in G.complex.ordered if len(s) - 1 >= min_dim]
    s = pool[rng.integers(len(pool))]
    return stellar_subdivide(G, s, random_interior_point(s, G, rng)), s
