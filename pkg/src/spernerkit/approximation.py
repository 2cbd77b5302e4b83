"""Open stars, barycentric stars, pseudo-identical maps and simplicial approximation."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .complex import DEFAULT_ATOL, GeometricComplex, SimplicialMap, carrier
from .errors import PointOutsideComplexError, TargetMissError
from .subdivision import Subdivision


def open_star_contains(v: int, x, G: GeometricComplex, atol: float = DEFAULT_ATOL) -> bool:
    return v in carrier(x, G, atol)[0]


def barycentric_star_contains(v: int, x, G: GeometricComplex, atol: float = DEFAULT_ATOL) -> bool:
    """x is in B_v when v spans its carrier and v's coordinate is maximal there (ties allowed)."""
    face, coords = carrier(x, G, atol)
    if v not in face:
        return False
    return coords[face.index(v)] >= max(coords) - atol


def covering_order(G: GeometricComplex) -> int:
    return max((len(s) for s in G.complex.maximal), default=0)


def pseudo_identical_map(sub: Subdivision) -> SimplicialMap:
    """Send each refined vertex to the smallest vertex of its carrier."""
    assignment = {v: min(c) for v, c in sub.carrier_of_vertex.items()}
    return SimplicialMap(sub.refined.complex, sub.parent.complex, assignment)


@dataclass(frozen=True)
class NeedsRefinement:
    """Returned when the vertex assignment is not simplicial (or fails a sampled star check)."""

    assignment: dict
    bad_simplices: tuple
    reason: str = "not simplicial"

    def __bool__(self) -> bool:
        return False


def simplicial_approximation(f: Callable, source: GeometricComplex, target: GeometricComplex,
                             atol: float = DEFAULT_ATOL, star_samples: int = 0,
                             rng: np.random.Generator | None = None):
    """Vertex map v -> smallest vertex of carrier(f(v)), if that map is simplicial.

    With ``star_samples`` > 0 the star condition f(st v) in st(phi v) is also
    spot-checked at that many random points per vertex star.
    """
    assignment = {}
    for v in source.complex.vertices:
        y = np.asarray(f(source.point(v)), dtype=float)
        try:
            face, _ = carrier(y, target, atol)
        except PointOutsideComplexError as exc:
            raise TargetMissError(f"f({v}) = {y.tolist()} is outside the target") from exc
        assignment[v] = min(face)

    T = target.complex
    bad = tuple(s for s in source.complex.maximal
                if tuple(sorted({assignment[u] for u in s})) not in T)
    if bad:
        return NeedsRefinement(assignment, bad)

    if star_samples:
        rng = np.random.default_rng(0) if rng is None else rng
        S = source.complex
        for v in S.vertices:
            cells = [s for s in S.maximal if v in s]
            for _ in range(star_samples):
                s = cells[rng.integers(len(cells))]
                x = rng.dirichlet(np.ones(len(s))) @ source.points(s)
                try:
                    face, _ = carrier(np.asarray(f(x), dtype=float), target, atol)
                except PointOutsideComplexError as exc:
                    raise TargetMissError(f"f({x.tolist()}) is outside the target") from exc
                if assignment[v] not in face:
                    return NeedsRefinement(assignment, (s,), reason="star condition")

    return SimplicialMap(source.complex, T, assignment)
