"""Sperner colorings, the e/f/g/h counts, and the path-following graphs.

A coloring lives on a subdivision of the standard simplex, whose vertex i is
the label i.  Whether a refined vertex lies on the face opposite i is read
off its carrier, so no floating point enters the combinatorics.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np

from .chains import Chain, Cochain, boundary, induced_cochain_map, pairing, subdivide_chain
from .complex import Complex, Simplex, SimplicialMap, facets
from .errors import InvalidFlagError, MissingLabelError
from .subdivision import Subdivision


@dataclass(frozen=True, eq=False)
class SpernerColoring:
    triangulation: Subdivision
    labels: Mapping[int, int]

    @property
    def n(self) -> int:
        return self.triangulation.parent.complex.dimension

    @property
    def complex(self) -> Complex:
        return self.triangulation.refined.complex

    def label_set(self, s: Simplex) -> frozenset:
        return frozenset(self.labels[v] for v in s)

    @cached_property
    def carriers(self) -> dict:
        sub = self.triangulation
        return {s: frozenset(sub.simplex_carrier(s)) for s in self.complex.simplices}

    def as_simplicial_map(self) -> SimplicialMap:
        return SimplicialMap(self.complex, self.triangulation.parent.complex, dict(self.labels))


def validate_coloring(c: SpernerColoring) -> bool:
    """True iff every vertex gets a label from its carrier, i.e. no vertex of face i gets label i."""
    missing = [v for v in c.complex.vertices if v not in c.labels]
    if missing:
        raise MissingLabelError(f"no label for vertices {missing[:5]}")
    car = c.triangulation.carrier_of_vertex
    return all(c.labels[v] in car[v] for v in c.complex.vertices)


def random_coloring(sub: Subdivision, rng: np.random.Generator) -> SpernerColoring:
    labels = {}
    for v in sub.refined.complex.vertices:
        car = sub.carrier_of_vertex[v]
        labels[v] = int(car[rng.integers(len(car))])
    return SpernerColoring(sub, labels)


def enumerate_full_cells(c: SpernerColoring) -> list[Simplex]:
    n = c.n
    return [s for s in c.complex.simplices_of_dim(n) if len(c.label_set(s)) == n + 1]


@dataclass(frozen=True)
class FaceCounts:
    i: int
    e: int
    f: int
    g: int
    h: int

    @property
    def balanced(self) -> bool:
        return self.h + 2 * self.g == self.e + 2 * self.f


def face_counts(c: SpernerColoring, i: int) -> FaceCounts:
    n = c.n
    full = frozenset(range(n + 1))
    rest = full - {i}
    e = f = g = h = 0
    for s in c.complex.simplices_of_dim(n):
        lab = c.label_set(s)
        if lab == full:
            e += 1
        elif lab == rest:
            f += 1
    for t in c.complex.simplices_of_dim(n - 1):
        if c.label_set(t) == rest:
            if i in c.carriers[t]:
                g += 1
            else:
                h += 1
    return FaceCounts(i, e, f, g, h)


def cochain_cross_check(c: SpernerColoring, i: int) -> tuple[int, int, int, int]:
    """(e mod 2, <phi*(delta), [delta]>, h mod 2, <phi*(delta_i), [bd delta]>)."""
    n = c.n
    sub = c.triangulation
    phi = c.as_simplicial_map()
    Delta = sub.parent.complex
    delta = tuple(range(n + 1))
    delta_i = tuple(j for j in delta if j != i)
    top = Chain(n, frozenset([delta]), Delta)
    lhs_e = pairing(induced_cochain_map(phi, Cochain(n, frozenset([delta]), Delta)), subdivide_chain(top, sub))
    lhs_h = pairing(induced_cochain_map(phi, Cochain(n - 1, frozenset([delta_i]), Delta)),
                    subdivide_chain(boundary(top), sub))
    counts = face_counts(c, i)
    return counts.e % 2, lhs_e, counts.h % 2, lhs_h


@dataclass(frozen=True)
class NodeTag:
    level: int
    role: str  # "full", "almost" (one label missing) or "door"


@dataclass(frozen=True, eq=False)
class PathGraph:
    nodes: Mapping[Simplex, NodeTag]
    adjacency: Mapping[Simplex, tuple]
    face_chain: tuple
    start: Simplex

    def degree(self, node: Simplex) -> int:
        return len(self.adjacency[node])

    def endpoints(self) -> list[Simplex]:
        return sorted(v for v in self.nodes if self.degree(v) == 1)

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency.values()) // 2


def _default_flag(n: int) -> tuple:
    return tuple(tuple(range(m + 1)) for m in range(n, -1, -1))


def _check_flag(face_chain: Sequence, n: int) -> tuple:
    """Validate a flag given top-down and return it indexed by level."""
    chain = [tuple(sorted(f)) for f in face_chain]
    if len(chain) != n + 1:
        raise InvalidFlagError(f"a maximal flag of the {n}-simplex has {n + 1} faces, got {len(chain)}")
    by_level = chain[::-1]
    for m, f in enumerate(by_level):
        if len(f) != m + 1 or any(v < 0 or v > n for v in f):
            raise InvalidFlagError(f"face {f} does not have dimension {m} in the {n}-simplex")
        if m and not set(by_level[m - 1]) < set(f):
            raise InvalidFlagError(f"{by_level[m - 1]} is not a face of {f}")
    return tuple(by_level)


def build_graph(c: SpernerColoring, face_chain: Sequence | None = None) -> PathGraph:
    """The concatenated graph over all levels of a flag (top-down order, default {0..n} ⊃ ... ⊃ {0})."""
    n = c.n
    flag = _check_flag(_default_flag(n) if face_chain is None else face_chain, n)
    nodes: dict = {}
    adj: dict = {}

    def link(a, b):
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)

    car = c.carriers
    for m in range(n + 1):
        top = frozenset(flag[m])
        below = frozenset(flag[m - 1]) if m else None
        for s in c.complex.simplices_of_dim(m):
            if not car[s] <= top:
                continue
            lab = c.label_set(s)
            if lab == top:
                nodes[s] = NodeTag(m, "full")
            elif m and lab == below:
                nodes[s] = NodeTag(m, "almost")
            else:
                continue
            adj.setdefault(s, set())
            if not m:
                continue
            for t in facets(s):
                if c.label_set(t) != below:
                    continue
                if t not in nodes:
                    nodes[t] = NodeTag(m - 1, "full") if car[t] <= below else NodeTag(m - 1, "door")
                link(s, t)
    start = next(s for s, tag in nodes.items() if tag.level == 0)
    return PathGraph(nodes, {k: tuple(sorted(v)) for k, v in adj.items()}, tuple(flag[::-1]), start)


def follow_path(g: PathGraph) -> Simplex:
    """Walk from the level-0 node until the other end of its path."""
    prev, cur = None, g.start
    while True:
        nxt = [v for v in g.adjacency[cur] if v != prev]
        if not nxt:
            return cur
        prev, cur = cur, nxt[0]


def graph_gi(c: SpernerColoring, i: int) -> PathGraph:
    """Single-step graph: n-cells labelled I or I - {i}, joined to their (n-1)-faces labelled I - {i}."""
    n = c.n
    full = frozenset(range(n + 1))
    rest = full - {i}
    nodes: dict = {}
    adj: dict = {}
    for s in c.complex.simplices_of_dim(n):
        lab = c.label_set(s)
        if lab == full:
            nodes[s] = NodeTag(n, "full")
        elif lab == rest:
            nodes[s] = NodeTag(n, "almost")
        else:
            continue
        adj.setdefault(s, set())
        for t in facets(s):
            if c.label_set(t) == rest:
                nodes.setdefault(t, NodeTag(n - 1, "door" if i in c.carriers[t] else "full"))
                adj.setdefault(t, set()).add(s)
                adj[s].add(t)
    start = min((t for t, tag in nodes.items() if tag.level == n - 1 and tag.role == "full"), default=())
    return PathGraph(nodes, {k: tuple(sorted(v)) for k, v in adj.items()}, (), start)
