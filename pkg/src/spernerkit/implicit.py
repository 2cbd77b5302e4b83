"""Path following inside iterated barycentric subdivisions without building them.

A top cell of b^k(delta^m), delta^m the face of the standard simplex on
vertices 0..m, is named by k permutations of range(m+1): the j-th vertex of
the child picked by a permutation p is the mean of the parent vertices
p[0..j].  Vertex positions are exact integer vectors at a common scale, and a
point is located by sorting its barycentric coordinates at every level, with
a direction vector breaking ties (a symbolic perturbation).  The walk visits
exactly the cells of the level-by-level path graph, so it returns the same
fully labelled cell as the explicit graph on the materialized triangulation.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np


def scale(n: int, k: int) -> int:
    """Common denominator of all vertex coordinates of b^k of the n-simplex."""
    return math.lcm(*range(1, n + 2)) ** k


def _child(b: list, perm: tuple) -> list:
    size = len(b)
    out = [0] * size
    for j in range(size):
        nxt = b[perm[j + 1]] if j + 1 < size else 0
        out[j] = (j + 1) * (b[perm[j]] - nxt)
    return out


def locate(b, d, k: int) -> tuple:
    """Cell containing b + t*d for all small t > 0 (b, d homogeneous coordinates)."""
    b, d = list(b), list(d)
    perms = []
    for _ in range(k):
        keys = [(-b[i], -d[i]) for i in range(len(b))]
        perm = tuple(sorted(range(len(b)), key=keys.__getitem__))
        for x, y in zip(perm, perm[1:]):
            if keys[x] == keys[y]:
                raise RuntimeError("point location is degenerate for this direction")
        perms.append(perm)
        b, d = _child(b, perm), _child(d, perm)
    return tuple(perms)


def cell_vertices(perms: tuple, m: int, n: int, L: int) -> tuple:
    """Integer vertex vectors (length n+1, scale L) of the cell named by ``perms``."""
    W = [[L if i == j else 0 for i in range(n + 1)] for j in range(m + 1)]
    for perm in perms:
        acc = [0] * (n + 1)
        new = []
        for j, p in enumerate(perm):
            acc = [a + w for a, w in zip(acc, W[p])]
            new.append([a // (j + 1) for a in acc])
        W = new
    return tuple(tuple(w) for w in W)


def all_cells(m: int, k: int):
    return itertools.product(itertools.permutations(range(m + 1)), repeat=k)


@dataclass
class WalkResult:
    vertices: tuple  # integer vectors at scale L
    labels: tuple
    steps: int
    scale: int
    levels_visited: list = field(default_factory=list)


class BarycentricWalker:
    """Follows the path from vertex 0 to a fully labelled n-cell of b^k(delta^n).

    ``label`` receives the vertex as a float barycentric vector plus its exact
    integer form, and must return a label that is a vertex of the carrier.
    """

    def __init__(self, n: int, k: int, label: Callable, max_steps: int = 10_000_000):
        self.n, self.k = n, k
        self.L = scale(n, k)
        self.label_fn = label
        self.max_steps = max_steps
        self._labels: dict = {}

    def label(self, v: tuple) -> int:
        out = self._labels.get(v)
        if out is None:
            out = self.label_fn(np.asarray(v, dtype=float) / self.L, v)
            if not 0 <= out <= self.n or v[out] == 0:
                raise ValueError(f"label {out} at {v} violates the boundary condition")
            self._labels[v] = out
        return out

    @property
    def labels_evaluated(self) -> int:
        return len(self._labels)

    def run(self) -> WalkResult:
        n, k, L = self.n, self.k, self.L
        m = 0
        verts = cell_vertices(tuple(((0,),) * k), 0, n, L)
        entered = None  # None: fresh from below/start, "above", or index of the omitted vertex
        steps = 0
        visited = [0] * (n + 1)
        while True:
            steps += 1
            visited[m] += 1
            if steps > self.max_steps:
                raise RuntimeError("path did not terminate within the step budget")
            labs = [self.label(v) for v in verts]
            labset = set(labs)
            if len(labset) == m + 1:
                if m == n:
                    return WalkResult(verts, tuple(labs), steps, L, visited)
                if entered == "above":
                    m, verts, entered = self._exit(m, verts, labs.index(m))
                    continue
                m, verts, entered = self._up(m, verts)
                continue
            if labset != set(range(m)):
                raise RuntimeError(f"walk reached a cell with labels {sorted(labset)} at level {m}")
            dup = next(lab for lab in labset if labs.count(lab) == 2)
            i1, i2 = (j for j, lab in enumerate(labs) if lab == dup)
            j = i2 if entered == i1 else i1
            m, verts, entered = self._exit(m, verts, j)

    def _up(self, m: int, verts: tuple):
        p = [sum(c) for c in zip(*verts)][: m + 2]
        d = [0] * (m + 2)
        d[m + 1] = 1
        new = cell_vertices(locate(p, d, self.k), m + 1, self.n, self.L)
        j = next(i for i, v in enumerate(new) if v[m + 1] > 0)
        return m + 1, new, j

    def _exit(self, m: int, verts: tuple, j: int):
        tau = verts[:j] + verts[j + 1:]
        p = [sum(c) for c in zip(*tau)]
        if p[m] == 0:
            perms = locate(p[:m], [0] * m, self.k)
            return m - 1, cell_vertices(perms, m - 1, self.n, self.L), "above"
        u = verts[j]
        d = [p[i] - m * u[i] for i in range(m + 1)]
        new = cell_vertices(locate(p[: m + 1], d, self.k), m, self.n, self.L)
        tau_set = set(tau)
        jn = next(i for i, v in enumerate(new) if v not in tau_set)
        return m, new, jn


def _averaging_matrices(n: int) -> np.ndarray:
    mats = []
    for perm in itertools.permutations(range(n + 1)):
        M = np.zeros((n + 1, n + 1))
        for j in range(n + 1):
            M[j, list(perm[: j + 1])] = 1.0 / (j + 1)
        mats.append(M)
    return np.stack(mats)


def _diameters(cells: np.ndarray) -> np.ndarray:
    diff = cells[:, :, None, :] - cells[:, None, :, :]
    return np.sqrt((diff * diff).sum(axis=-1)).max(axis=(1, 2))


@lru_cache(maxsize=None)
def iterated_mesh(n: int, k: int) -> float:
    """Exact (up to rounding) mesh of b^k of the standard n-simplex.

    Cells are expanded level by level; a cell is dropped once even the
    worst-case shrink bound n/(n+1) per level cannot lift its descendants
    above a diameter already realized by some level-k cell.
    """
    if n == 0:
        return 0.0
    Ms = _averaging_matrices(n)
    factor = n / (n + 1)
    cells = np.eye(n + 1)[None]
    for r in range(k):
        cells = np.einsum("pij,cjd->cpid", Ms, cells).reshape(-1, n + 1, n + 1)
        rem = k - r - 1
        diam = _diameters(cells)
        probe = cells[int(np.argmax(diam))][None]
        for _ in range(rem):
            kids = np.einsum("pij,cjd->cpid", Ms, probe).reshape(-1, n + 1, n + 1)
            probe = kids[int(np.argmax(_diameters(kids)))][None]
        realized = float(_diameters(probe)[0])
        cells = cells[diam * factor ** rem >= realized * (1 - 1e-12)]
    return float(_diameters(cells).max())
