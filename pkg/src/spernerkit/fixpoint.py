"""Approximate Brouwer fixed points on the standard simplex via KKM labels and path following."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import mapexpr
from .complex import standard_simplex
from .errors import BudgetExceeded, UnknownMapError
from .implicit import BarycentricWalker, iterated_mesh
from .sperner import SpernerColoring, build_graph, follow_path
from .subdivision import iterated_barycentric


def normalize(y, n: int) -> np.ndarray:
    """Clamp negatives to zero and rescale to sum 1; the zero vector goes to the barycenter."""
    y = np.asarray(y, dtype=float)
    if y.shape != (n + 1,):
        raise ValueError(f"map returned {y.shape[0] if y.ndim == 1 else y.shape} values, expected {n + 1}")
    if not np.all(np.isfinite(y)):
        raise ValueError(f"map returned a non-finite value: {y.tolist()}")
    y = np.clip(y, 0.0, None)
    s = y.sum()
    if s == 0:
        return np.full(n + 1, 1.0 / (n + 1))
    return y / s


@dataclass(frozen=True)
class SimplexSelfMap:
    n: int
    evaluator: Callable = field(compare=False)
    name: str = "map"

    def __call__(self, x) -> np.ndarray:
        return normalize(self.evaluator(np.asarray(x, dtype=float)), self.n)


TIE_TOL = 1e-12


def kkm_label(a: Sequence[float], b: Sequence[float], tie_tol: float = TIE_TOL) -> int:
    """Smallest i maximizing a_i - b_i among coordinates with a_i > 0.

    Gaps within ``tie_tol`` of the maximum count as ties, so that rounding
    in how a vertex position was computed cannot change its label.
    """
    gaps = [(i, ai - bi) for i, (ai, bi) in enumerate(zip(a, b)) if ai > 0]
    if not gaps:
        raise ValueError("a has no positive coordinate")
    top = max(g for _, g in gaps)
    return next(i for i, g in gaps if g >= top - tie_tol)


def residual(f: SimplexSelfMap, x) -> float:
    x = np.asarray(x, dtype=float)
    return float(np.max(np.abs(f(x) - x)))


def _barycenter(n: int) -> np.ndarray:
    return np.full(n + 1, 1.0 / (n + 1))


def builtin_map(name: str, n: int, t: float | None = None, center: Sequence[float] | None = None) -> SimplexSelfMap:
    """identity, constant, contraction, cyclic_shift, or ``expr:<source>``.

    ``center`` defaults to the barycenter and ``t`` (contraction only) to 0.5.
    """
    c = _barycenter(n) if center is None else normalize(center, n)
    if name.startswith("expr:"):
        prog = mapexpr.parse(name[5:], n)
        return SimplexSelfMap(n, lambda x: mapexpr.eval_map(prog, x), name)
    if name == "identity":
        return SimplexSelfMap(n, lambda x: x, name)
    if name == "constant":
        return SimplexSelfMap(n, lambda x: c, name)
    if name == "contraction":
        tt = 0.5 if t is None else float(t)
        if not 0 <= tt <= 1:
            raise ValueError("contraction parameter must lie in [0, 1]")
        return SimplexSelfMap(n, lambda x: (1 - tt) * x + tt * c, name)
    if name == "cyclic_shift":
        return SimplexSelfMap(n, lambda x: np.roll(x, -1), name)
    raise UnknownMapError(f"unknown map {name!r}")


@dataclass(frozen=True)
class FixpointConfig:
    eps: float = 0.05
    cap: int = 30
    backend: str = "auto"  # "auto", "explicit" or "implicit"
    max_explicit_cells: int = 10_000


@dataclass(frozen=True)
class FixedPointResult:
    point: tuple
    residual: float
    cell: tuple  # vertex positions (barycentric) of the fully labelled cell
    labels: tuple
    mesh: float
    refinements: int
    backend: str
    steps: int = 0


def refinements_needed(n: int, eps: float, cap: int = 30) -> int:
    """Smallest k with mesh(b^k delta^n) < eps."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    k = 0
    while iterated_mesh(n, k) >= eps:
        if k >= cap:
            raise BudgetExceeded(f"mesh {iterated_mesh(n, k):.3g} still >= {eps} after {cap} refinements")
        k += 1
    return k


def approximate_fixed_point(f: SimplexSelfMap, eps: float = 0.05, cap: int = 30,
                            backend: str = "auto", max_explicit_cells: int = 10_000) -> FixedPointResult:
    n = f.n
    k = refinements_needed(n, eps, cap)
    if backend == "auto":
        backend = "explicit" if math.factorial(n + 1) ** k <= max_explicit_cells else "implicit"
    if backend == "explicit":
        cell, labels, steps = _explicit_cell(f, k)
    elif backend == "implicit":
        cell, labels, steps = _implicit_cell(f, k)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    point = np.mean(np.array(cell), axis=0)
    return FixedPointResult(tuple(float(c) for c in point), residual(f, point), cell, labels,
                            iterated_mesh(n, k), k, backend, steps)


def solve(f: SimplexSelfMap, config: FixpointConfig) -> FixedPointResult:
    return approximate_fixed_point(f, config.eps, config.cap, config.backend, config.max_explicit_cells)


def _implicit_cell(f: SimplexSelfMap, k: int):
    walker = BarycentricWalker(f.n, k, lambda a, _exact: kkm_label(a, f(a)))
    res = walker.run()
    cell = tuple(tuple(float(c) / res.scale for c in v) for v in res.vertices)
    return _canonical(cell, res.labels) + (res.steps,)


def kkm_coloring(f: SimplexSelfMap, sub) -> SpernerColoring:
    G = sub.refined
    return SpernerColoring(sub, {v: kkm_label(G.point(v), f(G.point(v))) for v in G.complex.vertices})


def _explicit_cell(f: SimplexSelfMap, k: int):
    sub = iterated_barycentric(standard_simplex(f.n), k)
    col = kkm_coloring(f, sub)
    graph = build_graph(col)
    s = follow_path(graph)
    G = sub.refined
    cell = tuple(tuple(float(c) for c in G.point(v)) for v in s)
    return _canonical(cell, tuple(col.labels[v] for v in s)) + (len(graph.nodes),)


def _canonical(cell: tuple, labels: tuple):
    """Order the vertices of a full cell by label."""
    order = sorted(range(len(cell)), key=lambda j: labels[j])
    return tuple(cell[j] for j in order), tuple(labels[j] for j in order)
