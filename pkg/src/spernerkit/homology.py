"""Homology and cohomology over F2, absolute and relative, with the maps between them."""
from __future__ import annotations

from dataclasses import dataclass

from .chains import Chain, Cochain, boundary, coboundary, induced_chain_map, subdivide_chain
from .complex import Complex, SimplicialMap, facets
from .errors import DimensionMismatchError, NotACocycleError, NotACycleError, NotASubcomplexError
from .f2 import F2Matrix, f2_nullspace, f2_rank, f2_solve


def boundary_matrix(S: Complex, m: int) -> F2Matrix:
    """Matrix of the boundary C_m -> C_{m-1}; lexicographic simplex order on both sides."""
    cols_s = S.simplices_of_dim(m)
    if m <= 0:
        return F2Matrix.zeros(0, len(cols_s))
    idx = S.index
    cols = []
    for s in cols_s:
        c = 0
        for f in facets(s):
            c |= 1 << idx[f]
        cols.append(c)
    return F2Matrix(S.count(m - 1), len(cols_s), tuple(cols))


def coboundary_matrix(S: Complex, m: int, relative_to: Complex | None = None) -> F2Matrix:
    """Matrix of the coboundary C^m -> C^{m+1}, restricted to simplices outside ``relative_to``."""
    src = _free(S, m, relative_to)
    dst = _free(S, m + 1, relative_to)
    pos = {s: i for i, s in enumerate(dst)}
    cols = []
    for t in src:
        c = 0
        for s in S.cofaces[t]:
            if s in pos:
                c |= 1 << pos[s]
        cols.append(c)
    return F2Matrix(len(dst), len(src), tuple(cols))


def _free(S: Complex, m: int, Q: Complex | None) -> tuple:
    group = S.simplices_of_dim(m) if m >= 0 else ()
    if Q is None:
        return group
    return tuple(s for s in group if s not in Q)


def _mask(simplices, order) -> int:
    pos = {s: i for i, s in enumerate(order)}
    out = 0
    for s in simplices:
        out |= 1 << pos[s]
    return out


def _unmask(mask: int, order) -> frozenset:
    return frozenset(order[i] for i in range(len(order)) if (mask >> i) & 1)


def homology_ranks(S: Complex, up_to: int | None = None) -> list[int]:
    top = S.dimension if up_to is None else up_to
    ranks = [f2_rank(boundary_matrix(S, m)) for m in range(top + 2)]
    return [S.count(m) - ranks[m] - ranks[m + 1] for m in range(top + 1)]


def cohomology_ranks(S: Complex, Q: Complex | None = None, up_to: int | None = None) -> list[int]:
    if Q is not None and not Q.is_subcomplex_of(S):
        raise NotASubcomplexError("relative cohomology needs a subcomplex")
    top = S.dimension if up_to is None else up_to
    ranks = {m: f2_rank(coboundary_matrix(S, m, Q)) for m in range(-1, top + 1)}
    return [len(_free(S, m, Q)) - ranks[m] - ranks[m - 1] for m in range(top + 1)]


def cycle_basis(S: Complex, m: int) -> list[Chain]:
    order = S.simplices_of_dim(m)
    return [Chain(m, _unmask(v, order), S) for v in f2_nullspace(boundary_matrix(S, m))]


def is_boundary(alpha: Chain) -> bool:
    S = alpha.host
    M = boundary_matrix(S, alpha.dim + 1)
    return f2_solve(M, _mask(alpha.support, S.simplices_of_dim(alpha.dim))) is not None


def is_relative_coboundary(beta: Cochain, Q: Complex | None = None) -> bool:
    S = beta.host
    if beta.dim == 0:
        return not beta.support
    M = coboundary_matrix(S, beta.dim - 1, Q)
    order = _free(S, beta.dim, Q)
    if Q is not None and any(s in Q for s in beta.support):
        return False
    return f2_solve(M, _mask(beta.support, order)) is not None


def homology_basis(S: Complex, m: int) -> list[Chain]:
    """Cycles whose classes form a basis of H_m."""
    order = S.simplices_of_dim(m)
    bmat = boundary_matrix(S, m + 1)
    span = list(bmat.cols)
    out = []
    for z in cycle_basis(S, m):
        v = _mask(z.support, order)
        if f2_solve(F2Matrix(len(order), len(span), tuple(span)), v) is None:
            span.append(v)
            out.append(z)
    return out


def is_cycle(alpha: Chain) -> bool:
    return alpha.dim == 0 or not boundary(alpha)


def is_cocycle(beta: Cochain, Q: Complex | None = None) -> bool:
    if Q is not None and any(s in Q for s in beta.support):
        return False
    return not coboundary(beta)


@dataclass(frozen=True)
class HomologyClass:
    """Class of a cycle (Chain) or cocycle (Cochain), optionally relative to a subcomplex."""

    representative: Chain | Cochain
    relative_to: Complex | None = None

    def __post_init__(self):
        rep = self.representative
        if isinstance(rep, Chain):
            if not is_cycle(rep):
                raise NotACycleError("representative is not a cycle")
        elif not is_cocycle(rep, self.relative_to):
            raise NotACocycleError("representative is not a (relative) cocycle")

    @property
    def dim(self) -> int:
        return self.representative.dim

    @property
    def host(self) -> Complex:
        return self.representative.host

    @property
    def is_cohomology(self) -> bool:
        return isinstance(self.representative, Cochain)

    def is_zero(self) -> bool:
        if self.is_cohomology:
            return is_relative_coboundary(self.representative, self.relative_to)
        return is_boundary(self.representative)

    def same_as(self, other: "HomologyClass") -> bool:
        if other.dim != self.dim:
            raise DimensionMismatchError("classes of different dimensions")
        diff = self.representative + other.representative.on(self.host)
        return HomologyClass(diff, self.relative_to).is_zero()


def are_cohomologous(beta1: Cochain, beta2: Cochain, relative_to: Complex | None = None) -> bool:
    for b in (beta1, beta2):
        if not is_cocycle(b, relative_to):
            raise NotACocycleError("both arguments must be (relative) cocycles")
    return is_relative_coboundary(beta1 + beta2, relative_to)


def _rep(a):
    """Representative of a class; a bare chain or cochain is accepted as its own representative."""
    return a.representative if isinstance(a, HomologyClass) else a


def connecting_hom(S: Complex, Q: Complex, a) -> HomologyClass:
    """Extend the representative by zero to S, take the coboundary, return its class rel Q."""
    if not Q.is_subcomplex_of(S):
        raise NotASubcomplexError("Q must be a subcomplex of S")
    rep = _rep(a)
    if not isinstance(rep, Cochain) or not is_cocycle(rep.on(Q)):
        raise NotACocycleError("representative is not a cocycle of Q")
    return HomologyClass(coboundary(rep.on(S)), Q)


def homology_subdivision_map(h, sub) -> HomologyClass:
    rep = _rep(h)
    if not is_cycle(rep):
        raise NotACycleError("representative is not a cycle")
    return HomologyClass(subdivide_chain(rep, sub))


def induced_on_homology(phi: SimplicialMap, h) -> HomologyClass:
    rep = _rep(h)
    if not is_cycle(rep):
        raise NotACycleError("representative is not a cycle")
    return HomologyClass(induced_chain_map(phi, rep))


def parity_functional(beta: Cochain) -> int:
    """Number of simplices in the cochain, mod 2."""
    return len(beta.support) % 2
