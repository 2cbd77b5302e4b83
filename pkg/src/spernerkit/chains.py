"""Chains and cochains with F2 coefficients.

A chain is a finite set of same-dimension simplices; addition is symmetric
difference.  Cochains share the representation and are kept as a separate type
so the two cannot be mixed by accident.  The empty tuple ``()`` plays the role
of the (-1)-simplex in the augmented boundary used by the cone identities.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .complex import Complex, Simplex, SimplicialMap, facets
from .errors import ConeNotInComplexError, DimensionMismatchError, NotASubdivisionError

EMPTY_SIMPLEX: Simplex = ()


@dataclass(frozen=True)
class _F2Sum:
    dim: int
    support: frozenset
    host: Complex = field(compare=False, repr=False)

    def __post_init__(self):
        for s in self.support:
            if len(s) != self.dim + 1:
                raise DimensionMismatchError(f"{s} does not have dimension {self.dim}")
            if s and s not in self.host:
                raise ValueError(f"{s} is not a simplex of the host complex")

    @classmethod
    def zero(cls, host: Complex, dim: int):
        return cls(dim, frozenset(), host)

    @classmethod
    def of(cls, host: Complex, simplices: Iterable[Iterable[int]], dim: int | None = None):
        """Sum of the given simplices (repeated simplices cancel in pairs)."""
        acc: set = set()
        for s in simplices:
            acc ^= {tuple(sorted(s))}
        if dim is None:
            if not acc:
                raise ValueError("cannot infer the dimension of an empty sum")
            dim = len(next(iter(acc))) - 1
        return cls(dim, frozenset(acc), host)

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.dim != self.dim:
            raise DimensionMismatchError(f"dimensions {self.dim} and {other.dim} differ")

    def __add__(self, other):
        self._check(other)
        return type(self)(self.dim, self.support ^ other.support, self.host)

    __sub__ = __add__

    def __bool__(self) -> bool:
        return bool(self.support)

    def __len__(self) -> int:
        return len(self.support)

    def __iter__(self):
        return iter(sorted(self.support))

    def __contains__(self, s) -> bool:
        return tuple(s) in self.support

    def on(self, host: Complex):
        """Same formal sum regarded on another complex (extension by zero or restriction)."""
        return type(self)(self.dim, self.support, host)


class Chain(_F2Sum):
    pass


class Cochain(_F2Sum):
    pass


def _toggle(acc: set, s) -> None:
    if s in acc:
        acc.remove(s)
    else:
        acc.add(s)


def boundary(alpha: Chain, augmented: bool = False) -> Chain:
    """Sum of codimension-one faces.

    The boundary of a 0-chain is the zero (-1)-chain, unless ``augmented`` is
    set, in which case it is the empty simplex counted with the parity of the
    number of vertices.
    """
    acc: set = set()
    if alpha.dim == 0:
        if augmented and len(alpha) % 2:
            acc.add(EMPTY_SIMPLEX)
        return Chain(-1, frozenset(acc), alpha.host)
    for s in alpha.support:
        for f in facets(s):
            _toggle(acc, f)
    return Chain(alpha.dim - 1, frozenset(acc), alpha.host)


def coboundary(beta: Cochain) -> Cochain:
    """Sum of all (m+1)-simplices of the host having a support simplex as a face."""
    acc: set = set()
    cof = beta.host.cofaces
    for t in beta.support:
        for s in cof[t]:
            _toggle(acc, s)
    return Cochain(beta.dim + 1, frozenset(acc), beta.host)


def induced_chain_map(phi: SimplicialMap, alpha: Chain) -> Chain:
    acc: set = set()
    for s in alpha.support:
        img = phi(s)
        if len(img) == len(s):
            _toggle(acc, img)
    return Chain(alpha.dim, frozenset(acc), phi.target)


def induced_cochain_map(phi: SimplicialMap, rho: Cochain) -> Cochain:
    """Preimage cochain: all source simplices mapped bijectively onto a support simplex."""
    acc: set = set()
    if rho.support:
        for t in phi.source.simplices_of_dim(rho.dim):
            img = phi(t)
            if len(img) == len(t) and img in rho.support:
                acc.add(t)
    return Cochain(rho.dim, frozenset(acc), phi.source)


def subdivide_chain(alpha: Chain, sub) -> Chain:
    """Replace each simplex by the sum of equal-dimension refined simplices inside it.

    ``sub`` is a :class:`spernerkit.subdivision.Subdivision` of ``alpha.host``.
    """
    parent = getattr(sub, "parent", None)
    if parent is None or not hasattr(sub, "pieces"):
        raise NotASubdivisionError("object carries no carrier data")
    if alpha.host is not parent.complex and alpha.host != parent.complex:
        raise NotASubdivisionError("chain does not live on the parent of this subdivision")
    acc: set = set()
    for s in alpha.support:
        for t in sub.pieces(s):
            _toggle(acc, t)
    return Chain(alpha.dim, frozenset(acc), sub.refined.complex)


def cone_chain(z: int, alpha: Chain, host: Complex | None = None) -> Chain:
    """Cone with apex ``z``: tau -> tau + {z}, zero when z is already a vertex of tau."""
    host = alpha.host if host is None else host
    acc: set = set()
    for t in alpha.support:
        if z in t:
            continue
        c = tuple(sorted(t + (z,)))
        if c not in host:
            raise ConeNotInComplexError(f"{c} is not a simplex of the host")
        _toggle(acc, c)
    return Chain(alpha.dim + 1, frozenset(acc), host)


def double_cone_chain(w: int, v: int, alpha: Chain, center_face: Simplex, host: Complex) -> Chain:
    """The chain w * (v * alpha) in a stellar subdivision with new vertex ``w``.

    ``center_face`` is the subdivided simplex.  A term vanishes when v is a
    vertex of tau, or when v * tau has the subdivided simplex as a face (then w
    lies in v * tau and the geometric cone degenerates).
    """
    face = set(center_face)
    acc: set = set()
    for t in alpha.support:
        if v in t:
            continue
        vt = tuple(sorted(t + (v,)))
        if face.issubset(vt):
            continue
        c = tuple(sorted(vt + (w,)))
        if c not in host:
            raise ConeNotInComplexError(f"{c} is not a simplex of the host")
        _toggle(acc, c)
    return Chain(alpha.dim + 2, frozenset(acc), host)


def pairing(beta: Cochain, alpha: Chain) -> int:
    if beta.dim != alpha.dim:
        raise DimensionMismatchError(f"cochain of dimension {beta.dim} paired with chain of dimension {alpha.dim}")
    return len(beta.support & alpha.support) % 2


def chain_of_all(host: Complex, m: int) -> Chain:
    return Chain(m, frozenset(host.simplices_of_dim(m)), host)
