"""Command line front end: ``python -m spernerkit <command> ...``.

Exit status is 0 on success, 1 on a domain error and 2 on a usage error.
Reports are ``key value`` lines on stdout.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import fileio
from .approximation import barycentric_star_contains, open_star_contains
from .complex import Complex, GeometricComplex, boundary_subcomplex, carrier, standard_simplex
from .errors import TopologyError
from .fixpoint import approximate_fixed_point, builtin_map
from .homology import cohomology_ranks, homology_ranks
from .mapexpr import ExprError
from .sperner import (
    SpernerColoring,
    build_graph,
    enumerate_full_cells,
    face_counts,
    follow_path,
    validate_coloring,
)
from .subdivision import Subdivision, iterated_barycentric, mesh, stellar_subdivide


class UsageError(Exception):
    pass


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def _ids(s) -> str:
    return " ".join(str(v) for v in s)


def _floats(text: str) -> list[float]:
    try:
        return [float(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"cannot parse numbers from {text!r}") from None


def _geometric(path) -> GeometricComplex:
    c = fileio.load_complex(path)
    if not isinstance(c, GeometricComplex):
        raise TopologyError(f"{path} has no vertex coordinates")
    return c


def cmd_homology(args, out):
    c = fileio.load_complex(args.file)
    K = c.complex if isinstance(c, GeometricComplex) else c
    if args.relative and not args.cohomology:
        raise UsageError("--relative needs --cohomology")
    if not args.cohomology:
        for m, r in enumerate(homology_ranks(K)):
            print(f"H_{m} {r}", file=out)
        return
    Q = None
    if args.relative == "boundary":
        Q = boundary_subcomplex(K)
        print("relative boundary", file=out)
    elif args.relative:
        q = fileio.load_complex(args.relative)
        Q = q.complex if isinstance(q, GeometricComplex) else q
        print(f"relative {args.relative}", file=out)
    for m, r in enumerate(cohomology_ranks(K, Q)):
        print(f"H^{m} {r}", file=out)


def cmd_subdivide(args, out):
    G = _geometric(args.file)
    if args.barycentric is not None:
        if args.barycentric < 0:
            raise UsageError("--barycentric needs a non-negative count")
        sub = iterated_barycentric(G, args.barycentric)
    else:
        s = tuple(sorted(int(v) for v in args.stellar.replace(",", " ").split()))
        if args.center == "barycenter":
            w = None
        else:
            w = np.array(_floats(args.center))
        sub = stellar_subdivide(G, s, w)
    R = sub.refined
    if args.output:
        fileio.save_complex(R, args.output)
        print(f"vertices {len(R.complex.vertices)}", file=out)
        print(f"top_cells {R.complex.count(R.complex.dimension)}", file=out)
        print(f"mesh {_fmt(mesh(R))}", file=out)
        print(f"written {args.output}", file=out)
    else:
        out.write(fileio.format_complex(R))


def cmd_sperner(args, out):
    G = _geometric(args.file)
    n = G.complex.dimension
    if G.ambient_dim != n + 1:
        raise TopologyError(f"expected coordinates in R^{n + 1} (barycentric), got R^{G.ambient_dim}")
    sub = Subdivision.from_geometry(G, standard_simplex(n))
    labels = fileio.load_labels(args.labels)
    col = SpernerColoring(sub, labels)
    if not validate_coloring(col):
        print("valid no", file=out)
        return 1
    print("valid yes", file=out)
    full = enumerate_full_cells(col)
    print(f"full_cells {len(full)} (odd: {'yes' if len(full) % 2 else 'no'})", file=out)
    for s in full:
        print(f"full_cell {_ids(s)}", file=out)
    for i in range(n + 1):
        fc = face_counts(col, i)
        print(f"face_counts i={i} e={fc.e} f={fc.f} g={fc.g} h={fc.h} {'ok' if fc.balanced else 'FAIL'}", file=out)
    if args.graph:
        g = build_graph(col)
        print(f"graph_nodes {len(g.nodes)}", file=out)
        print(f"graph_edges {g.edge_count()}", file=out)
        print(f"endpoints {len(g.endpoints())}", file=out)
        print(f"path_end {_ids(follow_path(g))}", file=out)
    return 0


def cmd_fixpoint(args, out):
    center = _floats(args.center) if args.center else None
    f = builtin_map(args.map, args.dim, t=args.t, center=center)
    r = approximate_fixed_point(f, args.eps, cap=args.cap, backend=args.backend)
    print(f"map {args.map}", file=out)
    print(f"dim {args.dim}", file=out)
    print(f"refinements {r.refinements}", file=out)
    print(f"mesh {_fmt(r.mesh)}", file=out)
    print("point " + " ".join(_fmt(x) for x in r.point), file=out)
    print(f"residual {_fmt(r.residual)}", file=out)
    for lab, v in zip(r.labels, r.cell):
        print(f"cell_vertex {lab} " + " ".join(_fmt(x) for x in v), file=out)


def cmd_stars(args, out):
    G = _geometric(args.file)
    x = np.array(_floats(args.point))
    face, coords = carrier(x, G)
    print(f"carrier {_ids(face)}", file=out)
    print("coords " + " ".join(_fmt(a) for a in coords), file=out)
    print(f"open_star {_ids(v for v in G.complex.vertices if open_star_contains(v, x, G))}", file=out)
    print(f"barycentric_star {_ids(v for v in G.complex.vertices if barycentric_star_contains(v, x, G))}",
          file=out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spernerkit", description="F2 topology, Sperner colorings and fixed points")
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("homology", help="Betti numbers over F2")
    h.add_argument("file")
    h.add_argument("--relative", metavar="boundary|QFILE")
    h.add_argument("--cohomology", action="store_true")
    h.set_defaults(func=cmd_homology)

    s = sub.add_parser("subdivide", help="barycentric or stellar subdivision")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--barycentric", type=int, metavar="K")
    g.add_argument("--stellar", metavar="SIMPLEX")
    s.add_argument("--center", default="barycenter")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_subdivide)

    sp = sub.add_parser("sperner", help="check a Sperner coloring")
    sp.add_argument("file")
    sp.add_argument("--labels", required=True)
    sp.add_argument("--graph", action="store_true")
    sp.set_defaults(func=cmd_sperner)

    fp = sub.add_parser("fixpoint", help="approximate fixed point of a map of the simplex")
    fp.add_argument("--dim", type=int, required=True)
    fp.add_argument("--map", required=True, metavar='NAME|expr:"..."')
    fp.add_argument("--eps", type=float, required=True)
    fp.add_argument("--cap", type=int, default=30)
    fp.add_argument("--t", type=float, default=None, help="contraction strength")
    fp.add_argument("--center", default=None, help="target point for constant/contraction")
    fp.add_argument("--backend", choices=["auto", "explicit", "implicit"], default="auto")
    fp.set_defaults(func=cmd_fixpoint)

    st = sub.add_parser("stars", help="carrier and star membership of a point")
    st.add_argument("file")
    st.add_argument("--point", required=True)
    st.set_defaults(func=cmd_stars)
    return p


def dispatch(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        status = args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"spernerkit: error: {exc}", file=sys.stderr)
        return 2
    except (TopologyError, ExprError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return status or 0


def main() -> None:
    sys.exit(dispatch())
