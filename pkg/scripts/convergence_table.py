"""Residual of the approximate fixed point as the mesh shrinks.

    python3 scripts/convergence_table.py --maps contraction cyclic_shift --eps 0.1 0.05 0.025 0.02
"""
import argparse
import time

from spernerkit.fixpoint import approximate_fixed_point, builtin_map


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dim", type=int, default=2)
    ap.add_argument("--maps", nargs="+", default=["contraction", "cyclic_shift"])
    ap.add_argument("--t", type=float, nargs="+", default=[0.25, 0.5, 1.0], help="contraction strengths")
    ap.add_argument("--eps", type=float, nargs="+", default=[0.1, 0.05, 0.025, 0.02])
    ap.add_argument("--backend", default="auto", choices=["auto", "explicit", "implicit"])
    args = ap.parse_args()

    print(f"{'map':<22}{'eps':>8}{'k':>4}{'mesh':>10}{'residual':>12}{'res/eps':>9}{'backend':>10}{'sec':>7}")
    for name in args.maps:
        params = args.t if name == "contraction" else [None]
        for t in params:
            f = builtin_map(name, args.dim, t=t)
            label = name if t is None else f"{name}(t={t:g})"
            for eps in args.eps:
                start = time.perf_counter()
                r = approximate_fixed_point(f, eps, backend=args.backend)
                sec = time.perf_counter() - start
                print(f"{label:<22}{eps:>8g}{r.refinements:>4}{r.mesh:>10.5f}{r.residual:>12.6f}"
                      f"{r.residual / eps:>9.3f}{r.backend:>10}{sec:>7.2f}")


if __name__ == "__main__":
    main()
