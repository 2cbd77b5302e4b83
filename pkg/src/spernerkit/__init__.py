"""Simplicial complexes over F2, Sperner colorings, path following and fixed points."""
from .chains import (Chain, Cochain, boundary, coboundary, cone_chain, double_cone_chain,
                     induced_chain_map, induced_cochain_map, pairing, subdivide_chain)
from .complex import (Complex, GeometricComplex, SimplicialMap, apply_map, boundary_subcomplex,
                      build_complex, carrier, pseudo_manifold_report, standard_simplex)
from .homology import (HomologyClass, are_cohomologous, cohomology_ranks, connecting_hom,
                       homology_ranks, homology_subdivision_map, induced_on_homology,
                       parity_functional)
from .f2 import F2Matrix, f2_rank
from .subdivision import (CenterChooser, Subdivision, barycenter, barycentric_subdivide,
                          centers_subdivide, iterated_barycentric, mesh, refine_to_mesh, stellar_sequence,
                          stellar_subdivide)
from .approximation import (NeedsRefinement, barycentric_star_contains, covering_order,
                            open_star_contains, pseudo_identical_map, simplicial_approximation)
from .sperner import (FaceCounts, PathGraph, SpernerColoring, build_graph, enumerate_full_cells,
                      face_counts, follow_path, random_coloring, validate_coloring)
from .fixpoint import (FixedPointResult, FixpointConfig, SimplexSelfMap, approximate_fixed_point,
                       builtin_map, kkm_label, residual, solve)
from .mapexpr import MapProgram, eval_map, parse

__version__ = "0.1.0"
