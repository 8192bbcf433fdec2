"""Exact magnitude homology (plain, Eulerian, discriminant) of finite graphs."""

from .chains import (GradedPath, PathBasis, SimplicialComplex, asao_izumihara, boundary_matrix,
                     enumerate_paths, paths_by_endpoints, simplicial_boundaries)
from .corpus import corpus, corpus_cw
from .formulas import (CheckReport, SupportBounds, complete_formulas, emh_max_check, falling_factorial,
                       path_recurrence_check, star_formulas, support_bounds, tree_diagonality_check)
from .graphs import DistanceMatrix, Graph, PowerSeries, all_pairs_distances, generate, magnitude_series
from .homology import (BiGradedTable, HomologyGroup, euler_check, grading_cell, homology, table,
                       torsion_witness)
from .posets import (IntChain, NotRanked, OrderComplex, Poset, RegularCW, adjoin_bounds,
                     alpha_gamma_chains, build_pk_sigma, face_poset, hasse_graph, order_complex, rank_of)
from .snf import SNFResult, smith_normal_form
from .sparse import SparseIntMatrix

__version__ = "0.1.0"
