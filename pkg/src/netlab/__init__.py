"""Graph-algorithm performance lab.

Generate random networks with controlled locality and heterogeneity, ingest
real edge lists, measure instrumented graph algorithms, and emit
cost-exponent records keyed by the two structural axes.
"""

from .budget import Budget
from .community import louvain_first_phase, modularity
from .cliques import (CliqueStats, ClosureStats, closure,
                      enumerate_maximal_cliques, structural_report, weak_closure)
from .distances import (estimator_comparison, exact_avg_distance,
                        uniform_pair_avg_distance, weighted_avg_distance)
from .generators import (GeneratorParams, calibrate_weight_constant, generate,
                         generate_chung_lu, generate_er, generate_girg,
                         generate_girg_square, power_law_weights, torus_distance)
from .graph import (Graph, BridgeSet, bfs, build_graph, find_bridges,
                    largest_component, peel_by_degree)
from .kernels import (KernelResult, omega_core_kernel, vc_dominance_kernel,
                      vc_kernel_soundness_check)
from .locality import (LocalityReport, clustering_coefficient, degree_locality,
                       heterogeneity, locality)
from .search import (BidirCost, DiameterResult, bidir_cost_experiment,
                     bidirectional_bfs, double_sweep, four_sweep, ifub,
                     ifub_foursweep_hd, ifub_hd)

__version__ = "0.1.0"
