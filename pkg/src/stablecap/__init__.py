"""Capacity-based approximate counting with real stable polynomials."""
from .capacity import (CapacityProblem, CapacityResult, SaddleConfig, gurvits_interval,
                       inner_capacity, relaxation_capacity, saddle_capacity, solve,
                       univariate_capacity)
from .counting import (ApproxResult, RoundedSolution, approx_correlation,
                       approx_max_coeff_product, detmax, kdpp_similarity,
                       multilinear_lower_bound, schrijver_check)
from .exact import exact_kdpp_sum, exact_max_product, exhaustive_correlation, ryser_permanent
from .newton import NewtonPolytope, is_jump_system, jump_greedy, membership_probe, newton_membership
from .oracles import (EvalOracle, charpoly_coefficient_oracle, dpp_generating_oracle,
                      elementary_symmetric_oracle, linear_product_oracle, partition_matroid_oracle,
                      permanent_poly, sinkhorn, sparse_oracle, spanning_tree_oracle)
from .poly import SparsePoly, exact_correlation, polarize

__version__ = "0.1.0"
