"""Commensurability growth invariants over concrete subgroup families.

The package computes exact growth series for cyclic subgroups of the
rationals, realizes the commensurability graph as a metric space over
cyclic subgroups and Hermite-normal-form lattices, builds root systems
for every simple type, evaluates Chevalley group orders over finite
rings, and checks the admissible-cocharacter and maximal-lattice counting
bounds -- each closed form paired with an independent brute-force oracle
at desk scale.
"""

__version__ = "0.1.0"

from .arith import (EULER_MASCHERONI, Factorization, GrowthSeries,
                    check_sandwich_bounds, cn_rank1, dirichlet_residual,
                    divisor_count, divisor_count_sieve, divisors, factorize,
                    growth_series_rank1, is_prime, omega, omega_sieve,
                    omega_sum_ratio, prime_sieve, sum_divisor_count, sum_omega)
from .chevalley import (ORACLE_FAMILIES, brute_force_order, check_order_bound,
                        order_fp, order_zm, order_zpk)
from .commgraph import (CommIndex, GeodesicPath, RationalCyclic,
                        RationalLattice, chain_length, check_transfer_inequality,
                        comm_index, distance, enumerate_ball, geodesic,
                        index_in, intersect, run_metric_checks)
from .errors import DomainError, ResourceLimitError
from .parahoric import (CocharacterCount, check_cocharacter_bound,
                        check_two_k_plus_three, count_admissible_cocharacters,
                        maximal_lattice_bound, per_prime_bound,
                        upper_bound_profile)
from .reporting import BoundReport, compare
from .root_systems import RootSystem, root_system, supported_labels

__all__ = [
    "EULER_MASCHERONI", "Factorization", "GrowthSeries", "check_sandwich_bounds",
    "cn_rank1", "dirichlet_residual", "divisor_count", "divisor_count_sieve",
    "divisors", "factorize", "growth_series_rank1", "is_prime", "omega",
    "omega_sieve", "omega_sum_ratio", "prime_sieve", "sum_divisor_count",
    "sum_omega",
    "ORACLE_FAMILIES", "brute_force_order", "check_order_bound", "order_fp",
    "order_zm", "order_zpk",
    "CommIndex", "GeodesicPath", "RationalCyclic", "RationalLattice",
    "chain_length", "check_transfer_inequality", "comm_index", "distance",
    "enumerate_ball", "geodesic", "index_in", "intersect", "run_metric_checks",
    "DomainError", "ResourceLimitError",
    "CocharacterCount", "check_cocharacter_bound", "check_two_k_plus_three",
    "count_admissible_cocharacters", "maximal_lattice_bound", "per_prime_bound",
    "upper_bound_profile",
    "BoundReport", "compare",
    "RootSystem", "root_system", "supported_labels",
    "__version__",
]
