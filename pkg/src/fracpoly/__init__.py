"""Exact Ehrhart data of fractional stable set polytopes, cross-checked several ways."""

from .config import DEFAULT_LIMITS, Limits, ResourceLimitError
from .counting import CountRequest, count, count_dfs, count_transfer, frac_counts
from .ehrhart import (
    DeltaVector,
    QuasiPolynomial,
    complete_graph_delta,
    complete_graph_numerator,
    delta_from_counts,
    delta_of_p,
    eulerian,
    is_alternatingly_increasing,
    quasi_polynomial,
    reciprocity_check,
    series_numerator_direct,
    series_numerator_theorem,
)
from .graph import Graph, GraphError, GraphFormatError, family, from_edge_list, is_bipartite, parse_family
from .polynomial import Polynomial, interpolate, is_symmetric, is_unimodal
from .signed_perm import SignedPermutation, descent_count, descent_polynomial_pi, in_pi, split_polynomials

__version__ = "0.1.0"
