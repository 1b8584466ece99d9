"""Exact invariants of Springer fibers for the classical groups.

Euler characteristics and component-group character multiplicities by
memoized big-integer recursion; graded Betti tables where the degree-wise
recursions apply; closed forms for two-row orbits; embedded tables for the
exceptional groups; and a symmetric-function self-check of the type-A rule.
"""

from .agroup import AGroupShape, shape_of
from .betti import GradedTable, betti_bcd, betti_type_a, classify_bcd, poincare_polynomial
from .euler import (
    euler_char,
    multiplicities,
    trace_expansion,
    twisted_euler,
    type_a_closed_form,
)
from .exctables import irrep_dim, orbit_euler, query
from .partitions import (
    OrbitLabel,
    enumerate_orbits,
    is_very_even,
    parse_partition,
    remove_box,
    remove_h,
    remove_v,
    validate,
)
from .restrict import FormalSum, FormalTerm, evaluate_at_identity, expand
from .symfunc import h_to_m, inner_h, mul_h1, verify_h1_pairing
from .tworow import b_two_row, c_two_row, d_two_row, gl_two_row

__version__ = "0.1.0"

__all__ = [
    "AGroupShape",
    "FormalSum",
    "FormalTerm",
    "GradedTable",
    "OrbitLabel",
    "b_two_row",
    "betti_bcd",
    "betti_type_a",
    "c_two_row",
    "classify_bcd",
    "d_two_row",
    "enumerate_orbits",
    "euler_char",
    "evaluate_at_identity",
    "expand",
    "gl_two_row",
    "h_to_m",
    "inner_h",
    "irrep_dim",
    "is_very_even",
    "mul_h1",
    "multiplicities",
    "orbit_euler",
    "parse_partition",
    "poincare_polynomial",
    "query",
    "remove_box",
    "remove_h",
    "remove_v",
    "shape_of",
    "trace_expansion",
    "twisted_euler",
    "type_a_closed_form",
    "validate",
    "verify_h1_pairing",
]
