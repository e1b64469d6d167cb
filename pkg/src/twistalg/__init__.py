"""Twisted group algebras over finite groups.

Construct sign tables (trivial, Hadamard, Cayley-Dickson, Clifford, or
custom), check their laws exhaustively with counterexample reporting,
do exact or float64 arithmetic in the twisted algebras through three
mutually checking product routes, enumerate proper twists on small
groups, hunt zero divisors, and run the seeded norm-ratio experiment.
"""

from .algebra import (
    EXACT,
    FLOAT64,
    Element,
    StandardMatrix,
    adjoint_check,
    antisymmetric_product,
    basis,
    conjugate,
    conjugate_antihomomorphism_check,
    element,
    element_from_json_obj,
    element_to_json_obj,
    fourier_product_forms,
    inner_product,
    multiply,
    multiply_via_fourier,
    multiply_via_matrix,
    norm,
    norm_squared,
    one,
    sas_decomposition,
    standard_matrix,
    symmetric_product,
    zero,
    zero_theorem_check,
)
from .cayley_dickson import (
    blade_factor_cd,
    left_nested_blade_product,
    pair_conjugate,
    pair_product,
    quaternion_triplets,
    shuffle,
    unshuffle,
)
from .clifford import (
    BladeExpression,
    blade_conjugate,
    blade_multiply,
    e_to_i,
    format_blade,
    grade,
    i_to_e,
    parity,
    parse_blade,
)
from .errors import (
    BladeParseError,
    ContextMismatchError,
    IncompleteEnumerationError,
    InvalidElementError,
    TableFormatError,
    TwistAlgError,
    UnsupportedTwistError,
)
from .groups import GroupSpec, cyclic_group, interior, inverse, parse_group, product, xor_group
from .normscan import NormScanReport, norm_scan
from .search import (
    EnumerationResult,
    classify,
    enumerate_proper_twists,
    enumerate_proper_twists_naive,
    find_zero_divisor,
    verify_twist_group,
)
from .twists import (
    PropertyReport,
    TwistTable,
    cayley_dickson_twist,
    check_associative,
    check_commutative,
    check_invertive,
    check_proper,
    check_unital,
    clifford_twist,
    custom_twist,
    hadamard_twist,
    is_proper,
    named_twist,
    parse_twist_spec,
    table_from_csv,
    table_from_json_obj,
    table_to_csv,
    table_to_json_obj,
    trivial_twist,
    twist_product,
)

__version__ = "0.1.0"
