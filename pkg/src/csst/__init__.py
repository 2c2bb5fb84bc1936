"""CSS-T pairs of binary linear codes: verification, poset predicates and cyclic constructions."""

__version__ = "0.1.0"

from ._backend import BACKEND
from .codes import (
    BinaryCode,
    MinWeightResult,
    code_sum,
    codewords,
    contains,
    dual,
    intersect,
    is_even,
    is_self_orthogonal,
    min_weight,
    puncture,
    schur,
    schur_power,
    shorten,
    weight_distribution,
)
from .core import (
    CssTReport,
    QuantumParams,
    SpecialCaseFlags,
    check_triorthogonality_consequence,
    extension_space,
    is_maximal,
    is_maximal_in_c1,
    is_maximal_in_c2,
    is_triorthogonal_matrix,
    pair_family_dmin2,
    propagate,
    propagate_search,
    quantum_params,
    scaling_exponent,
    special_case_checks,
    strong_nonextendability_c1,
    strong_nonextendability_c2,
    verify_csst,
)
from .cyclic import (
    CosetSet,
    amplitude,
    bch_delta,
    csst_cyclic_check,
    cyc_maximality,
    cyclic_code,
    extended_cyclic_code,
    greedy_search,
    minimal_cosets,
    minkowski_sum,
    restricted_csst,
    restricted_weight,
)
from .errors import CapacityError, CsstError, DomainError, InconsistencyError, StructuralError
from .field import ExtField, field_new
from .gf2 import BinaryMatrix, BinaryVector, kernel, rank, rref
from .reed_muller import rm_code, rm_motivating_pair
