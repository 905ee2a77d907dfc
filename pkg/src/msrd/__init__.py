"""Explicit linear MSRD codes with various square block sizes over any finite field."""

__version__ = "0.1.0"

from .bounds import (
    DistanceProfile,
    EligibilityReport,
    RectShape,
    check_eligibility,
    decompose_distance,
    defect,
    singleton_dimension,
)
from .constructions import (
    SubspaceDecomposition,
    SubspaceIso,
    build_construction,
    construct,
    construct_theorem21,
    construct_theorem31,
    decompose_field,
    gabidulin_basis,
)
from .fields import (
    ExtFieldCtx,
    FieldElement,
    FieldSpec,
    decode_int,
    encode_int,
    find_irreducible,
    frobenius,
    make_extension,
    make_field,
    make_prime_field,
)
from .linearized import FqMatrix, QPoly, qpoly_eval, qpoly_rank, rank_fq, to_matrix
from .sumrank import (
    CodeShape,
    LinearSumRankCode,
    SumRankVector,
    basis_rank_check,
    combine,
    enumerate_codewords,
    sum_rank_distance,
    sum_rank_weight,
)
from .verify import (
    MSRDReport,
    is_msrd,
    min_distance_exhaustive,
    min_distance_sampled,
    weight_distribution,
)
