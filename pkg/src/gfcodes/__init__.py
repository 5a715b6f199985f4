"""Generalized Hamming weights, subcode support weights and s-minimality of
linear codes over finite fields, with the matching blocking-set machinery."""

from .blocking import (
    BlockingVerdict,
    BoundReport,
    PGPointSet,
    blocking_bounds,
    code_from_pointset,
    exhaustive_min_blocking,
    is_cutting_s_blocking,
    is_t_fold_s_blocking,
    pointset_from_code,
)
from .code import (
    LinearCode,
    SupportSet,
    dual,
    extremal_codewords,
    is_projective,
    minimum_distance,
    parse_code_file,
    projectivize,
    puncture,
    read_code_file,
    subcode_support,
    weight_distribution,
)
from .constructions import (
    CyclicSpec,
    SolomonStifflerSpec,
    ab_violating_extend,
    cyclic_code,
    cyclotomic_cosets,
    min_padding_ts,
    pad_with_simplex,
    paper_example,
    punctured_simplex,
    simplex,
    solomon_stiffler,
    ss_predicted_weights,
    ss_weight_distribution,
)
from .gf import FieldCtx, field_new, gf
from .ghw import SswdTable, WeightReport, check_bounds, ghw_ds, max_weight_Ds, sswd, weight_report
from .matrix import MatrixGF, nullspace, rref_rank, submatrix_columns
from .minimality import (
    GabVerdict,
    MinimalityProfile,
    SubcodeVerdict,
    gab_check,
    is_minimal_subcode,
    is_s_minimal,
    minimality_profile,
    subcode_condition,
)
from .subspace import BudgetExceeded, SubspaceBasis, enumerate_subspaces, gaussian_binomial, span

__version__ = "0.1.0"
