"""Exact fusion rings, conformal-block dimensions and rank-level duality for sl(r)."""

from .blocks import CurveSpec, block_dim, factorize_check, level1_dim_closed
from .duality import (
    AlphaKind,
    BranchingSummand,
    CheckReport,
    HypothesisError,
    Triple,
    admissible,
    branching_summands,
    classify_alpha_component,
    genus0_rank_level_check,
    main_theorem_check,
    sd0_identity_check,
    skew_cauchy_check,
)
from .fusion import (
    FusionContext,
    branching_gap,
    conformal_weight,
    fusion_coefficient,
    fusion_product,
    get_context,
    verlinde_smatrix_dim,
)
from .reptheory import (
    casimir_norm,
    exterior_power_dim,
    lr_coefficient,
    tensor_decompose,
    weyl_dim,
)
from .weights import Weight, enumerate_weights, level1_label, level1_weight, weight_dagger
from .young import YoungDiagram, diagram_dagger, enumerate_aff, pi, size, transpose

__version__ = "0.1.0"
