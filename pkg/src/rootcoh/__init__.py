"""Exact root-system combinatorics and cohomology-degree bookkeeping.

The library builds the positive-root catalogue of any simple type A1..G2 in
integer arithmetic, regularizes weights under the dot action of the Weyl
group, enumerates sums of p distinct roots, evaluates the dominance or
singularity hypothesis that forces twisted (p, q) cohomology of the complete
flag variety to vanish, and constructs certificates that the top-but-one
exterior degree carries nonvanishing first cohomology for an ample line
bundle in every rank >= 2 type.
"""

from .rootsys import (
    ColumnStats,
    PositiveRootsMatrix,
    Root,
    RootSystem,
    RootSystemError,
    SimpleType,
    Weight,
    all_simple_types,
    build_root_system,
    coroot_coords,
    coxeter_numbers,
    positive_roots_matrix,
    root_system,
    rs_from_json,
    rs_to_json,
    to_weight_coords,
)
from .weyl import BwbOutcome, WeylError, bwb, dot_reflect, pairing, weyl_dim
from .exterior import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    ExteriorError,
    WeightMultiset,
    lambda_p_weights,
    max_column_profile,
    phi_sums,
)
from .vanishing import (
    VanishingError,
    VanishingReport,
    check_theorem1,
    corollary_bound,
    prop2_threshold,
)
from .nonvanishing import (
    CertificateError,
    E1Page,
    NonvanishingCertificate,
    build_certificate,
    classify_lemma11,
    e1_page,
    theorem12_lambda,
)

__all__ = [
    "BudgetExceededError",
    "BwbOutcome",
    "CertificateError",
    "ColumnStats",
    "DEFAULT_BUDGET",
    "E1Page",
    "ExteriorError",
    "NonvanishingCertificate",
    "PositiveRootsMatrix",
    "Root",
    "RootSystem",
    "RootSystemError",
    "SimpleType",
    "VanishingError",
    "VanishingReport",
    "Weight",
    "WeightMultiset",
    "WeylError",
    "all_simple_types",
    "build_certificate",
    "build_root_system",
    "bwb",
    "check_theorem1",
    "classify_lemma11",
    "coroot_coords",
    "corollary_bound",
    "coxeter_numbers",
    "dot_reflect",
    "e1_page",
    "lambda_p_weights",
    "max_column_profile",
    "pairing",
    "phi_sums",
    "positive_roots_matrix",
    "prop2_threshold",
    "root_system",
    "rs_from_json",
    "rs_to_json",
    "theorem12_lambda",
    "to_weight_coords",
    "weyl_dim",
]

__version__ = "0.1.0"
