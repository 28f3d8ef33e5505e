"""Numerical range toolkit.

Computes numerical ranges, numerical radii and spectral norms of complex
matrices, classifies normaloid operators through norm-additivity of scalar
translates, and checks the supremum identity for translated bounded
sequences.
"""

from .boundary import (
    NumericalRangeProfile,
    SupportSample,
    boundary_sweep,
    extremal_point,
    membership,
    numerical_radius,
    support_function,
    support_values,
)
from .ensembles import EnsembleSpec, generate, generate_sequence
from .errors import (
    DimensionTooLarge,
    InvalidSpec,
    LambdaOutOfDisk,
    NonHermitianInput,
    NotNormaloid,
    NumRangeError,
    ZeroLambda,
    ZeroOperator,
    ZeroSet,
)
from .linalg import adjoint, as_matrix, eig_hermitian, rotated_hermitian_part, spectral_norm, translate_norms
from .normaloid import (
    NormaloidReport,
    additivity_defect,
    additivity_holds,
    bb_condition,
    classify,
    corollary_sup,
    lemma_translate,
    sup_modulus,
    theorem_witness,
)
from .sequences import TheoremVerdict, diagonal_operator, inequality_check, translated_sup, verify_main_theorem

__version__ = "0.1.0"

__all__ = [
    "DimensionTooLarge",
    "EnsembleSpec",
    "InvalidSpec",
    "LambdaOutOfDisk",
    "NonHermitianInput",
    "NormaloidReport",
    "NotNormaloid",
    "NumRangeError",
    "NumericalRangeProfile",
    "SupportSample",
    "TheoremVerdict",
    "ZeroLambda",
    "ZeroOperator",
    "ZeroSet",
    "additivity_defect",
    "additivity_holds",
    "adjoint",
    "as_matrix",
    "bb_condition",
    "boundary_sweep",
    "classify",
    "corollary_sup",
    "diagonal_operator",
    "eig_hermitian",
    "extremal_point",
    "generate",
    "generate_sequence",
    "inequality_check",
    "lemma_translate",
    "membership",
    "numerical_radius",
    "rotated_hermitian_part",
    "spectral_norm",
    "sup_modulus",
    "support_function",
    "support_values",
    "theorem_witness",
    "translate_norms",
    "translated_sup",
    "verify_main_theorem",
]
