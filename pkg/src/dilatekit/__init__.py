"""dilatekit: construct and verify unitary dilations of complex contraction matrices.

Core objects: contractions and their defect operators, the Julia operator
with its positive/skew-adjoint split, Halmos dilations and the flip
factorization, the column-switched variant, polynomial intertwining and the
square-root approximation ladder, and finite unitary power dilations.  Every
identity is exposed as a named nonnegative residual judged against an
explicit tolerance.
"""

from .dilation import (
    CONTRACTION_NORM_SLACK,
    Block2x2,
    Contraction,
    DCSplit,
    DefectPair,
    NotAContractionError,
    contraction,
    dc_split,
    defect_pair,
    flip,
    halmos,
    intertwining_residual,
    intertwining_residual_from_split,
    julia,
    julia_column_switched,
    verify_julia,
)
from .generate import KINDS, GeneratorSpec, gen_contraction, haar_unitary
from .linalg import (
    DEFAULT_BASE_TOL,
    HermitianEigen,
    NotHermitianError,
    NotPositiveSemidefiniteError,
    ShapeError,
    adjoint,
    block2x2_assemble,
    block2x2_extract,
    frobenius,
    hermitian_eigen,
    multiply,
    operator_norm,
    psd_sqrt,
    scaled_tol,
)
from .polynomials import (
    MAX_SQRT_POLY_LEVEL,
    coefficient_mass,
    horner_matrix,
    poly_intertwine_residual,
    sqrt_poly_matrix,
    sqrt_poly_sequence,
    weierstrass_convergence_check,
)
from .powerdil import MAX_POWER_STEPS, PowerDilation, dilation_residuals, power_dilation
from .report import ResidualCheck, ResidualReport
from .rng import Xoshiro256StarStar, splitmix64
from .suite import SuiteConfig, derive_seed, run_suite, run_trial, trial_spec

__version__ = "0.1.0"

__all__ = [
    "Block2x2",
    "CONTRACTION_NORM_SLACK",
    "Contraction",
    "DCSplit",
    "DEFAULT_BASE_TOL",
    "DefectPair",
    "GeneratorSpec",
    "HermitianEigen",
    "KINDS",
    "MAX_POWER_STEPS",
    "MAX_SQRT_POLY_LEVEL",
    "NotAContractionError",
    "NotHermitianError",
    "NotPositiveSemidefiniteError",
    "PowerDilation",
    "ResidualCheck",
    "ResidualReport",
    "ShapeError",
    "SuiteConfig",
    "Xoshiro256StarStar",
    "adjoint",
    "block2x2_assemble",
    "block2x2_extract",
    "coefficient_mass",
    "contraction",
    "dc_split",
    "defect_pair",
    "derive_seed",
    "dilation_residuals",
    "flip",
    "frobenius",
    "gen_contraction",
    "haar_unitary",
    "halmos",
    "hermitian_eigen",
    "horner_matrix",
    "intertwining_residual",
    "intertwining_residual_from_split",
    "julia",
    "julia_column_switched",
    "multiply",
    "operator_norm",
    "poly_intertwine_residual",
    "power_dilation",
    "psd_sqrt",
    "run_suite",
    "run_trial",
    "scaled_tol",
    "splitmix64",
    "sqrt_poly_matrix",
    "sqrt_poly_sequence",
    "trial_spec",
    "verify_julia",
    "weierstrass_convergence_check",
]
