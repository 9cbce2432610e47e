"""Critical-line numerics: Hardy functions, Riemann-Siegel machinery,
Hilbert-space orthogonalization, polynomial zero studies, and zero /
close-pair scanning, with a per-claim verification report."""

from .errors import (
    BracketError,
    ContourError,
    DependenceError,
    DomainError,
    EvaluationError,
    NumericsError,
    PoleError,
)
from .hilbert import (
    GramMatrix,
    IndependenceReport,
    Interval,
    QuadratureRule,
    SampledFunction,
    correlation_matrix,
    gauss_legendre_rule,
    gram_matrix,
    gram_schmidt,
    hardy_function,
    independence_report,
    inner_product,
    norm,
    oscillation_order,
)
from .output import SvgStyle, emit_spiral_svg, write_spiral_csv
from .polyzero import (
    Basis,
    PolynomialRealCoeffs,
    ProjectionResult,
    ZeroComparison,
    poly_real_zeros,
    project,
    zero_convergence_study,
)
from .report import ReportEntry, RunConfig, load_schema, run_report
from .specialfn import ThetaMode, chi, log_gamma, theta, theta_derivative
from .zerofinder import (
    LehmerPair,
    ZeroRecord,
    argument_principle_count,
    find_critical_zeros,
    lehmer_scan,
    refine_zero,
    scan_sign_changes,
    zero_count_estimate,
)
from .zetaeval import (
    KAPPA,
    EvalConfig,
    GeneralizedHardyValue,
    SpiralPath,
    davenport_heilbronn,
    dirichlet_l_mod5,
    dirichlet_partial_sums,
    generalized_hardy,
    hardy_z_rs,
    hurwitz_zeta,
    residue_identity_residual,
    zeta_em,
)

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "BracketError",
    "ContourError",
    "DependenceError",
    "DomainError",
    "EvalConfig",
    "EvaluationError",
    "GeneralizedHardyValue",
    "GramMatrix",
    "IndependenceReport",
    "Interval",
    "KAPPA",
    "LehmerPair",
    "NumericsError",
    "PoleError",
    "PolynomialRealCoeffs",
    "ProjectionResult",
    "QuadratureRule",
    "ReportEntry",
    "RunConfig",
    "SampledFunction",
    "SpiralPath",
    "SvgStyle",
    "ThetaMode",
    "ZeroComparison",
    "ZeroRecord",
    "argument_principle_count",
    "chi",
    "correlation_matrix",
    "davenport_heilbronn",
    "dirichlet_l_mod5",
    "dirichlet_partial_sums",
    "emit_spiral_svg",
    "find_critical_zeros",
    "gauss_legendre_rule",
    "generalized_hardy",
    "gram_matrix",
    "gram_schmidt",
    "hardy_function",
    "hardy_z_rs",
    "hurwitz_zeta",
    "independence_report",
    "inner_product",
    "lehmer_scan",
    "load_schema",
    "log_gamma",
    "norm",
    "oscillation_order",
    "poly_real_zeros",
    "project",
    "refine_zero",
    "residue_identity_residual",
    "run_report",
    "scan_sign_changes",
    "theta",
    "theta_derivative",
    "write_spiral_csv",
    "zero_convergence_study",
    "zero_count_estimate",
    "zeta_em",
]
