"""Radii of starlikeness for normalized Lommel and Struve functions.

The package evaluates the six normalized quotient families (f, g, h on
the Lommel side; u, v, w on the Struve side), solves for the largest
disk on which Re(z f'(z) / f(z)) stays above a given level alpha, and
ships the verification machinery used to certify those radii: exact
rational coefficient streams, Sturm-chain hyperbolicity checks, Jensen
polynomials, Hadamard product cross-checks, and boundary sampling.
"""

__version__ = "0.1.0"

from .errors import (
    DegenerateSequence,
    InvalidParameter,
    InvalidQuery,
    NoRootFound,
    NoSignChange,
    NonConvergent,
    PreconditionViolated,
    QuadratureFailure,
    SingularPoint,
    StarRadError,
    TargetBelowInfimum,
)
from .radius import (
    RadiusQuery,
    RadiusResult,
    Regime,
    TableRow,
    equation_constant,
    radius_of_starlikeness,
    radius_table,
)
from .series import (
    EvenSeries,
    FunctionFamily,
    LommelOrder,
    SeriesConfig,
    SeriesValue,
    StruveOrder,
    eval_on_imag,
    even_series_value,
    even_series_weighted_sums,
    hyp1f2_unit,
    imag_axis_quotient,
    lommel_numerator_series,
    lommel_s,
    phi0_series,
    phi1_series,
    phi_k,
    phi_series,
    quotient_real_on_circle,
    star_quotient,
    struve_h,
    struve_kernel_series,
    struve_numerator_series,
)
from .suites import SUITE_NAMES, SweepCell, certification_sweep, imaginary_axis_reports, run_suite
from .verify import (
    HyperbolicityReport,
    Polynomial,
    VerificationReport,
    boundary_min_real_part,
    hadamard_truncation_error,
    hyperbolicity_check,
    integral_representation_residual,
    jensen_gamma,
    jensen_polynomial,
    newton_power_sums,
    obrechkoff_combination,
    ode_residual,
    recurrence_residual,
    sturm_real_root_count,
    zero_bounds_check,
)
from .zerofind import (
    Bracket,
    RootResult,
    ScanConfig,
    bisect,
    positive_zeros_up_to,
    scan_sign_changes,
    smallest_positive_zero,
    solve_monotone_level,
)

__all__ = [
    "__version__",
    # errors
    "StarRadError",
    "InvalidParameter",
    "InvalidQuery",
    "SingularPoint",
    "NonConvergent",
    "NoSignChange",
    "NoRootFound",
    "TargetBelowInfimum",
    "DegenerateSequence",
    "PreconditionViolated",
    "QuadratureFailure",
    # series
    "FunctionFamily",
    "SeriesConfig",
    "SeriesValue",
    "EvenSeries",
    "LommelOrder",
    "StruveOrder",
    "phi_series",
    "phi0_series",
    "phi1_series",
    "lommel_numerator_series",
    "struve_kernel_series",
    "struve_numerator_series",
    "hyp1f2_unit",
    "phi_k",
    "lommel_s",
    "struve_h",
    "even_series_value",
    "eval_on_imag",
    "even_series_weighted_sums",
    "star_quotient",
    "imag_axis_quotient",
    "quotient_real_on_circle",
    # zero finding
    "Bracket",
    "RootResult",
    "ScanConfig",
    "scan_sign_changes",
    "bisect",
    "smallest_positive_zero",
    "positive_zeros_up_to",
    "solve_monotone_level",
    # radius
    "Regime",
    "RadiusQuery",
    "RadiusResult",
    "TableRow",
    "equation_constant",
    "radius_of_starlikeness",
    "radius_table",
    # verification
    "Polynomial",
    "VerificationReport",
    "HyperbolicityReport",
    "sturm_real_root_count",
    "jensen_gamma",
    "jensen_polynomial",
    "hyperbolicity_check",
    "obrechkoff_combination",
    "newton_power_sums",
    "hadamard_truncation_error",
    "integral_representation_residual",
    "ode_residual",
    "recurrence_residual",
    "zero_bounds_check",
    "boundary_min_real_part",
    # suites
    "SUITE_NAMES",
    "SweepCell",
    "certification_sweep",
    "imaginary_axis_reports",
    "run_suite",
]
