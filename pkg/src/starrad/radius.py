"""Radii of starlikeness of order alpha for the six normalized families.

For each family the condition Re(z F'(z)/F(z)) > alpha on |z| < r reduces
to one scalar equation.  Three regimes cover all supported parameters:

* real-axis: the radius is the smallest positive zero of the weighted
  numerator series (gamma + 2k weighting with the family's equation
  constant), because the boundary minimum of the quotient sits on the
  positive real axis;
* sqrt-transformed (families h and w): the same equation solved in the
  square-root variable t, with radius = t^2;
* imaginary-axis (family f with mu in (-1, -1/2)): the boundary minimum
  moves to the imaginary axis, where the auxiliary quotient
  q(r) = (mu + 1/2) + 2 S1/S0 at z = i r is strictly increasing, and the
  radius solves q(r) = alpha (mu + 1/2).

Results optionally carry a numerical certification: the sampled boundary
minimum must exceed alpha just inside the reported radius and dip below
alpha just outside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Sequence

from .errors import InvalidQuery, StarRadError
from .series import (
    FunctionFamily,
    LommelOrder,
    SeriesConfig,
    StruveOrder,
    even_series_value,
    imag_axis_quotient,
    lommel_numerator_series,
    struve_numerator_series,
)
from .verify import boundary_min_real_part
from .zerofind import (
    Bracket,
    RootResult,
    ScanConfig,
    smallest_positive_zero,
    solve_monotone_level,
)

__all__ = [
    "Regime",
    "RadiusQuery",
    "RadiusResult",
    "TableRow",
    "equation_constant",
    "radius_of_starlikeness",
    "radius_table",
]


class Regime(Enum):
    REAL_AXIS = "real-axis"
    IMAGINARY_AXIS = "imaginary-axis"
    SQRT_TRANSFORMED = "sqrt-transformed"


@dataclass(frozen=True)
class RadiusQuery:
    """One radius request: family, order parameter, and starlikeness order.

    diagnostic=True admits boundary parameters (|nu| = 1/2, mu = 0) where
    the radius machinery still runs but its hypotheses are not certified.
    """

    family: FunctionFamily
    param: float
    alpha: float
    diagnostic: bool = False

    def __post_init__(self) -> None:
        if not (math.isfinite(self.alpha) and 0.0 <= self.alpha < 1.0):
            raise InvalidQuery(f"alpha must lie in [0, 1), got {self.alpha}")
        if not math.isfinite(self.param):
            raise InvalidQuery(f"parameter must be finite, got {self.param}")


@dataclass(frozen=True)
class RadiusResult:
    radius: float
    equation_root: float
    equation_constant: float
    regime: Regime
    residual: float
    certified: bool
    bracket: Bracket
    note: str | None


@dataclass(frozen=True)
class TableRow:
    family: str
    param: float
    alpha: float
    radius: float | None
    equation_root: float | None
    regime: str | None
    residual: float | None
    certified: bool | None
    error: str | None


def equation_constant(family: FunctionFamily, param: float, alpha: float) -> float:
    """The constant on the right side of each family's radius equation.

    In the real-axis regimes the constant stays strictly below the series
    exponent (mu + 1/2 for Lommel, nu + 1 for Struve) whenever alpha < 1,
    which is what makes the weighted numerator positive at the origin.
    """
    if family is FunctionFamily.LOMMEL_F:
        return alpha * (param + 0.5)
    if family is FunctionFamily.LOMMEL_G:
        return param + alpha - 0.5
    if family is FunctionFamily.LOMMEL_H:
        return param + 2.0 * alpha - 1.5
    if family is FunctionFamily.STRUVE_U:
        return alpha * (param + 1.0)
    if family is FunctionFamily.STRUVE_V:
        return alpha + param
    if family is FunctionFamily.STRUVE_W:
        return 2.0 * alpha + param - 1.0
    raise InvalidQuery(f"unsupported family {family}")


def _validate_and_classify(query: RadiusQuery) -> Regime:
    fam, param = query.family, query.param
    strict = not query.diagnostic
    if fam.is_lommel:
        if fam is FunctionFamily.LOMMEL_F and param == -0.5:
            raise InvalidQuery("family f is undefined at mu = -1/2")
        LommelOrder(param, strict=strict)
        if fam is FunctionFamily.LOMMEL_F and param < -0.5:
            return Regime.IMAGINARY_AXIS
    else:
        StruveOrder(param, strict=strict)
    return Regime.SQRT_TRANSFORMED if fam.is_sqrt_transformed else Regime.REAL_AXIS


def radius_of_starlikeness(
    query: RadiusQuery,
    cfg: SeriesConfig | None = None,
    scan: ScanConfig | None = None,
    certify: bool = True,
    n_samples: int = 512,
) -> RadiusResult:
    """Solve the radius equation for one query.

    With certify=True the boundary quotient is sampled on the circles of
    radius r (1 -+ 1e-4); both checks must bracket alpha or the result is
    flagged uncertified with the measured minima recorded in the note.
    """
    cfg = cfg or SeriesConfig()
    scan = scan or ScanConfig()
    regime = _validate_and_classify(query)
    fam, param, alpha = query.family, query.param, query.alpha
    const = equation_constant(fam, param, alpha)
    notes: List[str] = []
    if query.diagnostic:
        notes.append("diagnostic mode")
    if regime is Regime.IMAGINARY_AXIS:
        root_res: RootResult = solve_monotone_level(
            lambda rr: imag_axis_quotient(param, rr, cfg), const, scan
        )
        radius = root_res.root
    else:
        if fam.is_lommel:
            stream = lommel_numerator_series(param, const)
        else:
            stream = struve_numerator_series(param, const)
        root_res = smallest_positive_zero(
            lambda t: even_series_value(stream, t, cfg).value, scan
        )
        radius = root_res.root**2 if regime is Regime.SQRT_TRANSFORMED else root_res.root
    if fam is FunctionFamily.LOMMEL_F and 0.0 < param < 1.0:
        notes.append("real-axis boundary minimum for mu in (0, 1)")
    certified = False
    if certify:
        min_in, _ = boundary_min_real_part(
            fam, param, radius * (1.0 - 1e-4), n_samples, cfg
        )
        min_out, _ = boundary_min_real_part(
            fam, param, radius * (1.0 + 1e-4), n_samples, cfg
        )
        if min_in > alpha and min_out < alpha:
            certified = True
        else:
            notes.append(
                "certification failed: "
                f"boundary minimum {min_in!r} inside, {min_out!r} outside alpha={alpha!r}"
            )
    else:
        notes.append("certification skipped")
    return RadiusResult(
        radius=radius,
        equation_root=root_res.root,
        equation_constant=const,
        regime=regime,
        residual=root_res.residual,
        certified=certified,
        bracket=root_res.bracket,
        note="; ".join(notes) if notes else None,
    )


def radius_table(
    families: Iterable[FunctionFamily],
    params: Sequence[float],
    alphas: Sequence[float],
    cfg: SeriesConfig | None = None,
    scan: ScanConfig | None = None,
    certify: bool = True,
    diagnostic: bool = False,
    n_samples: int = 512,
) -> List[TableRow]:
    """Product grid of radius queries; per-cell failures become error rows.

    Rows come back sorted by (family key, param, alpha) so repeated runs
    with the same arguments are byte-for-byte reproducible downstream.
    """
    rows: List[TableRow] = []
    for fam in families:
        for param in params:
            for alpha in alphas:
                try:
                    res = radius_of_starlikeness(
                        RadiusQuery(fam, param, alpha, diagnostic),
                        cfg,
                        scan,
                        certify=certify,
                        n_samples=n_samples,
                    )
                    rows.append(
                        TableRow(
                            family=fam.value,
                            param=param,
                            alpha=alpha,
                            radius=res.radius,
                            equation_root=res.equation_root,
                            regime=res.regime.value,
                            residual=res.residual,
                            certified=res.certified,
                            error=None,
                        )
                    )
                except StarRadError as exc:
                    rows.append(
                        TableRow(
                            family=fam.value,
                            param=param,
                            alpha=alpha,
                            radius=None,
                            equation_root=None,
                            regime=None,
                            residual=None,
                            certified=None,
                            error=f"{type(exc).__name__}: {exc}",
                        )
                    )
    rows.sort(key=lambda r: (r.family, r.param, r.alpha))
    return rows
