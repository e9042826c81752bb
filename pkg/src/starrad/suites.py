"""Named verification suites aggregating the checks in :mod:`starrad.verify`.

Each suite returns a sorted list of VerificationReport; the CLI renders
them one per line and exits nonzero when anything failed.  The
certification sweep over the standard parameter grid is shared between
the "radii" suite and the acceptance tests, so both look at the same
numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np

from .errors import InvalidParameter
from .radius import RadiusQuery, RadiusResult, radius_of_starlikeness
from .series import (
    FunctionFamily,
    SeriesConfig,
    even_series_value,
    hyp1f2_unit,
    imag_axis_quotient,
    lommel_numerator_series,
    lommel_s,
    phi_series,
    struve_h,
    struve_kernel_series,
    struve_numerator_series,
)
from .verify import (
    VerificationReport,
    boundary_min_real_part,
    hyperbolicity_check,
    integral_representation_residual,
    jensen_polynomial,
    obrechkoff_combination,
    ode_residual,
    recurrence_residual,
    sturm_real_root_count,
    zero_bounds_check,
)
from .zerofind import ScanConfig, smallest_positive_zero

__all__ = [
    "SUITE_NAMES",
    "SweepCell",
    "certification_sweep",
    "imaginary_axis_reports",
    "run_suite",
    "LOMMEL_SWEEP_PARAMS",
    "STRUVE_SWEEP_PARAMS",
    "SWEEP_ALPHAS",
]

SUITE_NAMES = ("series", "jensen", "integrals", "ode", "bounds", "radii", "imag", "all")

LOMMEL_SWEEP_PARAMS = (-0.75, -0.25, 0.25, 0.5, 0.75)
STRUVE_SWEEP_PARAMS = (-0.25, 0.0, 0.25)
SWEEP_ALPHAS = (0.0, 0.25, 0.5, 0.75)

_LOMMEL_FAMILIES = (FunctionFamily.LOMMEL_F, FunctionFamily.LOMMEL_G, FunctionFamily.LOMMEL_H)
_STRUVE_FAMILIES = (FunctionFamily.STRUVE_U, FunctionFamily.STRUVE_V, FunctionFamily.STRUVE_W)


@dataclass(frozen=True)
class SweepCell:
    """One certified grid cell: solved radius plus its boundary evidence."""

    family: FunctionFamily
    param: float
    alpha: float
    result: RadiusResult
    min_inner: float
    min_outer: float
    first_zero: float


def _basis_stream(family: FunctionFamily, param: float):
    return phi_series(param, 0) if family.is_lommel else struve_kernel_series(param)


def certification_sweep(
    cfg: SeriesConfig | None = None,
    scan: ScanConfig | None = None,
    n_samples: int = 512,
    alphas: Tuple[float, ...] = SWEEP_ALPHAS,
) -> List[SweepCell]:
    """Solve and boundary-check the full standard grid (24 cells x alphas)."""
    cfg = cfg or SeriesConfig()
    scan = scan or ScanConfig()
    pairs = [(fam, p) for fam in _LOMMEL_FAMILIES for p in LOMMEL_SWEEP_PARAMS]
    pairs += [(fam, p) for fam in _STRUVE_FAMILIES for p in STRUVE_SWEEP_PARAMS]
    cells: List[SweepCell] = []
    for fam, param in pairs:
        basis = _basis_stream(fam, param)
        first_zero = smallest_positive_zero(
            lambda t, s=basis: even_series_value(s, t, cfg).value, scan
        ).root
        for alpha in alphas:
            res = radius_of_starlikeness(
                RadiusQuery(fam, param, alpha), cfg, scan, certify=False, n_samples=n_samples
            )
            min_in, _ = boundary_min_real_part(
                fam, param, res.radius * (1.0 - 1e-4), n_samples, cfg
            )
            min_out, _ = boundary_min_real_part(
                fam, param, res.radius * (1.0 + 1e-4), n_samples, cfg
            )
            cells.append(SweepCell(fam, param, alpha, res, min_in, min_out, first_zero))
    return cells


# ---------------------------------------------------------------------------
# Individual suites


def _closed_kernel_half(z: float) -> float:
    half = 0.5 * z
    s = math.sin(half) / half
    return s * s


def _series_suite(cfg: SeriesConfig, scan: ScanConfig) -> List[VerificationReport]:
    reports: List[VerificationReport] = []
    zs = (0.5, 1.0, 2.0, 3.1, 6.3, 9.4, 12.6, 17.0)
    kernel_half = struve_kernel_series(0.5)
    for z in zs:
        got = even_series_value(kernel_half, z, cfg).value
        want = _closed_kernel_half(z)
        rel = abs(got - want) / abs(want)
        reports.append(
            VerificationReport.from_measure(
                f"closed-form-struve-kernel-half-z{z!r}", rel, 1e-12
            )
        )
    for z in (1.0, 2.0, 4.0):
        got = hyp1f2_unit(1.5, 2.0, -0.25 * z * z, cfg).value
        want = _closed_kernel_half(z)
        reports.append(
            VerificationReport.from_measure(
                f"closed-form-hyp1f2-unit-z{z!r}", abs(got - want) / abs(want), 1e-12
            )
        )
    sinc = phi_series(0.0, 0)
    cosine = phi_series(0.0, 1)
    for z in (0.5, 1.0, 2.0, 5.0):
        got = even_series_value(sinc, z, cfg).value
        want = math.sin(z) / z
        reports.append(
            VerificationReport.from_measure(
                f"closed-form-phi0-mu0-z{z!r}", abs(got - want) / abs(want), 1e-13
            )
        )
        got = even_series_value(cosine, z, cfg).value
        want = math.cos(z)
        reports.append(
            VerificationReport.from_measure(
                f"closed-form-phi1-mu0-z{z!r}", abs(got - want) / max(abs(want), 1e-3), 1e-13
            )
        )
    for z in (1.0, 2.0, math.pi):
        got = struve_h(0.5, z, cfg).value
        want = math.sqrt(2.0 / (math.pi * z)) * (1.0 - math.cos(z))
        reports.append(
            VerificationReport.from_measure(
                f"closed-form-struve-h-half-z{z!r}", abs(got - want) / abs(want), 1e-12
            )
        )
    for mu in (0.25, 0.5, 0.75):
        stream = phi_series(mu, 0)
        for z in (1.0, 2.0, 5.0):
            lhs = mu * (mu + 1.0) * lommel_s(mu - 0.5, 0.5, z, cfg).value
            rhs = z ** (mu + 0.5) * even_series_value(stream, z, cfg).value
            rel = abs(lhs - rhs) / max(abs(rhs), 1e-300)
            reports.append(
                VerificationReport.from_measure(
                    f"lommel-normalization-mu{mu!r}-z{z!r}", rel, 1e-13
                )
            )
    for mu in (-0.6, -0.25, 0.25, 0.5, 0.75):
        for z in (1.0, 2.0, 5.0):
            reports.append(
                VerificationReport.from_measure(
                    f"recurrence-mu{mu!r}-z{z!r}",
                    recurrence_residual(mu, z, cfg),
                    1e-12,
                )
            )
    return reports


_JENSEN_N_RANGE = range(3, 31)


def _jensen_stream_table():
    table = []
    for mu in (0.25, 0.5, 0.75):
        table.append((phi_series(mu, 0), None))
        table.append((phi_series(mu, 1), None))
        table.append((lommel_numerator_series(mu, 0.0), phi_series(mu, 0)))
    for nu in (-0.25, 0.0, 0.25):
        table.append((struve_kernel_series(nu), None))
        table.append((struve_numerator_series(nu, 0.0), struve_kernel_series(nu)))
    return table


def _jensen_suite(cfg: SeriesConfig, scan: ScanConfig) -> List[VerificationReport]:
    reports: List[VerificationReport] = []
    for stream, basis in _jensen_stream_table():
        for n in _JENSEN_N_RANGE:
            rep = hyperbolicity_check(stream, n, precedence_basis=basis)
            reports.append(
                VerificationReport.from_measure(
                    f"jensen-hyperbolic-{stream.label}-n{n:02d}",
                    0.0 if rep.all_positive else 1.0,
                    0.0,
                    {
                        "degree": rep.degree,
                        "real_root_count": rep.real_root_count,
                        "min_root": rep.min_root,
                    },
                )
            )
            if basis is not None:
                reports.append(
                    VerificationReport.from_measure(
                        f"jensen-precedence-{stream.label}-n{n:02d}",
                        0.0 if rep.precedes else 1.0,
                        0.0,
                        {"min_root": rep.min_root},
                    )
                )
    # exact combination identity: the weighted stream's Jensen polynomial is
    # gamma * p + 2 x p' of the basis polynomial, coefficient for coefficient
    for mu in (0.25, 0.5, 0.75):
        G = Fraction(mu) + Fraction(1, 2)
        basis = phi_series(mu, 0)
        weighted = lommel_numerator_series(mu, 0.0)
        for n in range(1, 6):
            p = jensen_polynomial(basis, n)
            q = jensen_polynomial(weighted, n)
            combo = tuple((G + 2 * j) * a for j, a in enumerate(p.coeffs))
            reports.append(
                VerificationReport.from_measure(
                    f"jensen-combination-identity-mu{mu!r}-n{n}",
                    0.0 if combo == q.coeffs else 1.0,
                    0.0,
                )
            )
            comb_poly = obrechkoff_combination(p, Fraction(n))
            a0, a1 = p.coeffs[0], p.coeffs[1]
            x_lb = -a0 / a1  # rational lower bound for the first root
            roots_before = sturm_real_root_count(comb_poly, (0, x_lb))
            reports.append(
                VerificationReport.from_measure(
                    f"jensen-obrechkoff-positive-mu{mu!r}-n{n}",
                    float(roots_before),
                    0.0,
                )
            )
    # convergence surrogate: n * (first Jensen root) approaches the first
    # root of the series in the x = z^2/4 variable
    stream = phi_series(0.5, 0)
    xi1 = smallest_positive_zero(
        lambda t: even_series_value(stream, t, cfg).value, scan
    ).root
    target = 0.25 * xi1 * xi1
    gaps = []
    for n in (10, 20, 40):
        y1 = hyperbolicity_check(stream, n).min_root
        gaps.append(abs(n * y1 - target))
    reports.append(
        VerificationReport.from_measure(
            "jensen-surrogate-mu0.5",
            max(gaps[1] - gaps[0], gaps[2] - gaps[1]),
            0.0,
            {"gaps": gaps, "target": target},
        )
    )
    return reports


def _integrals_suite(cfg: SeriesConfig, scan: ScanConfig) -> List[VerificationReport]:
    reports: List[VerificationReport] = []
    zs = (0.5, 1.0, 2.0, 5.0)
    for mu in (0.25, 0.5, 0.75):
        for z in zs:
            for kind in ("phi0", "phi1"):
                reports.append(
                    VerificationReport.from_measure(
                        f"integral-{kind}-mu{mu!r}-z{z!r}",
                        integral_representation_residual(kind, mu, z, cfg),
                        1e-8,
                    )
                )
    for nu in (-0.25, 0.0, 0.25):
        for z in zs:
            reports.append(
                VerificationReport.from_measure(
                    f"integral-struve-nu{nu!r}-z{z!r}",
                    integral_representation_residual("struve", nu, z, cfg),
                    1e-8,
                )
            )
    return reports


def _ode_suite(cfg: SeriesConfig, scan: ScanConfig) -> List[VerificationReport]:
    reports: List[VerificationReport] = []
    zs = (0.5, 1.0, 2.0, 5.0)
    for mu in (-0.75, -0.25, 0.25, 0.5, 0.75):
        for z in zs:
            reports.append(
                VerificationReport.from_measure(
                    f"ode-lommel-mu{mu!r}-z{z!r}", ode_residual("lommel", mu, z, cfg), 1e-9
                )
            )
    for nu in (-0.25, 0.0, 0.25):
        for z in zs:
            reports.append(
                VerificationReport.from_measure(
                    f"ode-struve-nu{nu!r}-z{z!r}", ode_residual("struve", nu, z, cfg), 1e-9
                )
            )
    return reports


def _bounds_suite(cfg: SeriesConfig, scan: ScanConfig) -> List[VerificationReport]:
    reports: List[VerificationReport] = []
    for mu in (0.25, 0.5, 0.75):
        reports.append(zero_bounds_check("lommel", mu, 10, cfg, scan))
        reports.append(zero_bounds_check("lommel_phi1", mu, 1, cfg, scan))
    for nu in (-0.25, 0.0, 0.25):
        reports.append(zero_bounds_check("struve", nu, 1, cfg, scan))
    return reports


def _radii_suite(cfg: SeriesConfig, scan: ScanConfig) -> List[VerificationReport]:
    reports: List[VerificationReport] = []
    cells = certification_sweep(cfg, scan)
    by_pair: Dict[tuple, List[SweepCell]] = {}
    for cell in cells:
        tag = f"{cell.family.value}-param{cell.param!r}"
        reports.append(
            VerificationReport.from_measure(
                f"radius-certify-{tag}-alpha{cell.alpha!r}",
                max(cell.alpha - cell.min_inner, cell.min_outer - cell.alpha),
                0.0,
                {
                    "radius": cell.result.radius,
                    "min_inner": cell.min_inner,
                    "min_outer": cell.min_outer,
                },
            )
        )
        reports.append(
            VerificationReport.from_measure(
                f"radius-root-bound-{tag}-alpha{cell.alpha!r}",
                cell.result.equation_root - cell.first_zero,
                -1e-8,
                {"equation_root": cell.result.equation_root, "first_zero": cell.first_zero},
            )
        )
        by_pair.setdefault((cell.family, cell.param), []).append(cell)
    for (fam, param), group in sorted(by_pair.items(), key=lambda kv: (kv[0][0].value, kv[0][1])):
        group = sorted(group, key=lambda c: c.alpha)
        radii = [c.result.radius for c in group]
        gaps = [radii[i] - radii[i + 1] for i in range(len(radii) - 1)]
        reports.append(
            VerificationReport.from_measure(
                f"radius-monotone-{fam.value}-param{param!r}",
                -min(gaps),
                -1e-10,
                {"radii": radii},
            )
        )
    # dual-route boundary consistency at a mid-disk radius
    for fam, param in (
        (FunctionFamily.LOMMEL_G, 0.5),
        (FunctionFamily.LOMMEL_H, 0.5),
        (FunctionFamily.STRUVE_V, 0.25),
        (FunctionFamily.STRUVE_W, -0.25),
    ):
        res = radius_of_starlikeness(
            RadiusQuery(fam, param, 0.0), cfg, scan, certify=False
        )
        r = 0.9 * res.radius
        m_series, _ = boundary_min_real_part(fam, param, r, 256, cfg, method="series")
        m_product, _ = boundary_min_real_part(
            fam, param, r, 256, cfg, method="product", scan=scan
        )
        reports.append(
            VerificationReport.from_measure(
                f"boundary-route-consistency-{fam.value}-param{param!r}",
                abs(m_series - m_product),
                1e-9,
                {"series": m_series, "product": m_product},
            )
        )
    return reports


def imaginary_axis_reports(
    cfg: SeriesConfig | None = None, scan: ScanConfig | None = None
) -> List[VerificationReport]:
    """Checks specific to the imaginary-axis regime of family f."""
    cfg = cfg or SeriesConfig()
    scan = scan or ScanConfig()
    reports: List[VerificationReport] = []
    for mu in (-0.9, -0.75, -0.6):
        for alpha in (0.0, 0.5):
            res = radius_of_starlikeness(
                RadiusQuery(FunctionFamily.LOMMEL_F, mu, alpha),
                cfg,
                scan,
                certify=False,
            )
            reports.append(
                VerificationReport.from_measure(
                    f"imag-converges-mu{mu!r}-alpha{alpha!r}",
                    abs(res.residual),
                    1e-9,
                    {"radius": res.radius},
                )
            )
            rs = np.linspace(res.radius / 50.0, 1.2 * res.radius, 50)
            qs = [imag_axis_quotient(mu, float(rr), cfg) for rr in rs]
            diffs = [qs[i + 1] - qs[i] for i in range(len(qs) - 1)]
            reports.append(
                VerificationReport.from_measure(
                    f"imag-monotone-mu{mu!r}-alpha{alpha!r}", -min(diffs), 0.0
                )
            )
            n_samples = 512
            _mval, arg = boundary_min_real_part(
                FunctionFamily.LOMMEL_F, mu, 0.999 * res.radius, n_samples, cfg
            )
            step = (0.5 * math.pi) / (n_samples - 1)
            reports.append(
                VerificationReport.from_measure(
                    f"imag-argmin-mu{mu!r}-alpha{alpha!r}",
                    abs(arg - 0.5 * math.pi) - step,
                    0.0,
                    {"argmin_theta": arg},
                )
            )
    return reports


_SUITE_DISPATCH = {
    "series": _series_suite,
    "jensen": _jensen_suite,
    "integrals": _integrals_suite,
    "ode": _ode_suite,
    "bounds": _bounds_suite,
    "radii": _radii_suite,
    "imag": lambda cfg, scan: imaginary_axis_reports(cfg, scan),
}


def run_suite(
    name: str,
    cfg: SeriesConfig | None = None,
    scan: ScanConfig | None = None,
) -> List[VerificationReport]:
    """Run one named suite (or "all") and return reports sorted by name."""
    cfg = cfg or SeriesConfig()
    scan = scan or ScanConfig()
    key = name.strip().lower()
    if key == "all":
        reports: List[VerificationReport] = []
        for suite_name in SUITE_NAMES[:-1]:
            reports.extend(_SUITE_DISPATCH[suite_name](cfg, scan))
    elif key in _SUITE_DISPATCH:
        reports = _SUITE_DISPATCH[key](cfg, scan)
    else:
        raise InvalidParameter(
            f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}"
        )
    return sorted(reports, key=lambda r: r.check_name)
