"""Even power series engine for the Lommel and Struve families.

Every function handled here is, up to an elementary prefactor, an even
entire series

    S(z) = sum_k  c_k * (-z^2/4)^k,      c_k = w_k / ((b1)_k (b2)_k),

where ``(b)_k`` is the Pochhammer symbol and the optional weight
``w_k = gamma + 2k`` produces the numerators of the radius equations.
The evaluator accumulates three moments at once,

    S0 = sum c_k w^k,   S1 = sum k c_k w^k,   S2 = sum k^2 c_k w^k,

because logarithmic derivatives and differential-equation residuals are
linear in those moments: ``z S'(z) = 2 S1`` and ``z^2 S''(z) = 4 S2 - 2 S1``
at ``w = -z^2/4``.

Scalar sums run in double-double arithmetic (see :mod:`starrad.dd`).  The
series alternate, and for moderate ``z`` the largest term exceeds the sum
by many orders of magnitude; double-double keeps roughly 32 digits through
the cancellation, which is what makes 1e-12 relative accuracy near the
zeros attainable.  Complex circle sampling uses plain numpy doubles: away
from the far zeros the cancellation there is mild and 1e-9 suffices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .dd import dd_add, dd_add_d, dd_div, dd_mul, dd_mul_d, two_prod, two_sum
from .errors import InvalidParameter, NonConvergent, SingularPoint

__all__ = [
    "FunctionFamily",
    "SeriesConfig",
    "SeriesValue",
    "EvenSeries",
    "LommelOrder",
    "StruveOrder",
    "phi0_series",
    "phi1_series",
    "phi_series",
    "lommel_numerator_series",
    "struve_kernel_series",
    "struve_numerator_series",
    "hyp1f2_unit",
    "phi_k",
    "lommel_s",
    "struve_h",
    "lommel_num",
    "struve_num",
    "even_series_value",
    "eval_on_imag",
    "even_series_weighted_sums",
    "star_quotient",
    "imag_axis_quotient",
    "quotient_real_on_circle",
]


class FunctionFamily(Enum):
    """The six normalized functions whose starlikeness radii we compute.

    f, g, h are the three normalizations built on the Lommel function
    s_{mu-1/2, 1/2}; u, v, w are the analogues for the Struve function.
    h and w take the argument through a square root, so their radius
    equation is solved in the transformed variable.
    """

    LOMMEL_F = "f"
    LOMMEL_G = "g"
    LOMMEL_H = "h"
    STRUVE_U = "u"
    STRUVE_V = "v"
    STRUVE_W = "w"

    @property
    def is_lommel(self) -> bool:
        return self in (
            FunctionFamily.LOMMEL_F,
            FunctionFamily.LOMMEL_G,
            FunctionFamily.LOMMEL_H,
        )

    @property
    def is_struve(self) -> bool:
        return not self.is_lommel

    @property
    def is_sqrt_transformed(self) -> bool:
        return self in (FunctionFamily.LOMMEL_H, FunctionFamily.STRUVE_W)

    @classmethod
    def from_string(cls, text: str) -> "FunctionFamily":
        key = text.strip().lower().replace("-", "_")
        aliases = {
            "f": cls.LOMMEL_F,
            "lommel_f": cls.LOMMEL_F,
            "g": cls.LOMMEL_G,
            "lommel_g": cls.LOMMEL_G,
            "h": cls.LOMMEL_H,
            "lommel_h": cls.LOMMEL_H,
            "u": cls.STRUVE_U,
            "struve_u": cls.STRUVE_U,
            "v": cls.STRUVE_V,
            "struve_v": cls.STRUVE_V,
            "w": cls.STRUVE_W,
            "struve_w": cls.STRUVE_W,
        }
        if key not in aliases:
            raise InvalidParameter(f"unknown function family {text!r}")
        return aliases[key]


@dataclass(frozen=True)
class SeriesConfig:
    """Tolerances for series summation.

    rel_tol is measured against the largest accumulated moment, abs_tol is
    an absolute floor, max_terms bounds the number of series terms before
    NonConvergent is raised.
    """

    rel_tol: float = 1e-14
    abs_tol: float = 1e-300
    max_terms: int = 500

    def __post_init__(self) -> None:
        if not (0.0 < self.rel_tol < 1.0):
            raise InvalidParameter(f"rel_tol must be in (0, 1), got {self.rel_tol}")
        if self.abs_tol < 0.0:
            raise InvalidParameter("abs_tol must be nonnegative")
        if self.max_terms < 8:
            raise InvalidParameter("max_terms must be at least 8")


_DEFAULT_CONFIG = SeriesConfig()


@dataclass(frozen=True)
class SeriesValue:
    """A summed series value with an a-posteriori error bound."""

    value: float
    err_bound: float
    terms_used: int


@dataclass(frozen=True)
class LommelOrder:
    """Validated order for the Lommel families.

    The parameter is the shifted order mu, so the underlying Lommel
    function is s_{mu - 1/2, 1/2}.  Strict mode keeps mu inside
    (-1, 0) u (0, 1) where the zero pattern is certified; diagnostic
    mode admits mu = 0 as well.
    """

    mu: float
    strict: bool = True

    def __post_init__(self) -> None:
        if not math.isfinite(self.mu):
            raise InvalidParameter("mu must be finite")
        if not (-1.0 < self.mu < 1.0):
            raise InvalidParameter(f"mu must lie in (-1, 1), got {self.mu}")
        if self.strict and self.mu == 0.0:
            raise InvalidParameter("mu = 0 requires diagnostic mode")

    @classmethod
    def from_mu(cls, mu: float, strict: bool = True) -> "LommelOrder":
        return cls(float(mu), strict)

    @classmethod
    def from_raw(cls, mu_raw: float, strict: bool = True) -> "LommelOrder":
        """Build from the raw first Lommel index mu_raw = mu - 1/2."""
        return cls(float(mu_raw) + 0.5, strict)


@dataclass(frozen=True)
class StruveOrder:
    """Validated order for the Struve families.

    Strict mode requires |nu| < 1/2; diagnostic mode allows |nu| = 1/2,
    where the kernel degenerates to trigonometric closed forms with
    double zeros and the radius machinery is only heuristically valid.
    """

    nu: float
    strict: bool = True

    def __post_init__(self) -> None:
        if not math.isfinite(self.nu):
            raise InvalidParameter("nu must be finite")
        bound = 0.5
        if self.strict:
            if not (-bound < self.nu < bound):
                raise InvalidParameter(
                    f"nu must lie in (-1/2, 1/2), got {self.nu}; "
                    "|nu| = 1/2 requires diagnostic mode"
                )
        else:
            if not (-bound <= self.nu <= bound):
                raise InvalidParameter(f"nu must lie in [-1/2, 1/2], got {self.nu}")


# ---------------------------------------------------------------------------
# Series streams


@dataclass(frozen=True)
class EvenSeries:
    """Coefficient stream for one even series.

    b1, b2 are the Pochhammer bases as double-double pairs (exact, since
    the halving is exact in binary); weight, when present, is the
    double-double gamma of the per-term factor (gamma + 2k).  coeff_exact
    yields the exact rational coefficient c_k, usable because every input
    parameter is a binary float and hence dyadic.
    """

    label: str
    b1: tuple[float, float]
    b2: tuple[float, float]
    weight: tuple[float, float] | None
    coeff_exact: Callable[[int], Fraction]
    basis_exact: tuple[Fraction, Fraction]

    def coeff(self, k: int) -> float:
        return float(self.coeff_exact(k))


def _poch_coeff_exact(B1: Fraction, B2: Fraction) -> Callable[[int], Fraction]:
    cache = [Fraction(1)]

    def coeff(k: int) -> Fraction:
        while len(cache) <= k:
            j = len(cache) - 1
            cache.append(cache[-1] / ((B1 + j) * (B2 + j)))
        return cache[k]

    return coeff


def _weighted_coeff_exact(
    base: Callable[[int], Fraction], gamma: Fraction
) -> Callable[[int], Fraction]:
    def coeff(k: int) -> Fraction:
        return (gamma + 2 * k) * base(k)

    return coeff


def _check_basis_poles(B1: Fraction, B2: Fraction, what: str) -> None:
    for b in (B1, B2):
        if b.denominator == 1 and b <= 0:
            raise SingularPoint(f"{what} has a series pole (basis {b} is a nonpositive integer)")


def _half_dd(hi: float, lo: float) -> tuple[float, float]:
    return 0.5 * hi, 0.5 * lo


def phi_series(mu: float, k: int) -> EvenSeries:
    """Stream for phi_k: basis ((mu - k + 2)/2, (mu - k + 3)/2)."""
    if k < 0:
        raise InvalidParameter("k must be a nonnegative integer")
    M = Fraction(mu)
    B1 = (M - k + 2) / 2
    B2 = (M - k + 3) / 2
    _check_basis_poles(B1, B2, f"phi{k}(mu={mu!r})")
    b1 = _half_dd(*two_sum(mu, float(2 - k)))
    b2 = _half_dd(*two_sum(mu, float(3 - k)))
    return EvenSeries(
        label=f"phi{k}(mu={mu!r})",
        b1=b1,
        b2=b2,
        weight=None,
        coeff_exact=_poch_coeff_exact(B1, B2),
        basis_exact=(B1, B2),
    )


def phi0_series(mu: float) -> EvenSeries:
    return phi_series(mu, 0)


def phi1_series(mu: float) -> EvenSeries:
    return phi_series(mu, 1)


def lommel_numerator_series(mu: float, c: float) -> EvenSeries:
    """Stream for the Lommel radius numerator: (mu + 1/2 - c + 2k) * c_k(phi0)."""
    base = phi_series(mu, 0)
    G = Fraction(mu) + Fraction(1, 2) - Fraction(c)
    gamma = dd_add_d(*two_sum(mu, 0.5), -c)
    return EvenSeries(
        label=f"psi(mu={mu!r},c={c!r})",
        b1=base.b1,
        b2=base.b2,
        weight=gamma,
        coeff_exact=_weighted_coeff_exact(base.coeff_exact, G),
        basis_exact=base.basis_exact,
    )


def struve_kernel_series(nu: float) -> EvenSeries:
    """Stream for the normalized Struve kernel: basis (3/2, nu + 3/2)."""
    N = Fraction(nu)
    B1 = Fraction(3, 2)
    B2 = N + Fraction(3, 2)
    _check_basis_poles(B1, B2, f"struve-kernel(nu={nu!r})")
    return EvenSeries(
        label=f"struve-kernel(nu={nu!r})",
        b1=(1.5, 0.0),
        b2=two_sum(nu, 1.5),
        weight=None,
        coeff_exact=_poch_coeff_exact(B1, B2),
        basis_exact=(B1, B2),
    )


def struve_numerator_series(nu: float, d: float) -> EvenSeries:
    """Stream for the Struve radius numerator: (nu + 1 - d + 2k) * c_k(kernel)."""
    base = struve_kernel_series(nu)
    G = Fraction(nu) + 1 - Fraction(d)
    gamma = dd_add_d(*two_sum(nu, 1.0), -d)
    return EvenSeries(
        label=f"struve-num(nu={nu!r},d={d!r})",
        b1=base.b1,
        b2=base.b2,
        weight=gamma,
        coeff_exact=_weighted_coeff_exact(base.coeff_exact, G),
        basis_exact=base.basis_exact,
    )


# ---------------------------------------------------------------------------
# Core double-double evaluator


def _poch_sums_dd(
    b1: tuple[float, float],
    b2: tuple[float, float],
    w: tuple[float, float],
    cfg: SeriesConfig,
    want_third: bool = False,
    label: str = "series",
):
    """Accumulate S0..S2 (and optionally S3) of the Pochhammer series at w.

    Returns (s0, s1, s2, s3, terms_used, tail) with each moment a dd pair.
    tail is an estimate of the first omitted term, inflated by the
    geometric factor when w > 0 (same-sign terms).
    """
    b1h, b1l = b1
    b2h, b2l = b2
    wh, wl = w
    s0h, s0l = 1.0, 0.0
    s1h = s1l = s2h = s2l = s3h = s3l = 0.0
    th, tl = 1.0, 0.0
    prev = math.inf
    for k in range(cfg.max_terms):
        d1h, d1l = dd_add_d(b1h, b1l, float(k))
        d2h, d2l = dd_add_d(b2h, b2l, float(k))
        dh, dl = dd_mul(d1h, d1l, d2h, d2l)
        if dh == 0.0:
            raise SingularPoint(f"{label}: denominator vanishes at term {k + 1}")
        rh, rl = dd_div(wh, wl, dh, dl)
        th, tl = dd_mul(th, tl, rh, rl)
        n = k + 1
        fn = float(n)
        s0h, s0l = dd_add(s0h, s0l, th, tl)
        uh, ul = dd_mul_d(th, tl, fn)
        s1h, s1l = dd_add(s1h, s1l, uh, ul)
        vh, vl = dd_mul_d(uh, ul, fn)
        s2h, s2l = dd_add(s2h, s2l, vh, vl)
        if want_third:
            xh, xl = dd_mul_d(vh, vl, fn)
            s3h, s3l = dd_add(s3h, s3l, xh, xl)
        mag = abs(th)
        if mag == 0.0 or mag < prev:
            den_next = (b1h + fn) * (b2h + fn)
            rho = abs(wh) / abs(den_next) if den_next != 0.0 else math.inf
            tail = mag * rho
            scale = max(abs(s0h), abs(s1h), abs(s2h), 1e-300)
            weight = float((n + 2) ** 3 if want_third else (n + 2) ** 2)
            if tail * weight <= cfg.rel_tol * scale or tail <= cfg.abs_tol:
                if wh > 0.0 and rho < 1.0:
                    tail /= 1.0 - rho
                return (
                    (s0h, s0l),
                    (s1h, s1l),
                    (s2h, s2l),
                    (s3h, s3l),
                    n + 1,
                    tail,
                )
        prev = mag
    raise NonConvergent(
        f"{label}: no convergence to rel_tol={cfg.rel_tol} within {cfg.max_terms} terms"
    )


def _w_dd_from_z(z: float) -> tuple[float, float]:
    """Exact double-double of -z^2/4."""
    p, e = two_prod(z, z)
    return -0.25 * p, -0.25 * e


def _w_dd_imag(r: float) -> tuple[float, float]:
    """Exact double-double of +r^2/4, the argument at z = i r."""
    p, e = two_prod(r, r)
    return 0.25 * p, 0.25 * e


def _series_sums(
    series: EvenSeries,
    w: tuple[float, float],
    cfg: SeriesConfig,
    want_third: bool = False,
):
    return _poch_sums_dd(
        series.b1, series.b2, w, cfg, want_third=want_third, label=series.label
    )


def _series_value_at_w(
    series: EvenSeries, w: tuple[float, float], cfg: SeriesConfig
) -> SeriesValue:
    s0, s1, _s2, _s3, terms, tail = _series_sums(series, w, cfg)
    if series.weight is None:
        return SeriesValue(s0[0] + s0[1], tail, terms)
    # weighted value is gamma * S0 + 2 * S1
    gh, gl = series.weight
    vh, vl = dd_mul(gh, gl, s0[0], s0[1])
    vh, vl = dd_add(vh, vl, 2.0 * s1[0], 2.0 * s1[1])
    err = tail * (abs(gh) + 2.0 * (terms + 2))
    return SeriesValue(vh + vl, err, terms)


# ---------------------------------------------------------------------------
# Named evaluations


def _require_positive_z(z: float, what: str) -> None:
    if not (math.isfinite(z) and z > 0.0):
        raise InvalidParameter(f"{what} requires z > 0, got {z}")


def hyp1f2_unit(b1: float, b2: float, x: float, cfg: SeriesConfig | None = None) -> SeriesValue:
    """Value of sum_k x^k / ((b1)_k (b2)_k), the 1F2 with unit numerator."""
    cfg = cfg or _DEFAULT_CONFIG
    for b in (b1, b2):
        if float(b).is_integer() and b <= 0.0:
            raise SingularPoint(f"hyp1f2 basis {b} is a nonpositive integer")
    s0, _s1, _s2, _s3, terms, tail = _poch_sums_dd(
        (b1, 0.0), (b2, 0.0), (x, 0.0), cfg, label=f"hyp1f2(b1={b1!r},b2={b2!r})"
    )
    return SeriesValue(s0[0] + s0[1], tail, terms)


def phi_k(mu: float, k: int, z: float, cfg: SeriesConfig | None = None) -> SeriesValue:
    """phi_k(z) for the shifted Lommel order mu."""
    cfg = cfg or _DEFAULT_CONFIG
    series = phi_series(mu, k)
    return _series_value_at_w(series, _w_dd_from_z(z), cfg)


def lommel_s(
    mu_raw: float, nu_raw: float, z: float, cfg: SeriesConfig | None = None
) -> SeriesValue:
    """The Lommel function s_{mu_raw, nu_raw}(z) for z > 0."""
    cfg = cfg or _DEFAULT_CONFIG
    _require_positive_z(z, "lommel_s")
    f1 = mu_raw - nu_raw + 1.0
    f2 = mu_raw + nu_raw + 1.0
    if f1 == 0.0 or f2 == 0.0:
        raise SingularPoint(
            f"lommel_s normalization pole: (mu-nu+1)(mu+nu+1) = 0 at mu={mu_raw}, nu={nu_raw}"
        )
    Mr, Nr = Fraction(mu_raw), Fraction(nu_raw)
    B1 = (Mr - Nr + 3) / 2
    B2 = (Mr + Nr + 3) / 2
    _check_basis_poles(B1, B2, f"lommel_s(mu={mu_raw!r},nu={nu_raw!r})")
    b1 = _half_dd(*dd_add_d(*two_sum(mu_raw, -nu_raw), 3.0))
    b2 = _half_dd(*dd_add_d(*two_sum(mu_raw, nu_raw), 3.0))
    s0, _s1, _s2, _s3, terms, tail = _poch_sums_dd(
        b1, b2, _w_dd_from_z(z), cfg, label=f"lommel_s(mu={mu_raw!r},nu={nu_raw!r})"
    )
    pref = z ** (mu_raw + 1.0) / (f1 * f2)
    return SeriesValue(pref * (s0[0] + s0[1]), abs(pref) * tail, terms)


def struve_h(nu: float, z: float, cfg: SeriesConfig | None = None) -> SeriesValue:
    """The Struve function H_nu(z) for z > 0."""
    cfg = cfg or _DEFAULT_CONFIG
    _require_positive_z(z, "struve_h")
    shifted = nu + 1.5
    if float(shifted).is_integer() and shifted <= 0.0:
        raise SingularPoint(f"struve_h pole: nu + 3/2 = {shifted} is a nonpositive integer")
    series = struve_kernel_series(nu)
    s0, _s1, _s2, _s3, terms, tail = _series_sums(series, _w_dd_from_z(z), cfg)
    pref = (0.5 * z) ** (nu + 1.0) * 2.0 / (math.sqrt(math.pi) * math.gamma(nu + 1.5))
    return SeriesValue(pref * (s0[0] + s0[1]), abs(pref) * tail, terms)


def lommel_num(mu: float, c: float, z: float, cfg: SeriesConfig | None = None) -> SeriesValue:
    """Radius-equation numerator for the Lommel families at constant c."""
    cfg = cfg or _DEFAULT_CONFIG
    return _series_value_at_w(lommel_numerator_series(mu, c), _w_dd_from_z(z), cfg)


def struve_num(nu: float, d: float, z: float, cfg: SeriesConfig | None = None) -> SeriesValue:
    """Radius-equation numerator for the Struve families at constant d."""
    cfg = cfg or _DEFAULT_CONFIG
    return _series_value_at_w(struve_numerator_series(nu, d), _w_dd_from_z(z), cfg)


def even_series_value(series: EvenSeries, z: float, cfg: SeriesConfig | None = None) -> SeriesValue:
    """Value of the stream at real z (argument w = -z^2/4, built exactly)."""
    cfg = cfg or _DEFAULT_CONFIG
    return _series_value_at_w(series, _w_dd_from_z(z), cfg)


def eval_on_imag(series: EvenSeries, r: float, cfg: SeriesConfig | None = None) -> SeriesValue:
    """Value of the stream at z = i r, where the argument flips to +r^2/4."""
    cfg = cfg or _DEFAULT_CONFIG
    if r < 0.0:
        raise InvalidParameter(f"eval_on_imag requires r >= 0, got {r}")
    return _series_value_at_w(series, _w_dd_imag(r), cfg)


def even_series_weighted_sums(
    series: EvenSeries,
    w: float | tuple[float, float],
    cfg: SeriesConfig | None = None,
) -> tuple[float, float, float]:
    """Moments (S0, S1, S2) of the stream at a real argument w.

    For weighted streams the moments are those of the weighted
    coefficients, which costs one extra accumulated moment internally.
    """
    cfg = cfg or _DEFAULT_CONFIG
    wd = w if isinstance(w, tuple) else (float(w), 0.0)
    weighted = series.weight is not None
    s0, s1, s2, s3, _terms, _tail = _series_sums(series, wd, cfg, want_third=weighted)
    if not weighted:
        return (s0[0] + s0[1], s1[0] + s1[1], s2[0] + s2[1])
    gh, gl = series.weight
    out = []
    for low, high in ((s0, s1), (s1, s2), (s2, s3)):
        vh, vl = dd_mul(gh, gl, low[0], low[1])
        vh, vl = dd_add(vh, vl, 2.0 * high[0], 2.0 * high[1])
        out.append(vh + vl)
    return (out[0], out[1], out[2])


# ---------------------------------------------------------------------------
# Starlikeness quotients


def _family_setup(family: FunctionFamily, param: float):
    """Return (basis stream, kappa as dd, moment factor, uses sqrt variable)."""
    if family.is_lommel:
        stream = phi_series(param, 0)
        if family is FunctionFamily.LOMMEL_F:
            denom = two_sum(param, 0.5)
            if denom[0] + denom[1] == 0.0:
                raise InvalidParameter("family f is undefined at mu = -1/2")
            kappa = dd_div(1.0, 0.0, denom[0], denom[1])
        else:
            kappa = (1.0, 0.0)
    else:
        stream = struve_kernel_series(param)
        if family is FunctionFamily.STRUVE_U:
            denom = two_sum(param, 1.0)
            if denom[0] + denom[1] == 0.0:
                raise InvalidParameter("family u is undefined at nu = -1")
            kappa = dd_div(1.0, 0.0, denom[0], denom[1])
        else:
            kappa = (1.0, 0.0)
    if family.is_sqrt_transformed:
        return stream, kappa, 1.0, True
    return stream, kappa, 2.0, False


def star_quotient(
    family: FunctionFamily, param: float, r: float, cfg: SeriesConfig | None = None
) -> float:
    """Re(z F'(z)/F(z)) of the normalized family member at real z = r > 0.

    On the positive real axis the quotient is real, so this returns the
    exact quotient value, computed in double-double from the moment
    identity z F'/F = 1 + kappa * factor * S1/S0.
    """
    cfg = cfg or _DEFAULT_CONFIG
    if r < 0.0:
        raise InvalidParameter(f"star_quotient requires r >= 0, got {r}")
    stream, kappa, factor, sqrt_var = _family_setup(family, param)
    if sqrt_var:
        w = (-0.25 * r, 0.0)
    else:
        w = _w_dd_from_z(r)
    s0, s1, _s2, _s3, _terms, _tail = _series_sums(stream, w, cfg)
    if s0[0] + s0[1] == 0.0:
        raise SingularPoint(f"quotient pole: {stream.label} vanishes at r = {r}")
    qh, ql = dd_div(s1[0], s1[1], s0[0], s0[1])
    qh, ql = dd_mul_d(qh, ql, factor)
    qh, ql = dd_mul(qh, ql, kappa[0], kappa[1])
    qh, ql = dd_add_d(qh, ql, 1.0)
    return qh + ql


def imag_axis_quotient(mu: float, r: float, cfg: SeriesConfig | None = None) -> float:
    """q(r) = (mu + 1/2) + 2 S1/S0 of phi0 at z = i r.

    All series terms are positive on the imaginary axis, so S0 >= 1 and
    q is well defined for every r; q increases strictly in r and tends to
    mu + 1/2 as r -> 0+.  The imaginary-axis radius regime solves
    q(r) = alpha (mu + 1/2).
    """
    cfg = cfg or _DEFAULT_CONFIG
    if r < 0.0:
        raise InvalidParameter(f"imag_axis_quotient requires r >= 0, got {r}")
    stream = phi_series(mu, 0)
    s0, s1, _s2, _s3, _terms, _tail = _series_sums(stream, _w_dd_imag(r), cfg)
    qh, ql = dd_div(2.0 * s1[0], 2.0 * s1[1], s0[0], s0[1])
    base = two_sum(mu, 0.5)
    qh, ql = dd_add(qh, ql, base[0], base[1])
    return qh + ql


def quotient_real_on_circle(
    family: FunctionFamily,
    param: float,
    r: float,
    thetas: Sequence[float] | np.ndarray,
    cfg: SeriesConfig | None = None,
) -> np.ndarray:
    """Re(z F'(z)/F(z)) sampled at z = r e^{i theta} for each theta.

    Vectorized in plain complex doubles; intended for radii up to a few
    times the first zero of the basis series, where cancellation is mild.
    The magnitude of the k-th term is constant over the circle, so one
    adaptive loop serves all samples.
    """
    cfg = cfg or _DEFAULT_CONFIG
    if r < 0.0:
        raise InvalidParameter(f"quotient_real_on_circle requires r >= 0, got {r}")
    stream, kappa, factor, sqrt_var = _family_setup(family, param)
    th = np.asarray(thetas, dtype=float)
    z = r * np.exp(1j * th)
    u = -0.25 * z if sqrt_var else -0.25 * (z * z)
    b1 = stream.b1[0] + stream.b1[1]
    b2 = stream.b2[0] + stream.b2[1]
    t = np.ones_like(u)
    P = np.ones_like(u)
    Q = np.zeros_like(u)
    prev = math.inf
    converged = False
    for k in range(cfg.max_terms):
        t = t * (u / ((b1 + k) * (b2 + k)))
        n = k + 1
        P += t
        Q += n * t
        mag = float(np.max(np.abs(t)))
        if mag == 0.0 or mag < prev:
            scale = max(float(np.min(np.abs(P))), 1e-280)
            if mag * (n + 2) ** 2 <= 1e-15 * scale:
                converged = True
                break
        prev = mag
    if not converged:
        raise NonConvergent(
            f"{stream.label}: circle sampling did not converge within {cfg.max_terms} terms"
        )
    if np.any(P == 0):
        raise SingularPoint(f"quotient pole on circle |z| = {r} for {stream.label}")
    kf = kappa[0] + kappa[1]
    return np.real(1.0 + kf * factor * (Q / P))
