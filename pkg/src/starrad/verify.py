"""Certified verification tools: exact polynomial root counts, residuals
against integral and differential-equation representations, zero bounds,
and boundary sampling of the starlikeness quotient.

The polynomial layer works over exact rationals.  Every input parameter
is a binary float, hence dyadic, so Jensen polynomial coefficients and
Sturm sequences are exact and the hyperbolicity verdicts carry no
floating-point caveats.  gmpy2 accelerates the integer arithmetic when
present; plain Python integers are the fallback.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, List, Sequence

import numpy as np
from scipy.integrate import quad

from .errors import (
    DegenerateSequence,
    InvalidParameter,
    PreconditionViolated,
    QuadratureFailure,
)
from .series import (
    EvenSeries,
    FunctionFamily,
    SeriesConfig,
    _family_setup,
    even_series_value,
    even_series_weighted_sums,
    phi0_series,
    phi1_series,
    phi_series,
    quotient_real_on_circle,
    struve_h,
    struve_kernel_series,
)
from .zerofind import ScanConfig, positive_zeros_up_to, smallest_positive_zero

try:  # pragma: no cover - environment dependent
    import gmpy2

    _mpz = gmpy2.mpz
    _gcd = gmpy2.gcd
except ImportError:  # pragma: no cover
    _mpz = int
    _gcd = math.gcd

__all__ = [
    "Polynomial",
    "VerificationReport",
    "HyperbolicityReport",
    "jensen_gamma",
    "jensen_polynomial",
    "sturm_real_root_count",
    "hyperbolicity_check",
    "obrechkoff_combination",
    "newton_power_sums",
    "hadamard_truncation_error",
    "integral_representation_residual",
    "ode_residual",
    "recurrence_residual",
    "zero_bounds_check",
    "boundary_min_real_part",
]


# ---------------------------------------------------------------------------
# Exact polynomials


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial with exact rational coefficients, ascending."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def from_coeffs(seq: Sequence) -> "Polynomial":
        cs = [Fraction(c) for c in seq]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        return Polynomial(tuple(cs))

    @property
    def degree(self) -> int:
        if len(self.coeffs) == 1 and self.coeffs[0] == 0:
            return -1
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * Fraction(x) + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def derivative(self) -> "Polynomial":
        if len(self.coeffs) == 1:
            return Polynomial.from_coeffs([0])
        return Polynomial.from_coeffs(
            [j * c for j, c in enumerate(self.coeffs)][1:]
        )


@dataclass(frozen=True)
class VerificationReport:
    """One named check; passed is always measured <= tolerance."""

    check_name: str
    measured: float
    tolerance: float
    passed: bool
    context: dict = field(default_factory=dict)

    @staticmethod
    def from_measure(
        check_name: str, measured: float, tolerance: float, context: dict | None = None
    ) -> "VerificationReport":
        return VerificationReport(
            check_name=check_name,
            measured=float(measured),
            tolerance=float(tolerance),
            passed=bool(measured <= tolerance),
            context=context or {},
        )


@dataclass(frozen=True)
class HyperbolicityReport:
    """Exact root-pattern verdict for one Jensen polynomial."""

    degree: int
    real_root_count: int
    all_real: bool
    all_positive: bool
    min_root: float | None
    precedes: bool | None


# ---------------------------------------------------------------------------
# Sturm sequences over exact integers


def _int_coeffs(p: Polynomial) -> list:
    lcm = 1
    for c in p.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return [_mpz(c.numerator * (lcm // c.denominator)) for c in p.coeffs]


def _trim(cs: list) -> list:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _primitive(cs: list) -> list:
    g = 0
    for c in cs:
        g = _gcd(g, c)
        if g == 1:
            break
    if g in (0, 1):
        return cs
    return [c // g for c in cs]


def _derivative_int(cs: list) -> list:
    return [_mpz(j) * c for j, c in enumerate(cs)][1:]


def _prem(A: list, B: list) -> list:
    """Pseudo-remainder: lc(B)^(degA-degB+1) * A mod B, exact integers."""
    dB = len(B) - 1
    lcB = B[-1]
    R = list(A)
    e = len(A) - len(B) + 1
    while True:
        R = _trim(R)
        if not R or len(R) - 1 < dB:
            break
        dR = len(R) - 1
        lcR = R[-1]
        R = [lcB * c for c in R]
        shift = dR - dB
        for j, b in enumerate(B):
            R[shift + j] -= lcR * b
        e -= 1
    if e > 0 and R:
        m = lcB**e
        R = [c * m for c in R]
    return R


def _sturm_chain(p: Polynomial) -> list[list]:
    p0 = _primitive(_trim(_int_coeffs(p)))
    if len(p0) <= 1:
        return [p0] if p0 else [[_mpz(0)]]
    p1 = _primitive(_trim(_derivative_int(p0)))
    chain = [p0, p1]
    while len(chain[-1]) > 1:
        R = _prem(chain[-2], chain[-1])
        if not R:
            raise DegenerateSequence(
                "Sturm remainder vanished against a non-constant divisor; "
                "the polynomial has a repeated root"
            )
        delta_exp = len(chain[-2]) - len(chain[-1]) + 1
        neg = chain[-1][-1] < 0 and delta_exp % 2 == 1
        sign_m = -1 if neg else 1
        nxt = _primitive([-c * sign_m for c in R])
        chain.append(nxt)
    return chain


def _sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def _sign_at(cs: list, x) -> int:
    if x == math.inf:
        return _sign(cs[-1])
    if x == -math.inf:
        s = _sign(cs[-1])
        return s if (len(cs) - 1) % 2 == 0 else -s
    xa = Fraction(x)
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * xa + int(c)
    return _sign(acc)


def _variations(chain: list[list], x) -> int:
    signs = [s for s in (_sign_at(cs, x) for cs in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_real_root_count(p: Polynomial, interval: tuple | None = None) -> int:
    """Number of distinct real roots of p, in (a, b] if interval is given.

    Endpoints may be rationals, floats, or +-math.inf.  Raises
    DegenerateSequence when p has repeated roots.
    """
    if p.degree <= 0:
        return 0
    chain = _sturm_chain(p)
    if interval is None:
        a, b = -math.inf, math.inf
    else:
        a, b = interval
    return _variations(chain, a) - _variations(chain, b)


# ---------------------------------------------------------------------------
# Jensen polynomials and hyperbolicity


def jensen_gamma(series: EvenSeries, k: int) -> Fraction:
    """gamma_k = (-1)^k k! c_k; positive-axis sign convention for the roots."""
    sign = -1 if k % 2 else 1
    return sign * factorial(k) * series.coeff_exact(k)


def jensen_polynomial(series: EvenSeries, n: int) -> Polynomial:
    """g_n(x) = sum_j C(n, j) gamma_j x^j, exact."""
    if n < 1:
        raise InvalidParameter("jensen polynomial needs n >= 1")
    return Polynomial.from_coeffs(
        [comb(n, j) * jensen_gamma(series, j) for j in range(n + 1)]
    )


def _min_positive_root(p: Polynomial) -> float:
    """Smallest positive root of a hyperbolic, positive-rooted polynomial.

    Uses the reciprocal-sum lower bound -a0/a1 <= x1, a numpy companion
    estimate, and a float bisection refinement.
    """
    a0 = float(p.coeffs[0])
    a1 = float(p.coeffs[1]) if len(p.coeffs) > 1 else 0.0
    desc = [float(c) for c in reversed(p.coeffs)]
    roots = np.roots(desc)
    candidates = [
        float(r.real)
        for r in roots
        if abs(r.imag) <= 1e-9 * (1.0 + abs(r.real)) and r.real > 0.0
    ]
    if not candidates:
        raise InvalidParameter("no positive root found for min_root")
    est = min(candidates)
    lo, hi = est * (1.0 - 1e-6), est * (1.0 + 1e-6)
    f_lo, f_hi = p.eval_float(lo), p.eval_float(hi)
    widen = 0
    while (f_lo < 0.0) == (f_hi < 0.0) and widen < 60:
        lo *= 0.995
        hi *= 1.005
        f_lo, f_hi = p.eval_float(lo), p.eval_float(hi)
        widen += 1
    if (f_lo < 0.0) == (f_hi < 0.0):
        return est
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        f_mid = p.eval_float(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    root = 0.5 * (lo + hi)
    if a1 < 0.0 < a0:
        lower_bound = -a0 / a1
        if root < lower_bound * (1.0 - 1e-9):
            return lower_bound
    return root


def hyperbolicity_check(
    series: EvenSeries, n: int, precedence_basis: EvenSeries | None = None
) -> HyperbolicityReport:
    """Exact verdict on the n-th Jensen polynomial of the stream.

    all_real and all_positive come from Sturm counts over (-inf, inf) and
    (0, inf).  min_root is filled only when the root pattern is certified.
    When precedence_basis is given, precedes records whether this stream's
    smallest root strictly precedes the basis stream's.
    """
    p = jensen_polynomial(series, n)
    deg = p.degree
    count = sturm_real_root_count(p)
    all_real = count == deg
    pos = sturm_real_root_count(p, (0, math.inf))
    all_positive = all_real and pos == deg
    min_root = _min_positive_root(p) if all_positive else None
    precedes = None
    if precedence_basis is not None and min_root is not None:
        q = jensen_polynomial(precedence_basis, n)
        precedes = min_root < _min_positive_root(q)
    return HyperbolicityReport(
        degree=deg,
        real_root_count=count,
        all_real=all_real,
        all_positive=all_positive,
        min_root=min_root,
        precedes=precedes,
    )


def obrechkoff_combination(p: Polynomial, C) -> Polynomial:
    """q(x) = C p(x) - x p'(x), coefficient-wise q_j = (C - j) a_j.

    Requires p(0) = 1 and a certified hyperbolic, positive root pattern;
    under C >= 0 the combination is then positive on (0, x1).
    """
    if p.coeffs[0] != 1:
        raise PreconditionViolated("obrechkoff combination requires p(0) = 1")
    deg = p.degree
    if deg < 1:
        raise PreconditionViolated("obrechkoff combination needs degree >= 1")
    if sturm_real_root_count(p) != deg or sturm_real_root_count(p, (0, math.inf)) != deg:
        raise PreconditionViolated(
            "obrechkoff combination requires all roots real and positive"
        )
    Cf = Fraction(C)
    return Polynomial.from_coeffs([(Cf - j) * a for j, a in enumerate(p.coeffs)])


# ---------------------------------------------------------------------------
# Power sums of reciprocal zeros


def newton_power_sums(series: EvenSeries, m_max: int) -> List[Fraction]:
    """p_m = sum_n zeta_n^{-m}, zeta_n the zeros in the u = z^2 variable.

    Newton's identities on e_m = c_m / 4^m, the elementary symmetric
    functions of the reciprocal zeros; exact rationals throughout.
    """
    if m_max < 1:
        raise InvalidParameter("m_max must be >= 1")
    e = [series.coeff_exact(m) / Fraction(4) ** m for m in range(m_max + 1)]
    p: List[Fraction] = []
    for k in range(1, m_max + 1):
        s = (-1) ** (k - 1) * k * e[k]
        for i in range(1, k):
            s += (-1) ** (i - 1) * e[i] * p[k - i - 1]
        p.append(s)
    return p


def hadamard_truncation_error(
    series: EvenSeries,
    zeros: Sequence[float],
    z: float,
    tol: float = math.inf,
    cfg: SeriesConfig | None = None,
) -> VerificationReport:
    """Relative deviation of the truncated zero product from the series.

    The product over the first N positive zeros xi_n is
    prod (1 - z^2/xi_n^2); its deviation from the series value decays only
    like 1/N, so meaningful tolerances must come from a matching oracle.
    """
    direct = even_series_value(series, z, cfg).value
    product = 1.0
    zz = z * z
    for xi in zeros:
        product *= 1.0 - zz / (xi * xi)
    scale = max(abs(direct), 1e-300)
    measured = abs(product - direct) / scale
    return VerificationReport.from_measure(
        f"hadamard-{series.label}-N{len(zeros)}-z{z!r}",
        measured,
        tol,
        {"direct": direct, "product": product},
    )


# ---------------------------------------------------------------------------
# Representation residuals


def _quad_checked(fn: Callable[[float], float], what: str) -> float:
    value, abserr = quad(fn, 0.0, 1.0, epsabs=1e-12, epsrel=1e-12, limit=200)
    if abserr > 1e-9:
        raise QuadratureFailure(f"{what}: quadrature error estimate {abserr:g} too large")
    return value


def integral_representation_residual(
    kind: str, param: float, z: float, cfg: SeriesConfig | None = None
) -> float:
    """|series value - integral representation| for one test point.

    Kinds: "phi0" checks z phi0(z) = (mu+1) int_0^1 sin(z(1-u^{1/mu})) du,
    "phi1" checks phi1(z) = int_0^1 cos(z(1-u^{1/mu})) du (both mu in (0,1));
    "struve" checks the bounded-substitution form of the Poisson-type
    representation of H_nu for |nu| < 1/2.  The substitutions remove the
    endpoint singularity so plain adaptive quadrature converges.
    """
    kind = kind.replace("-", "_").lower()
    if z <= 0.0:
        raise InvalidParameter("integral checks need z > 0")
    if kind in ("phi0", "phi1"):
        mu = param
        if not (0.0 < mu < 1.0):
            raise InvalidParameter("integral representation requires mu in (0, 1)")
        inv = 1.0 / mu
        if kind == "phi0":
            lhs = z * even_series_value(phi0_series(mu), z, cfg).value
            rhs = (mu + 1.0) * _quad_checked(
                lambda u: math.sin(z * (1.0 - u**inv)), "phi0 integral"
            )
        else:
            lhs = even_series_value(phi1_series(mu), z, cfg).value
            rhs = _quad_checked(lambda u: math.cos(z * (1.0 - u**inv)), "phi1 integral")
        return abs(lhs - rhs)
    if kind == "struve":
        nu = param
        if not (-0.5 < nu < 0.5):
            raise InvalidParameter("Struve integral representation requires |nu| < 1/2")
        lhs = struve_h(nu, z, cfg).value
        half = nu + 0.5
        inv = 1.0 / half

        def integrand(u: float) -> float:
            t = 1.0 - u**inv
            return (1.0 + t) ** (nu - 0.5) * math.sin(z * t)

        pref = 2.0 * (0.5 * z) ** nu / (math.sqrt(math.pi) * math.gamma(half)) / half
        rhs = pref * _quad_checked(integrand, "struve integral")
        return abs(lhs - rhs)
    raise InvalidParameter(f"unknown integral representation kind {kind!r}")


def ode_residual(kind: str, param: float, z: float, cfg: SeriesConfig | None = None) -> float:
    """Residual of the defining inhomogeneous Bessel-type equation.

    Both residuals are arranged so the constant term cancels exactly in
    exact arithmetic: the measured value reflects only rounding and series
    truncation, not the size of the individual terms.
    """
    kind = kind.replace("-", "_").lower()
    if z <= 0.0:
        raise InvalidParameter("ode checks need z > 0")
    from .dd import two_prod

    p, e = two_prod(z, z)
    w_dd = (-0.25 * p, -0.25 * e)
    wf = w_dd[0] + w_dd[1]
    if kind == "lommel":
        mu = param
        if mu in (0.0, -1.0):
            raise InvalidParameter("lommel ode residual undefined at mu in {0, -1}")
        P, Q, R = even_series_weighted_sums(phi0_series(mu), w_dd, cfg)
        a = mu + 0.5
        K = 1.0 / (mu * (mu + 1.0))
        core = (P - 1.0) + K * (4.0 * a * Q + 4.0 * R - 4.0 * wf * P)
        return abs(z**a * core)
    if kind == "struve":
        nu = param
        P, Q, R = even_series_weighted_sums(struve_kernel_series(nu), w_dd, cfg)
        b = nu + 1.0
        core = (2.0 * nu + 1.0) * (P - 1.0) + 4.0 * b * Q + 4.0 * R - 4.0 * wf * P
        pref = (0.5 * z) ** b * 2.0 / (math.sqrt(math.pi) * math.gamma(nu + 1.5))
        return abs(pref * core)
    raise InvalidParameter(f"unknown ode kind {kind!r}")


def recurrence_residual(mu: float, z: float, cfg: SeriesConfig | None = None) -> float:
    """|(mu+1) phi1(z) - (mu+1) phi0(z) - z phi0'(z)|, an exact identity."""
    from .dd import two_prod

    p, e = two_prod(z, z)
    w_dd = (-0.25 * p, -0.25 * e)
    P, Q, _R = even_series_weighted_sums(phi0_series(mu), w_dd, cfg)
    phi1 = even_series_value(phi1_series(mu), z, cfg).value
    return abs((mu + 1.0) * phi1 - ((mu + 1.0) * P + 2.0 * Q))


# ---------------------------------------------------------------------------
# Zero bounds


def zero_bounds_check(
    kind: str,
    param: float,
    n_max: int = 10,
    cfg: SeriesConfig | None = None,
    scan: ScanConfig | None = None,
) -> VerificationReport:
    """Interval bounds for the small positive zeros.

    "lommel": the n-th zero of phi0 lies in (n pi, (n+1) pi) for mu in
    (0, 1), n <= n_max.  "lommel_phi1": the first zero of phi1 exceeds
    pi/2.  "struve": the first kernel zero exceeds 1.  measured is the
    negated worst margin, so passed means every bound holds strictly.
    """
    kind = kind.replace("-", "_").lower()
    scan = scan or ScanConfig()
    if kind == "lommel":
        if not (0.0 < param < 1.0):
            raise InvalidParameter("lommel zero bounds certified for mu in (0, 1)")
        stream = phi0_series(param)
        fn = lambda t: even_series_value(stream, t, cfg).value
        results = positive_zeros_up_to(fn, (n_max + 2) * math.pi, scan, count=n_max)
        zeros = [r.root for r in results]
        margins = [
            min(xi - n * math.pi, (n + 1) * math.pi - xi)
            for n, xi in enumerate(zeros, start=1)
        ]
        worst = min(margins)
        return VerificationReport.from_measure(
            f"zero-bounds-lommel-mu{param!r}",
            -worst,
            0.0,
            {"zeros": zeros, "margins": margins},
        )
    if kind == "lommel_phi1":
        if not (0.0 < param < 1.0):
            raise InvalidParameter("phi1 zero bound certified for mu in (0, 1)")
        stream = phi_series(param, 1)
        fn = lambda t: even_series_value(stream, t, cfg).value
        first = smallest_positive_zero(fn, scan).root
        margin = first - 0.5 * math.pi
        return VerificationReport.from_measure(
            f"zero-bounds-lommel-phi1-mu{param!r}",
            -margin,
            0.0,
            {"first_zero": first},
        )
    if kind == "struve":
        order = param
        if not (-0.5 < order < 0.5):
            raise InvalidParameter("struve zero bound certified for |nu| < 1/2")
        stream = struve_kernel_series(order)
        fn = lambda t: even_series_value(stream, t, cfg).value
        first = smallest_positive_zero(fn, scan).root
        margin = first - 1.0
        return VerificationReport.from_measure(
            f"zero-bounds-struve-nu{param!r}",
            -margin,
            0.0,
            {"first_zero": first},
        )
    raise InvalidParameter(f"unknown zero bound kind {kind!r}")


# ---------------------------------------------------------------------------
# Boundary sampling


def _basis_zeros(
    family: FunctionFamily,
    param: float,
    n_zeros: int,
    cfg: SeriesConfig | None,
    scan: ScanConfig | None,
) -> List[float]:
    stream = phi0_series(param) if family.is_lommel else struve_kernel_series(param)
    fn = lambda t: even_series_value(stream, t, cfg).value
    # cap at 60: beyond that the double-double accumulator loses the far
    # zeros to cancellation and sign scans become untrustworthy
    limit = min(2.0 * math.pi * (n_zeros + 2), 60.0)
    results = positive_zeros_up_to(fn, limit, scan or ScanConfig(), count=n_zeros)
    return [r.root for r in results]


def boundary_min_real_part(
    family: FunctionFamily,
    param: float,
    r: float,
    n_samples: int = 512,
    cfg: SeriesConfig | None = None,
    method: str = "series",
    zeros: Sequence[float] | None = None,
    n_zeros: int = 10,
    scan: ScanConfig | None = None,
) -> tuple[float, float]:
    """Minimum of Re(z F'/F) over the circle |z| = r, with its argmin angle.

    method "series" sums the defining series at each sample; method
    "product" expands the quotient over the first n_zeros zeros and
    completes the tail with exact Newton power sums, so the two routes
    share no code path and their agreement is a real consistency check.
    Sampling covers one fundamental domain: theta in [0, pi/2] for the
    z^2-argument families, [0, pi] for the sqrt-transformed ones.
    """
    if n_samples < 8:
        raise InvalidParameter("n_samples must be at least 8")
    theta_max = math.pi if family.is_sqrt_transformed else 0.5 * math.pi
    thetas = np.linspace(0.0, theta_max, n_samples)
    if method == "series":
        vals = quotient_real_on_circle(family, param, r, thetas, cfg)
        idx = int(np.argmin(vals))
        return float(vals[idx]), float(thetas[idx])
    if method != "product":
        raise InvalidParameter(f"unknown boundary method {method!r}")
    stream, kappa, gfac, sqrt_var = _family_setup(family, param)
    if zeros is None:
        zeros = _basis_zeros(family, param, n_zeros, cfg, scan)
    zeta = np.array([xi * xi for xi in zeros], dtype=float)
    m_tail = 12
    p_sums = newton_power_sums(stream, m_tail)
    tail_coeff = [
        float(p_sums[m - 1]) - float(np.sum(zeta ** (-float(m))))
        for m in range(1, m_tail + 1)
    ]
    z = r * np.exp(1j * thetas)
    u = z if sqrt_var else z * z
    S = np.zeros_like(u)
    for zn in zeta:
        S += u / (zn - u)
    for m in range(m_tail, 0, -1):
        S += tail_coeff[m - 1] * u**m
    kf = kappa[0] + kappa[1]
    vals = 1.0 - kf * gfac * np.real(S)
    idx = int(np.argmin(vals))
    return float(vals[idx]), float(thetas[idx])
