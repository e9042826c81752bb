"""Exact verification machinery: Sturm chains, Jensen polynomials,
power sums, residual checks, and the two boundary-sampling routes."""

import math
from fractions import Fraction

import pytest

import oracles
from starrad import (
    DegenerateSequence,
    FunctionFamily,
    InvalidParameter,
    Polynomial,
    PreconditionViolated,
    boundary_min_real_part,
    hadamard_truncation_error,
    hyperbolicity_check,
    integral_representation_residual,
    jensen_gamma,
    jensen_polynomial,
    lommel_numerator_series,
    newton_power_sums,
    obrechkoff_combination,
    ode_residual,
    phi_series,
    positive_zeros_up_to,
    radius_of_starlikeness,
    RadiusQuery,
    recurrence_residual,
    sturm_real_root_count,
    struve_kernel_series,
    even_series_value,
    zero_bounds_check,
)

F = FunctionFamily


def _poly(*coeffs):
    return Polynomial.from_coeffs([Fraction(c) for c in coeffs])


def test_polynomial_basics():
    p = _poly(-6, 11, -6, 1)  # (x-1)(x-2)(x-3)
    assert p.degree == 3
    assert p(Fraction(2)) == 0
    assert p.derivative().coeffs == (Fraction(11), Fraction(-12), Fraction(3))
    assert Polynomial.from_coeffs([Fraction(0)]).degree == -1


def test_sturm_root_counts():
    p = _poly(-6, 11, -6, 1)
    assert sturm_real_root_count(p) == 3
    assert sturm_real_root_count(p, (Fraction(1), Fraction(3))) == 2  # (1, 3]
    assert sturm_real_root_count(p, (Fraction(0), Fraction(1))) == 1
    assert sturm_real_root_count(p, (Fraction(3), math.inf)) == 0
    assert sturm_real_root_count(p, (-math.inf, Fraction(0))) == 0


def test_sturm_rejects_repeated_roots():
    with pytest.raises(DegenerateSequence):
        sturm_real_root_count(_poly(1, -2, 1))  # (x-1)^2


def test_jensen_gamma_exact_values():
    stream = phi_series(0.5, 0)
    assert jensen_gamma(stream, 0) == 1
    assert jensen_gamma(stream, 1) == Fraction(-16, 35)
    assert jensen_gamma(stream, 2) == Fraction(512, 3465)
    p2 = jensen_polynomial(stream, 2)
    assert p2.coeffs == (Fraction(1), Fraction(-32, 35), Fraction(512, 3465))


def test_jensen_polynomial_validation():
    with pytest.raises(InvalidParameter):
        jensen_polynomial(phi_series(0.5, 0), 0)


def test_hyperbolicity_small_degrees():
    stream = phi_series(0.5, 0)
    rep = hyperbolicity_check(stream, 6)
    assert rep.degree == 6
    assert rep.all_real and rep.all_positive
    assert rep.real_root_count == 6
    assert rep.min_root > 0
    weighted = lommel_numerator_series(0.5, 0.0)
    rep2 = hyperbolicity_check(weighted, 6, precedence_basis=stream)
    assert rep2.all_positive and rep2.precedes
    assert rep2.min_root < rep.min_root


def test_newton_power_sums_exact():
    # mu = 0: the stream is sin(z)/z in x = (z/2)^2, zeros at (n pi)^2 / 4
    sums = newton_power_sums(phi_series(0.0, 0), 2)
    assert sums == [Fraction(1, 6), Fraction(1, 90)]


def test_newton_power_sums_match_actual_zeros(cfg):
    stream = phi_series(0.5, 0)
    sums = newton_power_sums(stream, 3)
    zeros = positive_zeros_up_to(
        lambda t: even_series_value(stream, t, cfg).value, 60.0
    )
    xi_last = zeros[-1].root
    for m in (1, 2, 3):
        approx = sum((rr.root * rr.root) ** (-m) for rr in zeros)
        # the truncated sum is a lower bound converging from below;
        # the tail is dominated by an integral over pi-spaced zeros
        assert approx < float(sums[m - 1])
        assert float(sums[m - 1]) - approx <= 2.0 / xi_last ** (2 * m - 1)


def test_obrechkoff_combination():
    p = jensen_polynomial(phi_series(0.5, 0), 4)
    q = obrechkoff_combination(p, Fraction(4))
    dp = p.derivative()
    for x in (Fraction(1, 3), Fraction(1), Fraction(7, 2)):
        assert q(x) == 4 * p(x) - x * dp(x)
    with pytest.raises(PreconditionViolated):
        obrechkoff_combination(_poly(1, 1, 1), Fraction(1))  # complex roots
    with pytest.raises(PreconditionViolated):
        obrechkoff_combination(_poly(2, -1), Fraction(1))  # p(0) != 1


def test_hadamard_product_against_golden(cfg, golden):
    stream = phi_series(0.5, 0)
    roots = positive_zeros_up_to(
        lambda t: even_series_value(stream, t, cfg).value, 60.0
    )
    zeros = [rr.root for rr in roots]
    for n in (5, 10, 15):
        for z in (1.0, 2.0):
            rep = hadamard_truncation_error(stream, zeros[:n], z, cfg=cfg)
            assert abs(rep.measured - golden[oracles.hadamard_id(0.5, n, z)]) <= 1e-10


def test_integral_representations(cfg, golden):
    # package series against the graded-Simpson reference values
    mu, z = 0.5, 2.0
    phi0 = even_series_value(phi_series(mu, 0), z, cfg).value
    assert abs(z * phi0 / (mu + 1.0) - golden["integral|phi0|mu=0.5|z=2.0"]) <= 1e-10
    phi1 = even_series_value(phi_series(mu, 1), z, cfg).value
    assert abs(phi1 - golden["integral|phi1|mu=0.5|z=2.0"]) <= 1e-10
    nu = 0.25
    kernel = even_series_value(struve_kernel_series(nu), z, cfg).value
    pref = 2.0 * (0.5 * z) ** (nu + 1.0) / (math.sqrt(math.pi) * math.gamma(nu + 1.5))
    integral = golden["integral|struve|nu=0.25|z=2.0"]
    want_h = (
        2.0
        * (0.5 * z) ** nu
        / (math.sqrt(math.pi) * math.gamma(nu + 0.5))
        * integral
        / (nu + 0.5)
    )
    assert abs(pref * kernel - want_h) <= 1e-10
    # and the quad-based residuals inside the package
    assert integral_representation_residual("phi0", mu, z, cfg) <= 1e-8
    assert integral_representation_residual("phi1", mu, z, cfg) <= 1e-8
    assert integral_representation_residual("struve", nu, z, cfg) <= 1e-8


def test_ode_residuals(cfg):
    for mu in (-0.75, 0.25, 0.75):
        for z in (0.5, 2.0, 5.0):
            assert ode_residual("lommel", mu, z, cfg) <= 1e-9
    for nu in (-0.25, 0.0, 0.25):
        for z in (0.5, 2.0, 5.0):
            assert ode_residual("struve", nu, z, cfg) <= 1e-9
    with pytest.raises(InvalidParameter):
        ode_residual("lommel", 0.0, 1.0, cfg)
    with pytest.raises(InvalidParameter):
        ode_residual("heat", 0.5, 1.0, cfg)


def test_recurrence_residual(cfg):
    for mu in (-0.6, 0.25, 0.5, 0.75):
        for z in (0.5, 1.0, 3.0):
            assert recurrence_residual(mu, z, cfg) <= 1e-12


def test_zero_bounds_reports(cfg, scan):
    rep = zero_bounds_check("lommel", 0.5, 10, cfg, scan)
    assert rep.passed
    assert "mu0.5" in rep.check_name
    assert zero_bounds_check("lommel_phi1", 0.25, 1, cfg, scan).passed
    assert zero_bounds_check("struve", -0.25, 1, cfg, scan).passed
    with pytest.raises(InvalidParameter):
        zero_bounds_check("bessel", 0.5, 1, cfg, scan)


def test_boundary_routes_agree(cfg, scan):
    for fam, param in ((F.LOMMEL_G, 0.5), (F.STRUVE_W, 0.25)):
        res = radius_of_starlikeness(
            RadiusQuery(fam, param, 0.0), cfg, scan, certify=False
        )
        r = 0.9 * res.radius
        m_series, th_series = boundary_min_real_part(fam, param, r, 128, cfg)
        m_product, th_product = boundary_min_real_part(
            fam, param, r, 128, cfg, method="product", scan=scan
        )
        assert abs(m_series - m_product) <= 1e-9
        assert th_series == th_product
    with pytest.raises(InvalidParameter):
        boundary_min_real_part(F.LOMMEL_G, 0.5, 1.0, 4, cfg)
    with pytest.raises(InvalidParameter):
        boundary_min_real_part(F.LOMMEL_G, 0.5, 1.0, 64, cfg, method="cauchy")


def test_boundary_min_sits_on_real_axis_for_g(cfg):
    # on the real-axis regime the minimum is attained at theta = 0
    val, theta = boundary_min_real_part(F.LOMMEL_G, 0.5, 1.5, 256, cfg)
    assert theta == 0.0
    assert val < 1.0
