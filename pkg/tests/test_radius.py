"""Radius queries: regimes, golden radii, validation, monotonicity."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from starrad import (
    FunctionFamily,
    InvalidParameter,
    InvalidQuery,
    RadiusQuery,
    Regime,
    SeriesConfig,
    equation_constant,
    radius_of_starlikeness,
    radius_table,
)

F = FunctionFamily


def _solve(fam, param, alpha, **kw):
    return radius_of_starlikeness(RadiusQuery(fam, param, alpha, **kw), certify=False)


def test_equation_constants():
    assert equation_constant(F.LOMMEL_F, 0.5, 0.5) == 0.5
    assert equation_constant(F.LOMMEL_G, 0.5, 0.25) == 0.25
    assert equation_constant(F.LOMMEL_H, 0.5, 0.25) == -0.5
    assert equation_constant(F.STRUVE_U, 0.25, 0.5) == 0.625
    assert equation_constant(F.STRUVE_V, 0.25, 0.5) == 0.75
    assert equation_constant(F.STRUVE_W, 0.25, 0.25) == -0.25


def test_golden_radii_spot_checks(golden):
    for fam, key, param, alpha in (
        (F.LOMMEL_F, "f", 0.25, 0.0),
        (F.LOMMEL_G, "g", 0.5, 0.5),
        (F.LOMMEL_H, "h", 0.75, 0.25),
        (F.STRUVE_U, "u", 0.25, 0.0),
        (F.STRUVE_V, "v", -0.25, 0.75),
        (F.STRUVE_W, "w", 0.0, 0.5),
        (F.LOMMEL_F, "f", -0.75, 0.5),  # imaginary-axis regime
    ):
        res = _solve(fam, param, alpha)
        assert abs(res.radius - golden[oracles.radius_id(key, param, alpha)]) <= 1e-10


def test_sqrt_families_report_transformed_root():
    res = _solve(F.LOMMEL_H, 0.5, 0.25)
    assert res.regime is Regime.SQRT_TRANSFORMED
    assert res.radius == res.equation_root**2
    res = _solve(F.STRUVE_W, 0.25, 0.0)
    assert res.regime is Regime.SQRT_TRANSFORMED
    assert res.radius == res.equation_root**2


def test_regime_classification():
    assert _solve(F.LOMMEL_F, -0.75, 0.0).regime is Regime.IMAGINARY_AXIS
    assert _solve(F.LOMMEL_F, -0.25, 0.0).regime is Regime.REAL_AXIS
    assert _solve(F.LOMMEL_G, 0.5, 0.0).regime is Regime.REAL_AXIS
    assert _solve(F.STRUVE_V, 0.25, 0.0).regime is Regime.REAL_AXIS


def test_invalid_queries():
    with pytest.raises(InvalidQuery):
        RadiusQuery(F.LOMMEL_G, 0.5, 1.0)
    with pytest.raises(InvalidQuery):
        RadiusQuery(F.LOMMEL_G, 0.5, -0.1)
    with pytest.raises(InvalidQuery):
        RadiusQuery(F.LOMMEL_G, math.nan, 0.0)
    # f degenerates at mu = -1/2 even in diagnostic mode
    with pytest.raises(InvalidQuery):
        _solve(F.LOMMEL_F, -0.5, 0.0)
    with pytest.raises(InvalidQuery):
        _solve(F.LOMMEL_F, -0.5, 0.0, diagnostic=True)


def test_strict_versus_diagnostic_domain():
    with pytest.raises(InvalidParameter):
        _solve(F.LOMMEL_G, 0.0, 0.0)
    assert _solve(F.LOMMEL_G, 0.0, 0.0, diagnostic=True).radius > 0
    with pytest.raises(InvalidParameter):
        _solve(F.STRUVE_U, 0.5, 0.0)
    got = _solve(F.STRUVE_V, 0.5, 0.0, diagnostic=True)
    assert "diagnostic mode" in got.note
    with pytest.raises(InvalidParameter):
        _solve(F.LOMMEL_G, 1.0, 0.0, diagnostic=True)
    with pytest.raises(InvalidParameter):
        _solve(F.STRUVE_V, 0.75, 0.0, diagnostic=True)


def test_diagnostic_tangent_fixed_point(golden):
    res = _solve(F.STRUVE_V, 0.5, 0.0, diagnostic=True)
    assert abs(res.radius - golden["tanroot|v|nu=0.5|alpha=0.0"]) <= 1e-8


def test_diagnostic_kernel_collapse_to_cosine():
    # at nu = -1/2 and alpha = 0 the weighted numerator is cos(z)
    res = _solve(F.STRUVE_V, -0.5, 0.0, diagnostic=True)
    assert abs(res.radius - 0.5 * math.pi) <= 1e-12


def test_notes_and_certification():
    res = _solve(F.LOMMEL_F, 0.25, 0.0)
    assert "real-axis boundary minimum" in res.note
    assert "certification skipped" in res.note
    assert res.certified is False
    certified = radius_of_starlikeness(RadiusQuery(F.LOMMEL_G, 0.5, 0.25))
    assert certified.certified is True
    assert certified.note is None
    assert certified.residual == pytest.approx(0.0, abs=1e-10)
    assert certified.bracket.lo <= certified.radius <= certified.bracket.hi


def test_radius_below_first_basis_zero(cfg, scan, golden):
    res = _solve(F.LOMMEL_G, 0.5, 0.0)
    first_zero = golden[oracles.zero_id(0.5, 1)]
    assert res.equation_root < first_zero - 1e-8


def test_table_rows_and_errors():
    rows = radius_table(
        [F.LOMMEL_F, F.LOMMEL_G], [-0.5, 0.5, 1.5], [0.5, 0.0], certify=False
    )
    assert len(rows) == 12
    keys = [(r.family, r.param, r.alpha) for r in rows]
    assert keys == sorted(keys)
    failed = [r for r in rows if r.error]
    # f rejects -1/2 outright; both families reject 1.5 as out of range
    assert len(failed) == 6
    f_fail = [r for r in failed if r.family == "f" and r.param == -0.5][0]
    assert f_fail.error.startswith("InvalidQuery")
    assert f_fail.radius is None and f_fail.regime is None
    g_fail = [r for r in failed if r.family == "g" and r.param == 1.5][0]
    assert g_fail.error.startswith("InvalidParameter")
    ok = [r for r in rows if not r.error]
    assert len(ok) == 6  # g at -1/2 is a perfectly good query
    assert all(r.radius > 0 for r in ok)


def test_table_is_deterministic():
    a = radius_table([F.STRUVE_V], [0.25], [0.0, 0.5], certify=False)
    b = radius_table([F.STRUVE_V], [0.25], [0.0, 0.5], certify=False)
    assert [(r.radius, r.equation_root, r.residual) for r in a] == [
        (r.radius, r.equation_root, r.residual) for r in b
    ]


@given(
    mu=st.integers(min_value=-96, max_value=120).map(lambda n: n / 128.0),
    a1=st.integers(min_value=0, max_value=94),
    gap=st.integers(min_value=1, max_value=5),
)
def test_alpha_monotonicity_property(mu, a1, gap):
    if mu in (0.0, -0.5):
        return
    alpha_lo = a1 / 100.0
    alpha_hi = (a1 + gap) / 100.0
    r_lo = _solve(F.LOMMEL_F, mu, alpha_lo).radius
    r_hi = _solve(F.LOMMEL_F, mu, alpha_hi).radius
    assert r_hi < r_lo


def test_imag_regime_matches_oracle_bisection(golden):
    for alpha in (0.0, 0.25, 0.5, 0.75):
        res = _solve(F.LOMMEL_F, -0.75, alpha)
        assert abs(res.radius - golden[oracles.radius_id("f", -0.75, alpha)]) <= 1e-10
