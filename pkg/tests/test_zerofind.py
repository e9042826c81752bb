"""Bracketing and bisection tests on elementary functions."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from starrad import (
    Bracket,
    InvalidParameter,
    NoRootFound,
    NoSignChange,
    ScanConfig,
    TargetBelowInfimum,
    bisect,
    positive_zeros_up_to,
    scan_sign_changes,
    smallest_positive_zero,
    solve_monotone_level,
)


def test_bracket_validation():
    b = Bracket(1.0, 2.0)
    assert b.width == 1.0
    with pytest.raises(InvalidParameter):
        Bracket(-1.0, 2.0)
    with pytest.raises(InvalidParameter):
        Bracket(2.0, 2.0)
    with pytest.raises(InvalidParameter):
        Bracket(0.0, math.inf)


def test_scan_config_validation():
    with pytest.raises(InvalidParameter):
        ScanConfig(initial_step=0.0)
    with pytest.raises(InvalidParameter):
        ScanConfig(max_radius=-1.0)
    with pytest.raises(InvalidParameter):
        ScanConfig(root_tol=0.0)


def test_scan_finds_cosine_zeros():
    brackets = scan_sign_changes(math.cos, 0.0, 8.0, 0.5)
    assert len(brackets) == 3
    expected = (0.5 * math.pi, 1.5 * math.pi, 2.5 * math.pi)
    for b, want in zip(brackets, expected):
        assert b.lo < want < b.hi
        root = bisect(math.cos, b).root
        assert abs(root - want) <= 1e-11


def test_scan_handles_exact_grid_zero():
    # the scan lands exactly on the zero of x - 1 at step 0.5
    brackets = scan_sign_changes(lambda x: x - 1.0, 0.0, 3.0, 0.5)
    assert len(brackets) == 1
    assert brackets[0].lo < 1.0 < brackets[0].hi
    assert bisect(lambda x: x - 1.0, brackets[0]).root == pytest.approx(1.0, abs=1e-12)


def test_bisect_requires_sign_change():
    with pytest.raises(NoSignChange):
        bisect(lambda x: x * x + 1.0, Bracket(1.0, 2.0))


def test_bisect_endpoint_zero():
    res = bisect(lambda x: x - 2.0, Bracket(2.0, 3.0))
    assert res.root == 2.0
    assert res.residual == 0.0


def test_smallest_positive_zero_sine():
    res = smallest_positive_zero(math.sin)
    assert abs(res.root - math.pi) <= 1e-11
    assert res.iterations > 0


def test_positive_zeros_up_to():
    roots = positive_zeros_up_to(math.sin, 10.0)
    assert len(roots) == 3
    for n, rr in enumerate(roots, start=1):
        assert abs(rr.root - n * math.pi) <= 1e-11
    with pytest.raises(NoRootFound):
        positive_zeros_up_to(math.sin, 10.0, count=5)


def test_solve_monotone_level():
    res = solve_monotone_level(math.exp, 2.0)
    assert abs(res.root - math.log(2.0)) <= 1e-11
    with pytest.raises(TargetBelowInfimum):
        solve_monotone_level(math.exp, 0.5)
    with pytest.raises(NoRootFound):
        solve_monotone_level(math.exp, 1e30, ScanConfig(max_radius=8.0))


@given(shift=st.integers(min_value=1, max_value=700).map(lambda n: n / 100.0))
def test_bisect_residual_is_minimal(shift):
    fn = lambda x: math.tanh(x - shift)
    res = smallest_positive_zero(fn, ScanConfig(max_radius=16.0))
    assert abs(res.root - shift) <= 1e-10
    assert abs(res.residual) == abs(fn(res.root))
