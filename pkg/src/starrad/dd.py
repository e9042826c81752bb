"""Double-double arithmetic primitives.

A double-double value is an unevaluated sum ``hi + lo`` of two floats with
``|lo| <= ulp(hi)/2``, giving roughly 32 significant decimal digits.  The
series in this package alternate in sign and suffer catastrophic
cancellation for moderate arguments; plain double accumulation loses the
small sums entirely once the largest term exceeds ``1/eps`` times the
result.  Accumulating in double-double pushes that wall out far enough to
cover every argument the radius solvers visit.

All functions take and return plain float pairs rather than a wrapper
class: the evaluator's inner loop is hot and attribute access costs more
than the arithmetic.  Error-free transforms follow Dekker and Knuth;
``two_prod`` uses Dekker splitting because ``math.fma`` is unavailable on
Python 3.10.
"""

from __future__ import annotations

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a: float, b: float) -> tuple[float, float]:
    """Knuth two-sum: s + e == a + b exactly, s = fl(a + b)."""
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a: float, b: float) -> tuple[float, float]:
    """Fast two-sum, valid when |a| >= |b|."""
    s = a + b
    return s, b - (s - a)


def split(a: float) -> tuple[float, float]:
    """Dekker split of a into 26-bit high and low parts."""
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> tuple[float, float]:
    """Dekker two-product: p + e == a * b exactly, p = fl(a * b)."""
    p = a * b
    ah, al = split(a)
    bh, bl = split(b)
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


def dd_add(ahi: float, alo: float, bhi: float, blo: float) -> tuple[float, float]:
    s, e = two_sum(ahi, bhi)
    e += alo + blo
    return quick_two_sum(s, e)


def dd_add_d(ahi: float, alo: float, b: float) -> tuple[float, float]:
    s, e = two_sum(ahi, b)
    e += alo
    return quick_two_sum(s, e)


def dd_mul(ahi: float, alo: float, bhi: float, blo: float) -> tuple[float, float]:
    p, e = two_prod(ahi, bhi)
    e += ahi * blo + alo * bhi
    return quick_two_sum(p, e)


def dd_mul_d(ahi: float, alo: float, b: float) -> tuple[float, float]:
    p, e = two_prod(ahi, b)
    e += alo * b
    return quick_two_sum(p, e)


def dd_div(ahi: float, alo: float, bhi: float, blo: float) -> tuple[float, float]:
    # Long division with two Newton-style corrections.
    q1 = ahi / bhi
    p, e = two_prod(q1, bhi)
    rhi, rlo = dd_add(ahi, alo, -p, -e - q1 * blo)
    q2 = rhi / bhi
    p, e = two_prod(q2, bhi)
    rhi, rlo = dd_add(rhi, rlo, -p, -e - q2 * blo)
    q3 = rhi / bhi
    q, e = quick_two_sum(q1, q2)
    return dd_add_d(q, e, q3)


def dd_neg(ahi: float, alo: float) -> tuple[float, float]:
    return -ahi, -alo


def dd_from_float(a: float) -> tuple[float, float]:
    return a, 0.0
