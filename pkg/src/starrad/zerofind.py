"""Bracketing and bisection utilities for real zeros on the positive axis.

The radius solvers only ever need the smallest positive zero of an even
series, or the unique crossing of a strictly increasing function with a
level; bisection is slow but sign-driven, which matters because the
series evaluations are accurate to far better than any secant step would
exploit and robustness beats iteration count here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List

from .errors import (
    InvalidParameter,
    NoRootFound,
    NoSignChange,
    TargetBelowInfimum,
)

__all__ = [
    "Bracket",
    "RootResult",
    "ScanConfig",
    "scan_sign_changes",
    "bisect",
    "smallest_positive_zero",
    "positive_zeros_up_to",
    "solve_monotone_level",
]


@dataclass(frozen=True)
class Bracket:
    """A closed interval [lo, hi] with 0 <= lo < hi known to contain a zero."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.lo < self.hi and math.isfinite(self.hi)):
            raise InvalidParameter(f"invalid bracket [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class RootResult:
    """A refined zero together with the scan bracket it came from.

    root is the abscissa with the smallest |f| seen at termination, so
    residual = f(root) is meaningful against the scale of f over the
    bracket.
    """

    root: float
    residual: float
    iterations: int
    bracket: Bracket


@dataclass(frozen=True)
class ScanConfig:
    """Step and range controls for sign-change scans."""

    initial_step: float = math.pi / 64.0
    max_radius: float = 16.0 * math.pi
    root_tol: float = 1e-12

    def __post_init__(self) -> None:
        if not (0.0 < self.initial_step < self.max_radius):
            raise InvalidParameter("need 0 < initial_step < max_radius")
        if self.root_tol <= 0.0:
            raise InvalidParameter("root_tol must be positive")


_DEFAULT_SCAN = ScanConfig()


def _iter_sign_changes(
    fn: Callable[[float], float], lo: float, hi: float, step: float
):
    if not (0.0 <= lo < hi):
        raise InvalidParameter(f"invalid scan range [{lo}, {hi}]")
    if step <= 0.0:
        raise InvalidParameter("step must be positive")
    x_prev = lo
    f_prev = fn(lo)
    x = lo
    while x < hi:
        x = min(x + step, hi)
        f = fn(x)
        if f == 0.0:
            b_lo = max(lo, x - step)
            b_hi = min(hi, x + step)
            if b_lo < b_hi:
                yield Bracket(b_lo, b_hi)
            # restart the parity from the next sample
            x_prev, f_prev = x, f
            continue
        if f_prev == 0.0:
            x_prev, f_prev = x, f
            continue
        if (f_prev < 0.0) != (f < 0.0):
            yield Bracket(x_prev, x)
        x_prev, f_prev = x, f


def scan_sign_changes(
    fn: Callable[[float], float], lo: float, hi: float, step: float
) -> List[Bracket]:
    """Walk [lo, hi] in fixed steps and collect sign-change brackets.

    An exact zero landing on a grid point yields the bracket formed by its
    two neighbours, clipped to [lo, hi].
    """
    return list(_iter_sign_changes(fn, lo, hi, step))


def bisect(
    fn: Callable[[float], float],
    bracket: Bracket,
    tol: float = 1e-12,
    max_iter: int = 200,
) -> RootResult:
    """Bisection on a sign-change bracket.

    Terminates when the bracket width falls below tol * (1 + |lo|) and
    returns whichever of the current endpoints or midpoint has the
    smallest |f|.
    """
    lo, hi = bracket.lo, bracket.hi
    f_lo = fn(lo)
    if f_lo == 0.0:
        return RootResult(lo, 0.0, 0, bracket)
    f_hi = fn(hi)
    if f_hi == 0.0:
        return RootResult(hi, 0.0, 0, bracket)
    if (f_lo < 0.0) == (f_hi < 0.0):
        raise NoSignChange(f"no sign change over [{lo}, {hi}]")
    iterations = 0
    mid = 0.5 * (lo + hi)
    f_mid = fn(mid)
    while hi - lo > tol * (1.0 + abs(lo)) and iterations < max_iter:
        if f_mid == 0.0:
            return RootResult(mid, 0.0, iterations, bracket)
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
        mid = 0.5 * (lo + hi)
        f_mid = fn(mid)
        iterations += 1
    candidates = ((lo, f_lo), (mid, f_mid), (hi, f_hi))
    root, residual = min(candidates, key=lambda p: abs(p[1]))
    return RootResult(root, residual, iterations, bracket)


def smallest_positive_zero(
    fn: Callable[[float], float], scan: ScanConfig | None = None
) -> RootResult:
    """Locate the smallest positive zero of fn.

    Scans (0, max_radius] at the configured step, then re-scans the lead
    interval twice at halved steps to guard against a close pair of zeros
    hiding inside one step, then bisects.
    """
    scan = scan or _DEFAULT_SCAN
    step = scan.initial_step
    lead = next(_iter_sign_changes(fn, 0.0, scan.max_radius, step), None)
    if lead is None:
        raise NoSignChange(
            f"no sign change in (0, {scan.max_radius}] at step {step}"
        )
    for _ in range(2):
        step *= 0.5
        finer = next(_iter_sign_changes(fn, 0.0, lead.hi, step), None)
        if finer is not None:
            lead = finer
    return bisect(fn, lead, scan.root_tol)


def positive_zeros_up_to(
    fn: Callable[[float], float],
    limit: float,
    scan: ScanConfig | None = None,
    count: int | None = None,
) -> List[RootResult]:
    """All zeros of fn in (0, limit], in increasing order.

    If count is given, exactly that many zeros are returned; finding
    fewer raises NoRootFound.
    """
    scan = scan or _DEFAULT_SCAN
    brackets = scan_sign_changes(fn, 0.0, limit, scan.initial_step)
    roots = [bisect(fn, b, scan.root_tol) for b in brackets]
    if count is not None:
        if len(roots) < count:
            raise NoRootFound(
                f"found only {len(roots)} zeros in (0, {limit}], wanted {count}"
            )
        roots = roots[:count]
    return roots


def solve_monotone_level(
    fn: Callable[[float], float],
    target: float,
    scan: ScanConfig | None = None,
) -> RootResult:
    """Solve fn(r) = target for a strictly increasing fn on (0, oo).

    Probes near zero to confirm the target exceeds the infimum, grows the
    bracket by doubling, then bisects fn - target.
    """
    scan = scan or _DEFAULT_SCAN
    r_lo = scan.initial_step / 64.0
    while fn(r_lo) >= target:
        r_lo /= 16.0
        if r_lo < 1e-12:
            raise TargetBelowInfimum(
                f"target {target} is at or below the infimum of the quotient"
            )
    r_hi = max(r_lo * 2.0, scan.initial_step)
    while fn(r_hi) < target:
        r_lo = r_hi
        r_hi *= 2.0
        if r_hi > scan.max_radius:
            raise NoRootFound(
                f"level {target} not reached below max_radius {scan.max_radius}"
            )
    bracket = Bracket(r_lo, r_hi)
    shifted = lambda r: fn(r) - target
    return bisect(shifted, bracket, scan.root_tol)
