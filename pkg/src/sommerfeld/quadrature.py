"""Adaptive quadrature and a closed-form trigonometric integral family.

The workhorse is :func:`integrate_adaptive`, interval-bisection quadrature
built on a 15-point Kronrod rule with its embedded 7-point Gauss rule as
the error estimator.  On top of it sit the members of the family

    I(eps, N) = int_0^{N pi} sin^2(t) / (eps + cos t)^2 dt
              = N pi (eps / sqrt(eps^2 - 1) - 1),       eps > 1,

whose closed form (:func:`trig_integral_closed`) is the production path
and whose literal quadrature (:func:`trig_integral_numeric`) serves as the
independent oracle.  :func:`real_line_pole_integral` evaluates the whole
real-line integral of 1/(w - w0) for the pole w0 = i sqrt((eps+1)/(eps-1))
by truncation and extrapolation; its limit is i pi regardless of eps.
"""

from __future__ import annotations

import cmath
import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError

# Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].  Gauss weights are
# zero at the Kronrod-only nodes so both sums run over one function table.
_NODES = np.array([
    -0.991455371120813,
    -0.949107912342759,
    -0.864864423359769,
    -0.741531185599394,
    -0.586087235467691,
    -0.405845151377397,
    -0.207784955007898,
    0.0,
    0.207784955007898,
    0.405845151377397,
    0.586087235467691,
    0.741531185599394,
    0.864864423359769,
    0.949107912342759,
    0.991455371120813,
])
_WEIGHTS_K15 = np.array([
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
    0.204432940075298,
    0.190350578064785,
    0.169004726639267,
    0.140653259715525,
    0.104790010322250,
    0.063092092629979,
    0.022935322010529,
])
_WEIGHTS_G7 = np.array([
    0.0,
    0.129484966168870,
    0.0,
    0.279705391489277,
    0.0,
    0.381830050505119,
    0.0,
    0.417959183673469,
    0.0,
    0.381830050505119,
    0.0,
    0.279705391489277,
    0.0,
    0.129484966168870,
    0.0,
])

_EVALS_PER_PANEL = 15


@dataclass(frozen=True)
class QuadratureResult:
    """Value of a numerical integral with its error bound and cost."""

    value: float
    error_estimate: float
    evaluations: int

    def __post_init__(self):
        if self.error_estimate < 0:
            raise DomainError("error_estimate must be non-negative")
        if self.evaluations < 1:
            raise DomainError("evaluations must be at least 1")


@dataclass(frozen=True)
class TrigIntegralParams:
    """Parameters (eps, N) of the trigonometric integral family.

    ``epsilon`` is the integrand parameter, strictly greater than one in
    every use this package makes of the family; ``n_periods`` is the
    number N of half-periods integrated over.
    """

    epsilon: float
    n_periods: int

    def __post_init__(self):
        if not (isinstance(self.epsilon, (int, float)) and math.isfinite(self.epsilon)):
            raise DomainError(f"epsilon must be a finite number, got {self.epsilon!r}")
        if self.epsilon <= 1.0:
            raise DomainError(f"epsilon must be > 1, got {self.epsilon}")
        if not isinstance(self.n_periods, int) or self.n_periods < 1:
            raise DomainError(f"n_periods must be a positive integer, got {self.n_periods!r}")


def _kronrod_panel(f: Callable, a: float, b: float) -> tuple[float, float]:
    """One 15-point Kronrod panel on [a, b]; returns (value, error)."""
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    x = mid + half * _NODES
    # A scalar return (a constant integrand) broadcasts to the node count.
    y = np.broadcast_to(np.asarray(f(x), dtype=float), x.shape)
    k15 = half * float(_WEIGHTS_K15 @ y)
    g7 = half * float(_WEIGHTS_G7 @ y)
    return k15, abs(k15 - g7)


def integrate_adaptive(
    f: Callable,
    a: float,
    b: float,
    rel_tol: float,
    *,
    abs_floor: float = 1e-14,
    max_evals: int = 1_000_000,
) -> QuadratureResult:
    """Integrate ``f`` over [a, b] by adaptive interval bisection.

    ``f`` must accept a numpy array of abscissae and return the integrand
    values; it is never evaluated at the interval endpoints.  The worst
    panel (largest Gauss/Kronrod discrepancy) is bisected until the summed
    error estimate drops below ``max(rel_tol * |value|, abs_floor)``.

    Raises
    ------
    DomainError
        If a >= b or rel_tol is outside (1e-14, 1e-2).
    ConvergenceError
        If the evaluation budget is exhausted first; the exception's
        ``best`` attribute carries the estimate reached.
    """
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise DomainError(f"need finite a < b, got a={a!r}, b={b!r}")
    if not (1e-14 < rel_tol < 1e-2):
        raise DomainError(f"rel_tol must lie in (1e-14, 1e-2), got {rel_tol!r}")

    # Four seed panels so a symmetric integrand cannot fool the first
    # error estimate into an immediate (wrong) accept.
    heap: list[tuple[float, int, float, float, float]] = []
    total = 0.0
    err_total = 0.0
    evals = 0
    counter = 0
    for i in range(4):
        left = a + (b - a) * i / 4
        right = a + (b - a) * (i + 1) / 4
        value, err = _kronrod_panel(f, left, right)
        evals += _EVALS_PER_PANEL
        total += value
        err_total += err
        heapq.heappush(heap, (-err, counter, left, right, value))
        counter += 1

    while err_total > max(rel_tol * abs(total), abs_floor):
        if evals + 2 * _EVALS_PER_PANEL > max_evals:
            best = QuadratureResult(total, err_total, evals)
            raise ConvergenceError(
                f"quadrature budget of {max_evals} evaluations exhausted "
                f"(error estimate {err_total:.3e} for value {total:.6e})",
                best=best,
            )
        neg_err, _, left, right, value = heapq.heappop(heap)
        total -= value
        err_total += neg_err  # neg_err = -err of the popped panel
        mid = 0.5 * (left + right)
        for lo, hi in ((left, mid), (mid, right)):
            child_value, child_err = _kronrod_panel(f, lo, hi)
            evals += _EVALS_PER_PANEL
            total += child_value
            err_total += child_err
            heapq.heappush(heap, (-child_err, counter, lo, hi, child_value))
            counter += 1

    return QuadratureResult(total, err_total, evals)


def trig_integral_closed(p: TrigIntegralParams) -> float:
    """Exact value N pi (eps / sqrt(eps^2 - 1) - 1) of the family."""
    eps = p.epsilon
    return p.n_periods * math.pi * (eps / math.sqrt(eps * eps - 1.0) - 1.0)


def trig_integral_numeric(p: TrigIntegralParams, rel_tol: float) -> QuadratureResult:
    """Literal quadrature of sin^2(t) / (eps + cos t)^2 over [0, N pi]."""
    eps = p.epsilon

    def integrand(t):
        s = np.sin(t)
        return s * s / (eps + np.cos(t)) ** 2

    return integrate_adaptive(integrand, 0.0, p.n_periods * math.pi, rel_tol)


def real_line_pole_integral(epsilon: float, r_max: float = 1e6, extrapolate: bool = True) -> complex:
    """Whole-real-line integral of 1/(w - w0), w0 = i sqrt((eps+1)/(eps-1)).

    The truncated integral over [-R, R] is log(R - w0) - log(-R - w0),
    which approaches i pi with an O(1/R) error.  With ``extrapolate`` the
    values at R and R/2 are Richardson-combined to cancel the 1/R term;
    without it the truncated value at ``r_max`` is returned as-is.
    """
    if not (isinstance(epsilon, (int, float)) and math.isfinite(epsilon) and epsilon > 1):
        raise DomainError(f"epsilon must be > 1, got {epsilon!r}")
    if not (math.isfinite(r_max) and r_max > 0):
        raise DomainError(f"r_max must be positive and finite, got {r_max!r}")
    w0 = 1j * math.sqrt((epsilon + 1.0) / (epsilon - 1.0))

    def truncated(radius: float) -> complex:
        # The path w - w0 stays in the lower half-plane, so the principal
        # branch is continuous along it.
        return cmath.log(radius - w0) - cmath.log(-radius - w0)

    if not extrapolate:
        return truncated(r_max)
    return 2.0 * truncated(r_max) - truncated(0.5 * r_max)
