"""Quartic curves (y')^2 = R(y) and their Weierstrass solutions.

Curves are stored in the 1-4-6-4-1 weighting

    R(y) = alpha y^4 + 4 beta y^3 + 6 gamma y^2 + 4 delta y + epsilon,

because in that normalization the elliptic invariants are the classical
binary quartic covariants and take a short closed form.  The generic
solution of the curve through a non-critical initial point y0 is expressed
with the Weierstrass function of those invariants.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .elliptic import POLE_EPSILON, EllipticInvariants, wp_pair
from .errors import NegativeRadicand, NonFiniteSamples


@dataclass(frozen=True)
class QuarticCurve:
    """Coefficients of R(y) = alpha y^4 + 4 beta y^3 + 6 gamma y^2 + 4 delta y + epsilon."""

    alpha: float
    beta: float
    gamma: float
    delta: float
    epsilon: float

    def __post_init__(self) -> None:
        vals = (self.alpha, self.beta, self.gamma, self.delta, self.epsilon)
        if not all(np.isfinite(v) for v in vals):
            raise NonFiniteSamples("curve coefficients must be finite")


def eval_with_derivatives(R: QuarticCurve, y):
    """R(y) and its first four derivatives, for scalar or array y.

    Plain nested (Horner) evaluation; the fourth derivative is 24 alpha
    identically and is returned with the shape of y.
    """
    y = np.asarray(y, dtype=float) if np.ndim(y) else float(y)
    a, b, g, d, e = R.alpha, R.beta, R.gamma, R.delta, R.epsilon
    r0 = (((a * y + 4.0 * b) * y + 6.0 * g) * y + 4.0 * d) * y + e
    r1 = ((4.0 * a * y + 12.0 * b) * y + 12.0 * g) * y + 4.0 * d
    r2 = (12.0 * a * y + 24.0 * b) * y + 12.0 * g
    r3 = 24.0 * a * y + 24.0 * b
    r4 = 24.0 * a + 0.0 * y
    return r0, r1, r2, r3, r4


def invariants_from_coefficients(R: QuarticCurve) -> EllipticInvariants:
    """Classical invariants g2 = ae - 4bd + 3c^2 and
    g3 = ace + 2bcd - ad^2 - b^2 e - c^3 of the weighted coefficients."""
    a, b, g, d, e = R.alpha, R.beta, R.gamma, R.delta, R.epsilon
    g2 = a * e - 4.0 * b * d + 3.0 * g * g
    g3 = a * g * e + 2.0 * b * g * d - a * d * d - b * b * e - g ** 3
    return EllipticInvariants(g2, g3)


def _check_sigma(sigma) -> float:
    s = float(sigma)
    if s not in (1.0, -1.0):
        raise ValueError("sigma must be +1 or -1")
    return s


def weierstrass_solution(R: QuarticCurve, y0: float, sigma, xi, *, derivative: bool = False):
    """Solution y(xi) of (y')^2 = R(y) with y(0) = y0 and y'(0) = sigma sqrt(R(y0)).

    The closed form is

        y = y0 + [R'(y0)/2 (wp - b) - sigma sqrt(R(y0)) wp' + R(y0) R'''(y0)/24]
                 / [2 (wp - b)^2 - R(y0) R''''(y0)/48],      b = R''(y0)/24,

    with wp = wp(xi) for the invariants of R.  The sign convention: +sigma
    multiplies the initial slope, which pins the numerator sign of wp'
    (wp' ~ -2 xi^-3 near zero) to -sigma.

    Accepts scalar or array xi.  Array batches are evaluated with a uniform
    argument-halving depth so the evaluation error is smooth across finite
    difference stencils.  |xi| below the elliptic pole guard returns the
    analytic pole limit (y0, and slope sigma sqrt(R(y0))).

    Solution poles, where the denominator vanishes, map to non-finite
    outputs rather than exceptions; callers that must reject them check
    finiteness.  With ``derivative`` returns the pair (y, dy/dxi), the
    derivative taken analytically through the closed form.
    """
    s = _check_sigma(sigma)
    y0 = float(y0)
    r0, r1, r2, r3, r4 = eval_with_derivatives(R, y0)
    if r0 < 0.0:
        raise NegativeRadicand(f"R(y0) = {r0:g} < 0: no real slope at y0")
    sq = np.sqrt(r0)
    b = r2 / 24.0
    inv = invariants_from_coefficients(R)

    xi_arr = np.asarray(xi, dtype=float)
    scalar = xi_arr.ndim == 0
    xf = np.atleast_1d(xi_arr).astype(float)
    if not np.all(np.isfinite(xf)):
        raise NonFiniteSamples("xi must be finite")

    y = np.full(xf.shape, y0, dtype=float)
    dy = np.full(xf.shape, s * sq, dtype=float)
    if r0 == 0.0 and r1 == 0.0:
        # double root at y0: the exact equilibrium, and the closed form
        # would produce 0/0 wherever wp crosses b
        if scalar:
            return (y0, 0.0) if derivative else y0
        return (y, dy) if derivative else y
    away = np.abs(xf) >= POLE_EPSILON
    if np.any(away):
        W, W1 = wp_pair(xf[away], inv, uniform_depth=True)
        Wb = W - b
        num = 0.5 * r1 * Wb - s * sq * W1 + r0 * r3 / 24.0
        den = 2.0 * Wb * Wb - r0 * r4 / 48.0
        with np.errstate(divide="ignore", invalid="ignore"):
            y[away] = y0 + (num / den).real
            if derivative:
                W2 = 6.0 * W * W - 0.5 * inv.g2
                nump = 0.5 * r1 * W1 - s * sq * W2
                denp = 4.0 * Wb * W1
                dy[away] = ((nump * den - num * denp) / (den * den)).real

    if scalar:
        return (float(y[0]), float(dy[0])) if derivative else float(y[0])
    return (y, dy) if derivative else y


def solution_denominator(R: QuarticCurve, y0: float, xi):
    """Denominator of the closed-form solution at xi.

    Real zeros of this function in xi are the solution poles of
    weierstrass_solution; scans use sign changes of it to detect a pole
    crossing between grid nodes.
    """
    y0 = float(y0)
    r0, _, r2, _, r4 = eval_with_derivatives(R, y0)
    if r0 < 0.0:
        raise NegativeRadicand(f"R(y0) = {r0:g} < 0: no real slope at y0")
    b = r2 / 24.0
    inv = invariants_from_coefficients(R)
    xi_arr = np.asarray(xi, dtype=float)
    scalar = xi_arr.ndim == 0
    xf = np.atleast_1d(xi_arr).astype(float)
    den = np.full(xf.shape, np.inf)
    away = np.abs(xf) >= POLE_EPSILON
    if np.any(away):
        W, _ = wp_pair(xf[away], inv, uniform_depth=True)
        Wb = W - b
        den[away] = (2.0 * Wb * Wb - r0 * r4 / 48.0).real
    return float(den[0]) if scalar else den
