"""Constructed objects of the trial reduction.

From a parameter record this module builds the squared imaginary part z(t),
the profile Q(x, t), the phase phi(t), and the complex envelope

    A(x, t) = (Q(x, t) + i sqrt(z(t))) e^{i phi(t)}.

z solves a fixed quartic ODE in t; for each time the profile Q solves a
second quartic ODE in x whose coefficients depend on z(t) and its rate.
The dispersion coefficient is fixed to 1 throughout this construction.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np
from scipy.integrate import quad

from .errors import NegativeRadicand, PoleProximity, RealityViolation
from .quartic import QuarticCurve, eval_with_derivatives, weierstrass_solution

# Branch label -> (sigma_z, sigma_Q).  The slope sign pair is part of the
# parameter record; these labels are the short names used by reports.
BRANCHES = {"pp": (1, 1), "pm": (1, -1), "mp": (-1, 1), "mm": (-1, -1)}


@dataclass(frozen=True)
class AnsatzParams:
    """Parameters of the construction.

    q is the nonlinearity coefficient; c1, c2, c3 are the integration
    constants of the reduced system; z0 = z(0) > 0 and Q0 = Q(0, t) are the
    initial levels; sigma_z and sigma_Q select the initial slope signs of
    the two quartic solutions.
    """

    q: float
    c1: float
    c2: float
    c3: float
    z0: float
    Q0: float
    phi0: float = 0.0
    sigma_z: int = 1
    sigma_Q: int = 1

    def __post_init__(self) -> None:
        vals = (self.q, self.c1, self.c2, self.c3, self.z0, self.Q0, self.phi0)
        if not all(np.isfinite(v) for v in vals):
            raise ValueError("parameters must be finite")
        if self.q == 0.0:
            raise ValueError("q must be nonzero")
        if self.z0 <= 0.0:
            raise ValueError("z0 must be positive")
        if self.sigma_z not in (1, -1) or self.sigma_Q not in (1, -1):
            raise ValueError("sigma_z and sigma_Q must be +1 or -1")
        object.__setattr__(self, "sigma_z", int(self.sigma_z))
        object.__setattr__(self, "sigma_Q", int(self.sigma_Q))
        r10 = eval_with_derivatives(z_curve(self), self.z0)[0]
        if r10 < 0.0:
            raise NegativeRadicand(
                f"R1(z0) = {r10:g} < 0: z(t) has no real initial slope"
            )


def with_branch(params: AnsatzParams, sigma_z: int, sigma_Q: int) -> AnsatzParams:
    """Copy of params with the slope signs replaced."""
    return replace(params, sigma_z=sigma_z, sigma_Q=sigma_Q)


def z_curve(params: AnsatzParams) -> QuarticCurve:
    """Quartic curve solved by z(t):
    (alpha, beta, gamma, delta, epsilon) = (-16 q^2, 4 q c1, -(2/3)(c1^2 + 4 q c2), c3, 0)."""
    k = params.c1 ** 2 + 4.0 * params.q * params.c2
    return QuarticCurve(
        alpha=-16.0 * params.q ** 2,
        beta=4.0 * params.q * params.c1,
        gamma=-(2.0 / 3.0) * k,
        delta=params.c3,
        epsilon=0.0,
    )


# The default experiment: the parameter set every command falls back to.
REFERENCE_PARAMS = AnsatzParams(q=-1.0, c1=-2.0, c2=0.4, c3=0.13, z0=1.0, Q0=1.0)


def _require_real_z(z, t) -> None:
    za = np.atleast_1d(np.asarray(z, dtype=float))
    ta = np.broadcast_to(np.atleast_1d(np.asarray(t, dtype=float)), za.shape)
    if not np.all(np.isfinite(za)):
        # Unreachable for valid parameters: the z-curve denominator
        # 2(wp-b)^2 + 8 q^2 R1(z0) is positive whenever R1(z0) > 0.
        bad = ta[~np.isfinite(za)][0]
        raise PoleProximity(f"z(t) hit a solution pole near t = {bad:g}")
    neg = za < 0.0
    if np.any(neg):
        i = int(np.argmax(neg))
        raise RealityViolation(
            f"z({ta[i]:g}) = {za[i]:g} < 0: sqrt(z) is not real there"
        )


def z_with_rate(params: AnsatzParams, t):
    """(z(t), z_t(t)) for scalar or array t.

    The rate comes from the analytic derivative of the closed form, which
    carries the sign of sigma_z sqrt(R1(z)) continued through turning
    points without any crossing bookkeeping.
    """
    z, zt = weierstrass_solution(
        z_curve(params), params.z0, params.sigma_z, t, derivative=True
    )
    _require_real_z(z, t)
    return z, zt


def z_of_t(params: AnsatzParams, t):
    """z(t); raises RealityViolation where the computed value drops below 0."""
    return z_with_rate(params, t)[0]


def _q_curve_from_state(params: AnsatzParams, z: float, zt: float) -> QuarticCurve:
    if z <= 0.0:
        raise RealityViolation(f"z = {z:g} <= 0: profile curve needs sqrt(z)")
    rz = np.sqrt(z)
    return QuarticCurve(
        alpha=-0.5 * params.q,
        beta=0.0,
        gamma=(params.c1 - 3.0 * params.q * z) / 6.0,
        delta=zt / (4.0 * rz),
        epsilon=2.0 * params.c2 + 1.5 * params.q * z * z - params.c1 * z,
    )


def q_curve(params: AnsatzParams, t: float) -> QuarticCurve:
    """Quartic curve solved by Q(., t):
    (-q/2, 0, (c1 - 3 q z)/6, z_t/(4 sqrt(z)), 2 c2 + (3/2) q z^2 - c1 z)."""
    z, zt = z_with_rate(params, float(t))
    return _q_curve_from_state(params, float(z), float(zt))


def Q_of_xt(params: AnsatzParams, x, t: float):
    """Profile Q(x, t) for scalar or array x; Q(0, t) = Q0 exactly."""
    return weierstrass_solution(
        q_curve(params, t), params.Q0, params.sigma_Q, x
    )


def phi_of_t(params: AnsatzParams, t: float) -> float:
    """Phase phi(t) = phi0 + c1 t - 2 q * integral of z over [0, t].

    Adaptive quadrature; absolute error well under 1e-10 for the bounded z
    trajectories this construction produces.
    """
    t = float(t)
    if t == 0.0:
        return params.phi0
    integral, _ = quad(
        lambda s: z_of_t(params, s), 0.0, t, epsabs=1e-12, epsrel=1e-12, limit=200
    )
    return params.phi0 + params.c1 * t - 2.0 * params.q * integral


def field_A(params: AnsatzParams, x, t: float):
    """Complex envelope A(x, t) = (Q + i sqrt(z)) e^{i phi} at scalar t."""
    z, zt = z_with_rate(params, float(t))
    curve = _q_curve_from_state(params, float(z), float(zt))
    Q = weierstrass_solution(curve, params.Q0, params.sigma_Q, x)
    phase = complex(np.exp(1j * phi_of_t(params, t)))
    return (Q + 1j * np.sqrt(z)) * phase


class FieldSampler:
    """Callable (x, t) -> A(x, t) that caches per-time state.

    Differentiation stencils and grid scans revisit the same times many
    times; the profile curve, sqrt(z), and the phase factor are computed
    once per distinct t.  x may be scalar or array.
    """

    def __init__(self, params: AnsatzParams):
        self.params = params
        self._state: dict = {}

    def _at(self, t: float):
        st = self._state.get(t)
        if st is None:
            z, zt = z_with_rate(self.params, t)
            curve = _q_curve_from_state(self.params, float(z), float(zt))
            st = (curve, np.sqrt(float(z)), complex(np.exp(1j * phi_of_t(self.params, t))))
            self._state[t] = st
        return st

    def __call__(self, x, t):
        curve, rz, phase = self._at(float(t))
        Q = weierstrass_solution(curve, self.params.Q0, self.params.sigma_Q, x)
        return (Q + 1j * rz) * phase


def make_field_sampler(params: AnsatzParams) -> FieldSampler:
    """Sampler of the envelope for residual stencils and grid evolution."""
    return FieldSampler(params)
