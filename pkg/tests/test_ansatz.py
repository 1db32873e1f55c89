import math
import types

import numpy as np
import pytest

from cnlse_ansatz import (
    AnsatzParams,
    BRANCHES,
    NegativeRadicand,
    Q_of_xt,
    RealityViolation,
    REFERENCE_PARAMS,
    field_A,
    make_field_sampler,
    phi_of_t,
    q_curve,
    with_branch,
    z_curve,
    z_of_t,
    z_with_rate,
)
from cnlse_ansatz.ansatz import _q_curve_from_state, _require_real_z

from _pins import (
    A_AT_1_05_MM,
    A_AT_1_1,
    PHI,
    Q_AT_1_0,
    Q_AT_1_1,
    Q_CURVE_T0,
    Q_CURVE_T1,
    Z_ORBIT,
)

# Rate quartic -32 z (z - 1)^2 (2z + 1): a double root at z0 = 1, so z(t)
# never leaves its starting level.  Exact in float arithmetic.
EQUILIBRIUM_PARAMS = AnsatzParams(q=-2.0, c1=-3.0, c2=1.125, c3=-8.0, z0=1.0, Q0=1.0)


class TestParams:
    def test_reference_values(self):
        p = REFERENCE_PARAMS
        assert (p.q, p.c1, p.c2, p.c3) == (-1.0, -2.0, 0.4, 0.13)
        assert (p.z0, p.Q0, p.phi0) == (1.0, 1.0, 0.0)
        assert (p.sigma_z, p.sigma_Q) == (1, 1)

    def test_q_must_be_nonzero(self):
        with pytest.raises(ValueError):
            AnsatzParams(q=0.0, c1=1.0, c2=0.0, c3=0.0, z0=1.0, Q0=1.0)

    def test_z0_must_be_positive(self):
        with pytest.raises(ValueError):
            AnsatzParams(q=-1.0, c1=-2.0, c2=0.4, c3=0.13, z0=-1.0, Q0=1.0)

    def test_z0_outside_orbit_rejected(self):
        # R1(2) < 0 for the reference c's: no real starting slope
        with pytest.raises(NegativeRadicand):
            AnsatzParams(q=-1.0, c1=-2.0, c2=0.4, c3=0.13, z0=2.0, Q0=1.0)

    def test_sigma_validation(self):
        with pytest.raises(ValueError):
            AnsatzParams(q=-1.0, c1=-2.0, c2=0.4, c3=0.13, z0=1.0, Q0=1.0, sigma_z=0)

    def test_with_branch(self):
        for name, (sz, sq) in BRANCHES.items():
            p = with_branch(REFERENCE_PARAMS, sz, sq)
            assert (p.sigma_z, p.sigma_Q) == (sz, sq)
            assert p.q == REFERENCE_PARAMS.q

    def test_branch_table(self):
        assert BRANCHES == {
            "pp": (1, 1), "pm": (1, -1), "mp": (-1, 1), "mm": (-1, -1)
        }


class TestZCurve:
    def test_reference_coefficients(self):
        c = z_curve(REFERENCE_PARAMS)
        assert (c.alpha, c.beta, c.delta, c.epsilon) == (-16.0, 8.0, 0.13, 0.0)
        assert c.gamma == pytest.approx(-1.6, abs=1e-15)

    def test_trivial_coefficients(self):
        # z_curve only reads (q, c1, c2, c3); probe coefficient wiring with
        # bare records, skipping the orbit validation of the full parameter set
        p = types.SimpleNamespace(q=1.0, c1=0.0, c2=0.0, c3=0.0)
        c = z_curve(p)
        assert (c.alpha, c.beta, c.gamma, c.delta, c.epsilon) == (-16, 0, 0, 0, 0)
        p = types.SimpleNamespace(q=-1.0, c1=0.0, c2=0.0, c3=1.0)
        c = z_curve(p)
        assert (c.alpha, c.beta, c.gamma, c.delta, c.epsilon) == (-16, 0, 0, 1, 0)


class TestOrbit:
    def test_z_at_zero_exact(self):
        assert z_of_t(REFERENCE_PARAMS, 0.0) == 1.0

    def test_orbit_pins(self):
        for (sigma, t), (z_want, zt_want) in Z_ORBIT.items():
            p = with_branch(REFERENCE_PARAMS, sigma, 1)
            z, zt = z_with_rate(p, t)
            assert abs(z - z_want) < 1e-12, (sigma, t)
            assert abs(zt - zt_want) < 1e-11, (sigma, t)

    def test_rate_continues_through_turning_point(self):
        # sigma_z=-1 reaches the lower turning point near t ~ 0.96 and the
        # rate changes sign smoothly (no |sqrt| kink)
        p = with_branch(REFERENCE_PARAMS, -1, 1)
        rates = [z_with_rate(p, t)[1] for t in np.linspace(0.85, 1.1, 61)]
        assert min(rates) < 0.0 < max(rates)
        steps = np.diff(rates)
        assert np.max(np.abs(steps)) < 0.05  # smooth, no jump

    def test_equilibrium_orbit(self):
        # double root of the rate quartic at z0 = 1: with q = -2, c1 = -3,
        # c2 = 9/8, c3 = -8 the quartic is -32 z (z - 1)^2 (2z + 1), zero
        # with zero slope at 1 in exact float arithmetic, so z stays put
        for t in (0.0, 0.3, 1.0, 2.5):
            assert z_of_t(EQUILIBRIUM_PARAMS, t) == 1.0
            assert z_with_rate(EQUILIBRIUM_PARAMS, t)[1] == 0.0

    def test_orbit_stays_in_lobe(self):
        for sigma in (1, -1):
            p = with_branch(REFERENCE_PARAMS, sigma, 1)
            ts = np.linspace(0.0, 3.0, 301)
            zs = np.array([z_of_t(p, float(t)) for t in ts])
            assert np.all(zs > 0.28)
            assert np.all(zs < 1.65)

    def test_reality_guard(self):
        # unreachable end to end with the shipped evaluator (the orbit is
        # bounded below by z = 0); exercised directly
        with pytest.raises(RealityViolation):
            _require_real_z(np.array([0.5, -1e-6]), np.array([0.0, 1.0]))


class TestQCurve:
    def test_t0_coefficients(self):
        a, b, g, d_abs, e = Q_CURVE_T0
        for sigma in (1, -1):
            p = with_branch(REFERENCE_PARAMS, sigma, 1)
            c = q_curve(p, 0.0)
            assert abs(c.alpha - a) < 1e-14
            assert c.beta == b
            assert abs(c.gamma - g) < 1e-14
            assert abs(c.delta - sigma * d_abs) < 1e-12
            assert abs(c.epsilon - e) < 1e-14

    def test_t1_coefficients(self):
        for sigma in (1, -1):
            p = with_branch(REFERENCE_PARAMS, sigma, 1)
            c = q_curve(p, 1.0)
            g, d, e = Q_CURVE_T1[sigma]
            assert abs(c.gamma - g) < 1e-12
            assert abs(c.delta - d) < 1e-12
            assert abs(c.epsilon - e) < 1e-12

    def test_delta_zero_at_equilibrium(self):
        assert q_curve(EQUILIBRIUM_PARAMS, 0.7).delta == 0.0

    def test_guard_rejects_nonpositive_z(self):
        with pytest.raises(RealityViolation):
            _q_curve_from_state(REFERENCE_PARAMS, -0.5, 0.0)
        with pytest.raises(RealityViolation):
            _q_curve_from_state(REFERENCE_PARAMS, 0.0, 0.0)


class TestProfile:
    def test_anchor_exact(self):
        for t in (0.0, 0.37, 1.0):
            assert Q_of_xt(REFERENCE_PARAMS, 0.0, t) == REFERENCE_PARAMS.Q0

    def test_profile_pins(self):
        for name, (sz, sq) in BRANCHES.items():
            p = with_branch(REFERENCE_PARAMS, sz, sq)
            got = Q_of_xt(p, 1.0, 1.0)
            assert abs(got - Q_AT_1_1[name]) < 1e-10, name
            got0 = Q_of_xt(p, 1.0, 0.0)
            assert abs(got0 - Q_AT_1_0[name]) < 1e-10 * abs(Q_AT_1_0[name]), name

    def test_negative_radicand_for_flipped_q(self):
        # positive q makes the Q-curve open downward at Q0 for these c's
        p = AnsatzParams(q=2.0, c1=-2.0, c2=-0.4, c3=0.13, z0=0.05, Q0=9.0)
        with pytest.raises(NegativeRadicand):
            Q_of_xt(p, 0.5, 0.0)


class TestPhase:
    def test_phi_at_zero(self):
        assert phi_of_t(REFERENCE_PARAMS, 0.0) == REFERENCE_PARAMS.phi0

    def test_phi_pins(self):
        for (sigma, t), want in PHI.items():
            p = with_branch(REFERENCE_PARAMS, sigma, 1)
            assert abs(phi_of_t(p, t) - want) < 1e-10, (sigma, t)

    def test_phi_offset(self):
        p = with_branch(REFERENCE_PARAMS, 1, 1)
        shifted = AnsatzParams(
            q=p.q, c1=p.c1, c2=p.c2, c3=p.c3, z0=p.z0, Q0=p.Q0, phi0=0.25
        )
        assert abs(phi_of_t(shifted, 0.5) - (PHI[(1, 0.5)] + 0.25)) < 1e-10

    def test_equilibrium_closed_form(self):
        # constant z: phi = phi0 + (c1 - 2 q z0) t, here phi0 + t
        p = EQUILIBRIUM_PARAMS
        t = 0.8
        want = p.phi0 + (p.c1 - 2.0 * p.q * p.z0) * t
        assert abs(phi_of_t(p, t) - want) < 1e-10


class TestField:
    def test_field_pins(self):
        for name, (sz, sq) in BRANCHES.items():
            p = with_branch(REFERENCE_PARAMS, sz, sq)
            got = field_A(p, 1.0, 1.0)
            assert abs(got - A_AT_1_1[name]) < 1e-10, name
        p = with_branch(REFERENCE_PARAMS, -1, -1)
        assert abs(field_A(p, 1.0, 0.5) - A_AT_1_05_MM) < 1e-10

    def test_modulus_squared(self):
        # |A|^2 = Q^2 + z by construction
        p = with_branch(REFERENCE_PARAMS, -1, -1)
        x, t = 0.6, 0.9
        a = field_A(p, x, t)
        q_val = Q_of_xt(p, x, t)
        z = z_of_t(p, t)
        assert abs(abs(a) ** 2 - (q_val ** 2 + z)) < 1e-12

    def test_sampler_matches_field(self):
        p = with_branch(REFERENCE_PARAMS, -1, -1)
        sampler = make_field_sampler(p)
        xs = np.linspace(-1.0, 1.0, 11)
        batch = sampler(xs, 0.8)
        for x, got in zip(xs, batch):
            assert abs(got - field_A(p, float(x), 0.8)) < 1e-14

    def test_sampler_caches_per_time(self):
        p = with_branch(REFERENCE_PARAMS, -1, -1)
        sampler = make_field_sampler(p)
        a = sampler(0.5, 0.8)
        b = sampler(0.5, 0.8)
        assert a == b
        assert isinstance(a, complex)

    def test_field_at_origin(self):
        # A(0, 0) = (Q0 + i sqrt(z0)) e^{i phi0}
        p = REFERENCE_PARAMS
        want = (p.Q0 + 1j * math.sqrt(p.z0)) * np.exp(1j * p.phi0)
        assert abs(field_A(p, 0.0, 0.0) - want) < 1e-14
