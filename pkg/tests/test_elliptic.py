import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cnlse_ansatz import (
    EllipticInvariants,
    NonFiniteSamples,
    PoleProximity,
    cubic_roots,
    wp,
    wp_pair,
    wp_prime,
)

from _pins import CUBIC_ROOTS, WP_03, WP_10, WP_INVARIANTS, WP_PRIME_03

INV = EllipticInvariants(*WP_INVARIANTS)


class TestPins:
    def test_value_at_0p3(self):
        assert abs(wp(0.3, INV) - WP_03) < 1e-12 * abs(WP_03)

    def test_slope_at_0p3(self):
        assert abs(wp_prime(0.3, INV) - WP_PRIME_03) < 1e-12 * abs(WP_PRIME_03)

    def test_value_after_halving(self):
        # |u| = 1.0 forces at least one duplication step
        assert abs(wp(1.0, INV) - WP_10) < 1e-12

    def test_pair_matches_parts(self):
        w, w1 = wp_pair(0.7, INV)
        assert w == wp(0.7, INV)
        assert w1 == wp_prime(0.7, INV)


class TestDifferentialIdentity:
    def test_reference_invariants(self):
        rng = np.random.default_rng(101)
        u = rng.uniform(0.05, 3.0, 500) * np.exp(1j * rng.uniform(0, 2 * np.pi, 500))
        w, w1 = wp_pair(u, INV)
        lhs = w1 ** 2 - (4 * w ** 3 - INV.g2 * w - INV.g3)
        assert np.max(np.abs(lhs) / np.maximum(1.0, np.abs(w) ** 3)) < 1e-10

    @settings(max_examples=60, deadline=None)
    @given(
        g2=st.floats(-5, 5),
        g3=st.floats(-5, 5),
        r=st.floats(0.05, 3.0),
        ang=st.floats(0.0, 6.28),
    )
    def test_random_invariants(self, g2, g3, r, ang):
        inv = EllipticInvariants(g2, g3)
        u = complex(r * np.cos(ang), r * np.sin(ang))
        w, w1 = wp_pair(u, inv)
        lhs = w1 ** 2 - (4 * w ** 3 - inv.g2 * w - inv.g3)
        assert abs(lhs) <= 1e-10 * max(1.0, abs(w) ** 3)

    def test_large_invariants(self):
        # far outside the moderate range: the scaled threshold keeps the
        # series inside its shrunken convergence disk
        inv = EllipticInvariants(290.0, -310.0)
        rng = np.random.default_rng(33)
        u = rng.uniform(0.05, 2.0, 200)
        w, w1 = wp_pair(u, inv)
        lhs = w1 ** 2 - (4 * w ** 3 - inv.g2 * w - inv.g3)
        assert np.max(np.abs(lhs) / np.maximum(1.0, np.abs(w) ** 3)) < 1e-10


class TestSymmetries:
    def test_even_function(self):
        rng = np.random.default_rng(7)
        u = rng.uniform(0.1, 2.5, 50) * np.exp(1j * rng.uniform(0, 2 * np.pi, 50))
        wp_plus, wp1_plus = wp_pair(u, INV)
        wp_minus, wp1_minus = wp_pair(-u, INV)
        assert np.max(np.abs(wp_plus - wp_minus)) < 1e-12
        assert np.max(np.abs(wp1_plus + wp1_minus)) < 1e-12

    def test_uniform_depth_matches_per_element(self):
        # same values to round-off; the flag only aligns halving counts
        u = np.linspace(0.2, 2.4, 40)
        w_a, w1_a = wp_pair(u, INV)
        w_b, w1_b = wp_pair(u, INV, uniform_depth=True)
        assert np.max(np.abs(w_a - w_b)) < 1e-10 * np.max(np.abs(w_a))
        assert np.max(np.abs(w1_a - w1_b)) < 1e-10 * np.max(np.abs(w1_a))


class TestCubicRoots:
    def test_reference_roots(self):
        roots = cubic_roots(INV)
        for got, want in zip(roots, CUBIC_ROOTS):
            assert abs(got - want) < 1e-12

    def test_ordering(self):
        roots = cubic_roots(INV)
        reals = [r.real for r in roots]
        assert reals == sorted(reals, reverse=True)

    @settings(max_examples=60, deadline=None)
    @given(g2=st.floats(-5, 5), g3=st.floats(-5, 5))
    def test_roots_satisfy_cubic(self, g2, g3):
        inv = EllipticInvariants(g2, g3)
        for r in cubic_roots(inv):
            assert abs(4 * r ** 3 - g2 * r - g3) < 1e-8
        e1, e2, e3 = cubic_roots(inv)
        assert abs(e1 + e2 + e3) < 1e-10  # no quadratic term

    def test_roots_are_wp_prime_zeros_data(self):
        # at a root value e, wp' vanishes where wp = e: check via the identity
        e1, _, _ = cubic_roots(INV)
        assert abs((4 * e1 ** 3 - INV.g2 * e1 - INV.g3)) < 1e-12


class TestValidation:
    def test_pole_guard(self):
        with pytest.raises(PoleProximity):
            wp(1e-12, INV)

    def test_pole_guard_in_array(self):
        with pytest.raises(PoleProximity):
            wp_pair(np.array([0.5, 1e-11]), INV)

    def test_configurable_pole_radius(self):
        with pytest.raises(PoleProximity):
            wp(0.01, INV, eps_pole=0.05)
        assert np.isfinite(wp(0.01, INV).real)

    def test_nonfinite_argument(self):
        with pytest.raises(NonFiniteSamples):
            wp(np.nan, INV)

    def test_nonfinite_invariants(self):
        with pytest.raises(NonFiniteSamples):
            EllipticInvariants(np.inf, 0.0)

    def test_order_too_low(self):
        with pytest.raises(ValueError):
            wp(0.3, INV, order=3)

    def test_bad_threshold(self):
        with pytest.raises(ValueError):
            wp(0.3, INV, threshold=0.0)

    def test_discriminant(self):
        assert abs(INV.discriminant - (3.52 ** 3 - 27 * 1.0384 ** 2)) < 1e-12
        # degenerate invariants are allowed, evaluation does not branch
        degen = EllipticInvariants(3.0, 1.0)
        assert abs(degen.discriminant) < 1e-12
        w, w1 = wp_pair(0.4, degen)
        assert abs(w1 ** 2 - (4 * w ** 3 - 3.0 * w - 1.0)) < 1e-12 * max(1, abs(w) ** 3)

    def test_scalar_types(self):
        w, w1 = wp_pair(0.3, INV)
        assert isinstance(w, complex) and isinstance(w1, complex)

    def test_array_shape(self):
        u = np.linspace(0.2, 1.4, 7)
        w, w1 = wp_pair(u, INV)
        assert w.shape == u.shape and w1.shape == u.shape
