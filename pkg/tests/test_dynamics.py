import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cktomo import (
    DomainError,
    DegenerateFrame,
    epsilon,
    epsilon_residual,
    frame_coeffs,
    make_params,
    time_backward,
    time_forward,
)
from cktomo.checks import rk4_epsilon


class TestMakeParams:
    def test_frictionless_limit(self):
        assert make_params(0.0).omega_reduced == 1.0

    def test_three_four_five(self):
        assert make_params(0.6).omega_reduced == pytest.approx(0.8, abs=1e-15)

    def test_small_gamma(self):
        assert make_params(0.05).omega_reduced == pytest.approx(
            0.998749217771909, abs=1e-15
        )

    @pytest.mark.parametrize("bad", [-0.1, 1.0, 1.5, math.inf, math.nan])
    def test_domain_error(self, bad):
        with pytest.raises(DomainError):
            make_params(bad)

    def test_pythagorean_invariant(self):
        for g in np.linspace(0.0, 0.999, 37):
            p = make_params(g)
            assert abs(p.omega_reduced**2 + p.gamma**2 - 1.0) < 1e-15


class TestEpsilon:
    def test_initial_conditions_exact(self):
        rng = np.random.default_rng(11)
        for g in rng.uniform(0.0, 0.999, size=20):
            p = make_params(g)
            es = epsilon(0.0, p)
            om = p.omega_reduced
            assert abs(es.eps - 1.0 / math.sqrt(om)) < 1e-14
            assert abs(es.eps_dot - complex(-g, om) / math.sqrt(om)) < 1e-14

    def test_quarter_turn_frictionless(self):
        es = epsilon(math.pi / 2.0, make_params(0.0))
        assert abs(es.eps - 1j) < 1e-12
        assert abs(es.eps_dot - (-1.0)) < 1e-12

    def test_closed_form_regression(self):
        es = epsilon(5.0, make_params(0.05))
        assert es.eps == pytest.approx(
            0.21637691550945426 - 0.748646296989567j, abs=1e-14
        )

    def test_closed_form_vs_rk4(self):
        # independent oracle: fixed-step RK4 from the initial data
        for g, t_end in ((0.0, 10.0), (0.05, 5.0), (0.5, 10.0)):
            numeric = rk4_epsilon(g, t_end, dt=1e-4)
            assert abs(epsilon(t_end, make_params(g)).eps - numeric) < 1e-7

    @pytest.mark.parametrize(
        "t,g", [(0.0, 0.0), (5.0, 0.05), (20.0, 0.5)]
    )
    def test_residual_spot(self, t, g):
        assert epsilon_residual(t, make_params(g)) < 1e-10

    def test_residual_sampled(self):
        rng = np.random.default_rng(5)
        for _ in range(200):
            t = rng.uniform(0.0, 20.0)
            g = rng.uniform(0.0, 0.9)
            assert epsilon_residual(t, make_params(g)) < 1e-10

    @given(
        st.floats(min_value=0.0, max_value=20.0),
        st.floats(min_value=0.0, max_value=0.9),
    )
    @settings(max_examples=60, deadline=None, derandomize=True)
    def test_wronskian_conserved(self, t, g):
        p = make_params(g)
        es = epsilon(t, p)
        wr = math.exp(2.0 * g * t) * (es.eps.conjugate() * es.eps_dot).imag
        assert abs(wr - 1.0) < 1e-10


class TestTimeMaps:
    def test_gamma_zero_identity(self):
        assert time_forward(7.0, 0.0) == 7.0
        assert time_backward(7.0, 0.0) == 7.0

    def test_forward_value(self):
        assert time_forward(5.0, 0.05) == pytest.approx(3.9346934028736658, abs=1e-12)

    @pytest.mark.parametrize("t", [0.1, 1.0, 10.0])
    def test_roundtrip(self, t):
        assert abs(time_backward(time_forward(t, 0.3), 0.3) - t) < 1e-12

    @given(
        st.floats(min_value=0.0, max_value=10.0),
        st.floats(min_value=0.0, max_value=0.45),
    )
    @settings(max_examples=60, deadline=None, derandomize=True)
    def test_roundtrip_property(self, t, g):
        assert abs(time_backward(time_forward(t, g), g) - t) < 1e-12

    def test_backward_domain_error(self):
        with pytest.raises(DomainError):
            time_backward(10.1, 0.05)  # 2*gamma*t' = 1.01 >= 1

    def test_strictly_increasing(self):
        for g in (0.0, 0.3, 0.7):
            ts = np.linspace(0.0, 20.0, 300)
            fwd = [time_forward(t, g) for t in ts]
            assert all(b > a for a, b in zip(fwd, fwd[1:]))


class TestFrameCoeffs:
    def test_gamma_zero(self):
        fc = frame_coeffs(0.7, -1.3, 3.21, make_params(0.0))
        assert fc.a == pytest.approx(0.7, abs=1e-14)
        assert fc.b == pytest.approx(-1.3, abs=1e-14)

    def test_nu_zero(self):
        fc = frame_coeffs(1.4, 0.0, 2.0, make_params(0.3))
        assert fc.a == 1.4
        assert fc.b == 0.0

    def test_time_zero_general_gamma(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            g = rng.uniform(0.0, 0.95)
            mu, nu = rng.uniform(-2.0, 2.0, size=2)
            if mu == 0.0 and nu == 0.0:
                continue
            p = make_params(g)
            fc = frame_coeffs(mu, nu, 0.0, p)
            assert fc.a == pytest.approx(mu - g * nu, abs=1e-13)
            assert fc.b == pytest.approx(p.omega_reduced * nu, abs=1e-13)

    def test_b_closed_form(self):
        # b = nu / (eps eps*) = nu * Omega * exp(2 gamma t)
        p = make_params(0.4)
        fc = frame_coeffs(0.0, 1.7, 2.5, p)
        expected = 1.7 * p.omega_reduced * math.exp(2.0 * 0.4 * 2.5)
        assert fc.b == pytest.approx(expected, rel=1e-12)

    def test_degenerate_frame(self):
        with pytest.raises(DegenerateFrame):
            frame_coeffs(0.0, 0.0, 1.0, make_params(0.1))
