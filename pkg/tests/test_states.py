import math

import numpy as np
import pytest

from cktomo import (
    Coherent,
    DomainError,
    Fock,
    QuadratureSpec,
    coherent_psi,
    epsilon,
    fock_psi,
    integrate,
    make_params,
    psi,
    wigner,
)

SQRT2 = math.sqrt(2.0)


def _sigma_q(t, params):
    es = epsilon(t, params)
    ee = (es.eps * es.eps.conjugate()).real
    return math.sqrt(ee / 2.0)


class TestStateValidation:
    def test_fock_bounds(self):
        with pytest.raises(DomainError):
            Fock(-1)
        with pytest.raises(DomainError):
            Fock(17)
        with pytest.raises(DomainError):
            Fock(1.5)

    def test_alpha_bound(self):
        with pytest.raises(DomainError):
            Coherent(9.0)
        assert Coherent(1 + 2j).alpha == 1 + 2j


class TestCoherentPsi:
    def test_ground_value_at_origin(self):
        got = coherent_psi(0.0, 0.0, 0.0, make_params(0.0))
        assert got == pytest.approx(0.7511255444649425, abs=1e-12)

    def test_normalized(self):
        # Gaussian normalization must propagate through the damping
        alpha, t = 1.0 + 0.5j, 5.0
        p = make_params(0.05)
        es = epsilon(t, p)
        center = SQRT2 * (alpha * es.eps.conjugate()).real
        spec = QuadratureSpec(center, 8.0 * _sigma_q(t, p) * (1.0 + abs(alpha)), 400)
        nrm = integrate(lambda q: np.abs(coherent_psi(q, t, alpha, p)) ** 2, spec)
        assert nrm == pytest.approx(1.0, abs=1e-9)

    def test_alpha_zero_equals_fock_zero(self):
        p = make_params(0.3)
        qs = np.linspace(-3.0, 3.0, 25)
        a = coherent_psi(qs, 2.0, 0.0, p)
        b = fock_psi(qs, 2.0, 0, p)
        assert np.max(np.abs(a - b)) < 1e-12

    def test_gaussian_moments_match_closed_form(self):
        alpha, t = -0.8 + 1.1j, 3.0
        p = make_params(0.2)
        es = epsilon(t, p)
        mean_exact = SQRT2 * (alpha * es.eps.conjugate()).real
        var_exact = _sigma_q(t, p) ** 2
        spec = QuadratureSpec(mean_exact, 9.0 * _sigma_q(t, p) * (1 + abs(alpha)), 400)
        dens = lambda q: np.abs(coherent_psi(q, t, alpha, p)) ** 2
        mean = integrate(lambda q: q * dens(q), spec)
        var = integrate(lambda q: (q - mean_exact) ** 2 * dens(q), spec)
        assert mean == pytest.approx(mean_exact, abs=1e-8)
        assert var == pytest.approx(var_exact, abs=1e-8)

    def test_dotted_alpha_term_breaks_normalization(self):
        """The defective (time-derivative) alpha**2 coefficient destroys
        normalization; kept as a diagnostic of the transcription error."""
        p = make_params(0.05)
        spec = QuadratureSpec(0.0, 8.0 * _sigma_q(0.0, p) * 2.0, 400)
        nrm = integrate(
            lambda q: np.abs(coherent_psi(q, 0.0, 1.0, p, dotted_alpha_term=True)) ** 2,
            spec,
        )
        assert abs(nrm - 1.0) > 0.5


class TestFockPsi:
    def test_first_excited_node_at_origin(self):
        for g, t in ((0.0, 0.0), (0.05, 5.0), (0.5, 2.0)):
            assert abs(fock_psi(0.0, t, 1, make_params(g))) == 0.0

    def test_parity(self):
        p = make_params(0.05)
        qs = np.linspace(0.1, 4.0, 17)
        for n in range(5):
            a = fock_psi(-qs, 5.0, n, p)
            b = (-1.0) ** n * fock_psi(qs, 5.0, n, p)
            scale = np.maximum(1.0, np.abs(b))
            assert np.max(np.abs(a - b) / scale) < 1e-12

    def test_normalized(self):
        p = make_params(0.05)
        t = 5.0
        for n in range(4):
            widen = max(1.0, math.sqrt(2.0 * n + 1.0))
            spec = QuadratureSpec(0.0, 8.0 * _sigma_q(t, p) * widen, 300)
            nrm = integrate(lambda q: np.abs(fock_psi(q, t, n, p)) ** 2, spec)
            assert nrm == pytest.approx(1.0, abs=1e-9)

    def test_large_n_path_consistent(self):
        # the rescaled Hermite-Gaussian branch must agree with the plain one
        p = make_params(0.1)
        qs = np.linspace(-5.0, 5.0, 21)
        a = np.abs(fock_psi(qs, 1.0, 12, p)) ** 2
        spec = QuadratureSpec(0.0, 8.0 * _sigma_q(1.0, p) * 5.0, 420)
        nrm = integrate(lambda q: np.abs(fock_psi(q, 1.0, 12, p)) ** 2, spec)
        assert np.all(np.isfinite(a))
        assert nrm == pytest.approx(1.0, abs=1e-9)


class TestWigner:
    def test_ground_closed_form(self):
        p = make_params(0.0)
        assert wigner(0.0, 0.0, 0.0, Fock(0), p) == pytest.approx(2.0, abs=1e-8)
        qs = np.linspace(-1.5, 1.5, 7)
        ps = np.linspace(-1.2, 1.2, 7)
        got = wigner(qs, ps, 0.0, Fock(0), p)
        assert np.max(np.abs(got - 2.0 * np.exp(-qs * qs - ps * ps))) < 1e-8

    def test_total_mass_is_two_pi(self):
        # integrate W over phase space with trapezoids on a wide grid
        p = make_params(0.05)
        t, state = 5.0, Fock(2)
        es = epsilon(t, p)
        ee = (es.eps * es.eps.conjugate()).real
        om = p.omega_reduced
        e2 = math.exp(2.0 * p.gamma * t)
        sq = math.sqrt(ee / 2.0) * math.sqrt(5.0)
        sp = math.sqrt(e2 / om / 2.0) * math.sqrt(5.0)
        qs = np.linspace(-8.0 * sq, 8.0 * sq, 301)
        ps = np.linspace(-8.0 * sp, 8.0 * sp, 301)
        qq, pp = np.meshgrid(qs, ps, indexing="ij")
        w = wigner(qq, pp, t, state, p)
        mass = np.trapezoid(np.trapezoid(w, ps, axis=1), qs) / (2.0 * math.pi)
        assert mass == pytest.approx(1.0, abs=1e-7)

    def test_fock_parity(self):
        p = make_params(0.05)
        rng = np.random.default_rng(8)
        qs = rng.uniform(-1.5, 1.5, size=9)
        ps = rng.uniform(-1.5, 1.5, size=9)
        for n in (0, 1, 2):
            a = wigner(qs, ps, 5.0, Fock(n), p)
            b = wigner(-qs, -ps, 5.0, Fock(n), p)
            assert np.max(np.abs(a - b)) < 1e-9

    def test_marginal_matches_density(self):
        p = make_params(0.05)
        t, state = 2.0, Fock(1)
        om = p.omega_reduced
        e2 = math.exp(2.0 * p.gamma * t)
        sigma_p = math.sqrt(e2 / om / 2.0) * math.sqrt(3.0)
        spec = QuadratureSpec(0.0, 9.0 * sigma_p, 300)
        rng = np.random.default_rng(21)
        for q in rng.uniform(-1.0, 1.0, size=20):
            marg = integrate(lambda ps: wigner(q, ps, t, state, p), spec) / (
                2.0 * math.pi
            )
            assert marg == pytest.approx(abs(psi(state, q, t, p)) ** 2, abs=1e-7)

    def test_negativity_first_excited(self):
        got = wigner(0.0, 0.0, 0.0, Fock(1), make_params(0.0))
        assert got == pytest.approx(-2.0, abs=1e-5)

    def test_realness_random_points(self):
        # wigner itself asserts |Im| < 1e-9 (1 + |Re|); it must not raise
        p = make_params(0.3)
        rng = np.random.default_rng(4)
        for state in (Fock(2), Coherent(1.0 - 0.7j)):
            qs = rng.uniform(-2.0, 2.0, size=100)
            ps = rng.uniform(-2.0, 2.0, size=100)
            vals = wigner(qs, ps, 1.0, state, p)
            assert np.all(np.isfinite(vals))
