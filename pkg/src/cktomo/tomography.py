"""Analytic quadrature distributions (tomograms) of the damped oscillator,
the homodyne frame map, the normalization check, and the independent
Radon-transform oracle built on the numerically evaluated Wigner function.

All tomograms share the scale

    s2(mu, nu, t) = eps eps* (a**2 + b**2)

with (a, b) from :func:`cktomo.dynamics.frame_coeffs`; the ground-like
state is the centered Gaussian

    w0 = exp(-X**2 / s2) / sqrt(pi * s2),

Fock states multiply it by H_n(X/sqrt(s2))**2 / (2**n n!), and the
coherent tomogram is a displaced Gaussian assembled from three exponential
factors whose last two are mutual complex conjugates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import DampingParams, epsilon
from .errors import ConjugationBroken, DegenerateFrame, DomainError
from .numerics import QuadratureSpec, _gauss_legendre, hermite, hermite_gauss, integrate
from .states import Coherent, Fock, QuantumState, wigner

__all__ = [
    "TomographyFrame",
    "optical_frame",
    "ground_tomogram",
    "fock_tomogram",
    "coherent_tomogram",
    "tomogram",
    "normalization",
    "radon_tomogram",
    "wigner_moments",
]

_SQRT2 = math.sqrt(2.0)
_HERMITE_GAUSS_MIN_N = 10


@dataclass(frozen=True)
class TomographyFrame:
    """A point (X, mu, nu) in tomography space.

    X, mu, nu may be scalars or broadcastable arrays; the direction
    (mu, nu) = (0, 0) is rejected everywhere it appears.
    """

    x: object
    mu: object
    nu: object

    def __post_init__(self) -> None:
        x = np.asarray(self.x, dtype=float)
        mu = np.asarray(self.mu, dtype=float)
        nu = np.asarray(self.nu, dtype=float)
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(mu)) and np.all(np.isfinite(nu))):
            raise DomainError("frame coordinates must be finite")
        np.broadcast_shapes(x.shape, mu.shape, nu.shape)
        if np.any((mu == 0.0) & (nu == 0.0)):
            raise DegenerateFrame("frame contains a point with mu = nu = 0")
        object.__setattr__(self, "x", x if x.ndim else float(x))
        object.__setattr__(self, "mu", mu if mu.ndim else float(mu))
        object.__setattr__(self, "nu", nu if nu.ndim else float(nu))

    @property
    def is_scalar(self) -> bool:
        return (
            np.asarray(self.x).ndim == 0
            and np.asarray(self.mu).ndim == 0
            and np.asarray(self.nu).ndim == 0
        )


def optical_frame(phi):
    """Homodyne frame direction (mu, nu) = (cos phi, -sin phi).

    The quadrature measured at local-oscillator phase phi is
    q cos(phi) - p sin(phi); phi may be a scalar or an array.
    """
    pa = np.asarray(phi, dtype=float)
    if not np.all(np.isfinite(pa)):
        raise DomainError("phi must be finite")
    mu = np.cos(pa)
    nu = -np.sin(pa)
    if pa.ndim == 0:
        return float(mu), float(nu)
    return mu, nu


def _frame_quantities(mu, nu, t: float, params: DampingParams):
    """Vectorized (a, b, s2) for arrays mu, nu at one instant."""
    es = epsilon(t, params)
    ee = (es.eps * es.eps.conjugate()).real
    re = (es.eps.conjugate() * es.eps_dot).real
    e2 = math.exp(2.0 * params.gamma * t)
    a = e2 * np.asarray(nu, float) * re / ee + np.asarray(mu, float)
    b = np.asarray(nu, float) / ee
    return a, b, ee * (a * a + b * b)


def frame_scale_sq(mu, nu, t: float, params: DampingParams):
    """Tomogram Gaussian scale s2 = eps eps* (a**2 + b**2); the variance of
    the ground-like quadrature distribution is s2 / 2."""
    if np.any((np.asarray(mu) == 0.0) & (np.asarray(nu) == 0.0)):
        raise DegenerateFrame("frame direction (mu, nu) = (0, 0) is degenerate")
    return _frame_quantities(mu, nu, t, params)[2]


def ground_tomogram(frame: TomographyFrame, t: float, params: DampingParams):
    """Quadrature distribution of the ground-like state: a centered
    Gaussian in X with variance s2/2.  Strictly positive."""
    s2 = frame_scale_sq(frame.mu, frame.nu, t, params)
    x = np.asarray(frame.x, dtype=float)
    out = np.exp(-x * x / s2) / np.sqrt(math.pi * s2)
    return float(out) if np.ndim(out) == 0 else out


def fock_tomogram(frame: TomographyFrame, t: float, n: int, params: DampingParams):
    """Quadrature distribution of the Fock state |n>:
    w0 * H_n(X/sqrt(s2))**2 / (2**n n!).  Nonnegative; n = 0 reproduces the
    ground tomogram exactly."""
    n = Fock(n).n
    s2 = frame_scale_sq(frame.mu, frame.nu, t, params)
    x = np.asarray(frame.x, dtype=float)
    y = x / np.sqrt(s2)
    norm = 1.0 / (2.0**n * math.factorial(n))
    if n < _HERMITE_GAUSS_MIN_N:
        w0 = np.exp(-x * x / s2) / np.sqrt(math.pi * s2)
        out = w0 * hermite(n, y) ** 2 * norm
    else:
        out = hermite_gauss(n, y) ** 2 * norm / np.sqrt(math.pi * s2)
    return float(out) if np.ndim(out) == 0 else out


def coherent_tomogram(frame: TomographyFrame, t: float, alpha: complex, params: DampingParams):
    """Quadrature distribution of the coherent state |alpha>.

    Assembled literally as the product of three exponential factors in
    complex arithmetic; the second and third are mutual conjugates, which
    is asserted at runtime (a failure raises ConjugationBroken and signals
    a transcription error in the formula, not bad input).  alpha = 0
    reproduces the ground tomogram exactly.
    """
    alpha = complex(Coherent(alpha).alpha)
    es = epsilon(t, params)
    a, b, s2 = _frame_quantities(frame.mu, frame.nu, t, params)
    x = np.asarray(frame.x, dtype=float)
    eps, eps_c = es.eps, es.eps.conjugate()
    a_m_ib = a - 1j * b
    a_p_ib = a + 1j * b
    factor1 = (
        np.exp(-x * x / s2) / np.sqrt(math.pi * s2) * math.exp(-abs(alpha) ** 2)
    )
    factor2 = np.exp(
        -(alpha**2) * eps_c**2 * a_m_ib**2 / (2.0 * s2)
        + alpha * _SQRT2 * eps_c * x * a_m_ib / s2
    )
    factor3 = np.exp(
        -(alpha.conjugate() ** 2) * eps**2 * a_p_ib**2 / (2.0 * s2)
        + alpha.conjugate() * _SQRT2 * eps * x * a_p_ib / s2
    )
    out = _real_from_conjugate_pair(factor1 * factor2 * factor3)
    return float(out) if np.ndim(out) == 0 else out


def _real_from_conjugate_pair(values) -> np.ndarray:
    """Return the real part, requiring |Im| < 1e-9 (1 + |Re|) pointwise."""
    values = np.asarray(values)
    bad = np.abs(values.imag) >= 1e-9 * (1.0 + np.abs(values.real))
    if np.any(bad):
        worst = float(np.max(np.abs(values.imag)))
        raise ConjugationBroken(
            f"conjugate factor pair left an imaginary residue (max |Im| = {worst})"
        )
    return values.real


def tomogram(state: QuantumState, frame: TomographyFrame, t: float, params: DampingParams):
    """Analytic tomogram of either state family."""
    if isinstance(state, Fock):
        return fock_tomogram(frame, t, state.n, params)
    if isinstance(state, Coherent):
        return coherent_tomogram(frame, t, state.alpha, params)
    raise DomainError(f"unknown state {state!r}")


def _x_window(state: QuantumState, mu: float, nu: float, t: float, params: DampingParams):
    """Half-width and node count for X-integrals of a tomogram: 8 sigma
    with sigma**2 = s2/2, widened by sqrt(2n+1) for Fock n and (1+|alpha|)
    for coherent states (their Gaussian is displaced by at most
    2 |alpha| sigma)."""
    s2 = frame_scale_sq(mu, nu, t, params)
    sigma = math.sqrt(s2 / 2.0)
    if isinstance(state, Fock):
        widen = max(1.0, math.sqrt(2.0 * state.n + 1.0))
        extra = 16 * state.n
    else:
        widen = 1.0 + abs(state.alpha)
        extra = 0
    # node density must follow the widening or the Gaussian core is
    # undersampled inside the enlarged window
    points = 220 + extra + int(110.0 * (widen - 1.0))
    return 8.0 * sigma * widen, points


def normalization(state: QuantumState, mu: float, nu: float, t: float, params: DampingParams) -> float:
    """Quadrature estimate of Integral w dX for the given frame direction;
    equals 1 for every state, frame, and time."""
    half_width, points = _x_window(state, mu, nu, t, params)
    spec = QuadratureSpec(center=0.0, half_width=half_width, points=points)
    return integrate(
        lambda xs: tomogram(state, TomographyFrame(xs, mu, nu), t, params), spec
    )


def wigner_moments(state: QuantumState, t: float, params: DampingParams):
    """Phase-space mean (q, p) and symmetrized covariance of the state's
    Wigner function, in closed form.

    Every state here shares the ground-like covariance
        [[e^{-2 gamma t}, -gamma], [-gamma, e^{2 gamma t}]] / (2 Omega)
    (times 2n+1 for Fock n); coherent states displace the mean to
    (sqrt(2) Re(alpha eps*), sqrt(2) e^{2 gamma t} Re(alpha eps'*)).
    """
    es = epsilon(t, params)
    g, om = params.gamma, params.omega_reduced
    e2 = math.exp(2.0 * g * t)
    cov = np.array([[1.0 / (e2 * om), -g / om], [-g / om, e2 / om]]) / 2.0
    mean = np.zeros(2)
    if isinstance(state, Coherent):
        mean = np.array(
            [
                _SQRT2 * (state.alpha * es.eps.conjugate()).real,
                _SQRT2 * e2 * (state.alpha * es.eps_dot.conjugate()).real,
            ]
        )
    elif isinstance(state, Fock):
        cov = cov * (2.0 * state.n + 1.0)
    return mean, cov


def radon_tomogram(state: QuantumState, frame: TomographyFrame, t: float, params: DampingParams) -> float:
    """Independent oracle: the tomogram as a line integral of the Wigner
    function.

    With s = sqrt(mu**2 + nu**2) the line mu q + nu p = X is parametrized
    as (q, p) = (X/s**2)(mu, nu) + (tau/s)(-nu, mu) and

        w(X, mu, nu, t) = (1 / (2 pi s)) Integral W(line(tau)) dtau.

    The tau window is centered on the restriction of the state's Gaussian
    envelope to the line (its conditional mean) with width from the
    inverse-covariance slice, which stays correct for the strongly
    squeezed blobs that damping produces.
    """
    if not frame.is_scalar:
        raise DomainError("radon_tomogram expects a scalar frame point")
    x, mu, nu = float(frame.x), float(frame.mu), float(frame.nu)
    s = math.hypot(mu, nu)
    d = np.array([-nu / s, mu / s])
    base = np.array([x * mu / s**2, x * nu / s**2])
    mean, _ = wigner_moments(state, t, params)
    # the Gaussian *envelope* of W is the ground-like covariance for every
    # state; Fock structure on top is handled by the sqrt(2n+1) widening
    _, cov = wigner_moments(Fock(0), t, params)
    cov_inv = np.linalg.inv(cov)
    curvature = float(d @ cov_inv @ d)
    tau_center = -float(d @ cov_inv @ (base - mean)) / curvature
    sigma_slice = 1.0 / math.sqrt(curvature)
    n_fock = state.n if isinstance(state, Fock) else 0
    half_width = 9.0 * max(1.0, math.sqrt(2.0 * n_fock + 1.0)) * sigma_slice
    n_tau = 220 + 60 * n_fock
    nodes, weights = _gauss_legendre(n_tau)
    taus = tau_center + half_width * nodes
    qs = base[0] + taus * d[0]
    ps = base[1] + taus * d[1]
    line_values = wigner(qs, ps, t, state, params)
    return half_width * float(np.dot(weights, line_values)) / (2.0 * math.pi * s)
