"""Classical mode function of the damped oscillator and derived frame data.

Every time dependence in the library flows through the complex mode
function eps(t), the solution of

    eps'' + 2*gamma*eps' + eps = 0,
    eps(0) = 1/sqrt(Omega),   eps'(0) = (i*Omega - gamma)/sqrt(Omega),

with the reduced frequency Omega = sqrt(1 - gamma**2).  In closed form

    eps(t) = exp(-gamma*t) * (cos(Omega*t) + i*sin(Omega*t)) / sqrt(Omega),

so eps'(t) = (i*Omega - gamma) * eps(t).  Units are fixed to
hbar = m = omega = 1; the friction coefficient gamma is the only free
physical parameter and only the underdamped regime 0 <= gamma < 1 is
supported (Omega must be real).

Useful exact consequences used throughout:

    |eps|^2            = exp(-2*gamma*t) / Omega
    Re(eps* eps')      = -gamma * |eps|^2
    Im(eps* eps')      = exp(-2*gamma*t)        (conserved Wronskian form)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateFrame, DomainError

__all__ = [
    "DampingParams",
    "EpsilonState",
    "FrameCoeffs",
    "make_params",
    "epsilon",
    "epsilon_residual",
    "time_forward",
    "time_backward",
    "frame_coeffs",
]


@dataclass(frozen=True)
class DampingParams:
    """Friction coefficient gamma and the derived reduced frequency.

    Invariants: 0 <= gamma < 1 and omega_reduced**2 + gamma**2 = 1 to
    machine precision.  Construct via :func:`make_params`.
    """

    gamma: float
    omega_reduced: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.gamma) and 0.0 <= self.gamma < 1.0):
            raise DomainError(
                f"underdamped regime requires 0 <= gamma < 1, got {self.gamma!r}"
            )
        if abs(self.omega_reduced**2 + self.gamma**2 - 1.0) > 1e-12:
            raise DomainError("omega_reduced inconsistent with gamma")


@dataclass(frozen=True)
class EpsilonState:
    """Mode function eps and its analytic derivative at one instant."""

    t: float
    eps: complex
    eps_dot: complex


@dataclass(frozen=True)
class FrameCoeffs:
    """Damping-dressed frame coefficients (a, b).

    b equals nu / (eps eps*) exactly; a is affine in (mu, nu) at fixed t.
    At gamma = 0 they reduce to (mu, nu).
    """

    a: float
    b: float


def make_params(gamma: float) -> DampingParams:
    """Validate gamma and derive Omega = sqrt(1 - gamma**2)."""
    try:
        g = float(gamma)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"gamma must be a real number, got {gamma!r}") from exc
    if not math.isfinite(g):
        raise DomainError(f"gamma must be finite, got {g!r}")
    if g < 0.0 or g >= 1.0:
        raise DomainError(f"underdamped regime requires 0 <= gamma < 1, got {g}")
    return DampingParams(gamma=g, omega_reduced=math.sqrt(1.0 - g * g))


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


def epsilon(t: float, params: DampingParams) -> EpsilonState:
    """Evaluate the closed-form mode function and its derivative at time t.

    The derivative is obtained analytically, eps' = (i*Omega - gamma)*eps,
    never by numerical differentiation; at t = 0 the initial data
    (1/sqrt(Omega), (i*Omega - gamma)/sqrt(Omega)) is reproduced exactly.
    """
    t = _require_finite("t", t)
    g, om = params.gamma, params.omega_reduced
    eps = (
        math.exp(-g * t)
        * complex(math.cos(om * t), math.sin(om * t))
        / math.sqrt(om)
    )
    return EpsilonState(t=t, eps=eps, eps_dot=complex(-g, om) * eps)


def epsilon_residual(t: float, params: DampingParams) -> float:
    """|eps'' + 2*gamma*eps' + eps| with eps'' in closed form.

    eps'' = (i*Omega - gamma)**2 * eps; the residual is pure rounding noise
    and must stay below 1e-10 on the whole supported domain.
    """
    es = epsilon(t, params)
    lam = complex(-params.gamma, params.omega_reduced)
    eps_ddot = lam * lam * es.eps
    return abs(eps_ddot + 2.0 * params.gamma * es.eps_dot + es.eps)


def time_forward(t: float, gamma: float) -> float:
    """Reparameterized time t' = (1 - exp(-2*gamma*t)) / (2*gamma).

    gamma = 0 is handled as an exact identity branch (the removable limit),
    not by thresholded division.
    """
    t = _require_finite("t", t)
    gamma = _require_finite("gamma", gamma)
    if gamma < 0.0 or gamma >= 1.0:
        raise DomainError(f"underdamped regime requires 0 <= gamma < 1, got {gamma}")
    if gamma == 0.0:
        return t
    return -math.expm1(-2.0 * gamma * t) / (2.0 * gamma)


def time_backward(t_prime: float, gamma: float) -> float:
    """Inverse map t = -ln(1 - 2*gamma*t') / (2*gamma).

    The forward map only reaches t' < 1/(2*gamma); outside that image the
    logarithm has no real branch and a DomainError is raised.
    """
    t_prime = _require_finite("t_prime", t_prime)
    gamma = _require_finite("gamma", gamma)
    if gamma < 0.0 or gamma >= 1.0:
        raise DomainError(f"underdamped regime requires 0 <= gamma < 1, got {gamma}")
    if gamma == 0.0:
        return t_prime
    x = 2.0 * gamma * t_prime
    if x >= 1.0:
        raise DomainError(
            f"t_prime={t_prime} outside the image of the forward map "
            f"[0, 1/(2*gamma)) = [0, {1.0 / (2.0 * gamma)})"
        )
    return -math.log1p(-x) / (2.0 * gamma)


def frame_coeffs(mu: float, nu: float, t: float, params: DampingParams) -> FrameCoeffs:
    """Frame coefficients a, b of the (mu, nu) quadrature at time t.

        a = exp(2*gamma*t) * nu * (eps* eps' + eps eps'*) / (2 eps eps*) + mu
        b = nu / (eps eps*)

    Both are assembled from manifestly real bilinears of eps, so the
    results are exactly real.
    """
    mu = _require_finite("mu", mu)
    nu = _require_finite("nu", nu)
    if mu == 0.0 and nu == 0.0:
        raise DegenerateFrame("frame direction (mu, nu) = (0, 0) is degenerate")
    es = epsilon(t, params)
    ee = (es.eps * es.eps.conjugate()).real
    re = (es.eps.conjugate() * es.eps_dot).real  # (eps* eps' + eps eps'*)/2
    a = math.exp(2.0 * params.gamma * t) * nu * re / ee + mu
    b = nu / ee
    return FrameCoeffs(a=a, b=b)
