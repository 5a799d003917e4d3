"""Shared numerical kernels: Hermite polynomials, quadrature, finite
differences, and the rectangular grid container used for all file output.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import DomainError, NonFinite

__all__ = [
    "QuadratureSpec",
    "Axis",
    "ScalarGrid",
    "hermite",
    "hermite_gauss",
    "integrate",
    "central_diff",
]

_MAX_HERMITE = 64
# rescale before mantissas reach the overflow range when accumulating
# H_n together with its Gaussian weight
_RESCALE_LIMIT = 1e120


def hermite(n: int, x):
    """Physicists' Hermite polynomial H_n(x) via the three-term recurrence.

    H_0 = 1, H_1 = 2x, H_{k+1} = 2x H_k - 2k H_{k-1}.  Accepts a scalar or
    ndarray argument.  n > 64 is rejected: bare H_n values overflow the
    double range too easily beyond that; use :func:`hermite_gauss` for
    Gaussian-weighted evaluation.
    """
    n = _check_hermite_order(n)
    xa = np.asarray(x, dtype=float)
    scalar = xa.ndim == 0
    h_prev = np.ones_like(xa)
    if n == 0:
        return float(h_prev) if scalar else h_prev
    h = 2.0 * xa
    for k in range(1, n):
        h, h_prev = 2.0 * xa * h - 2.0 * k * h_prev, h
    return float(h) if scalar else h


def hermite_gauss(n: int, x):
    """Gaussian-weighted Hermite function H_n(x) * exp(-x**2 / 2).

    The recurrence is accumulated with periodic rescaling (mantissa plus a
    log-offset) so the polynomial can never overflow before the Gaussian
    factor is applied; the weighted product itself is bounded.
    """
    n = _check_hermite_order(n)
    xa = np.asarray(x, dtype=float)
    scalar = xa.ndim == 0
    xa = np.atleast_1d(xa)
    m_prev = np.ones_like(xa)
    log_offset = np.zeros_like(xa)
    if n == 0:
        out = np.exp(-0.5 * xa * xa)
    else:
        m = 2.0 * xa
        for k in range(1, n):
            m, m_prev = 2.0 * xa * m - 2.0 * k * m_prev, m
            big = np.abs(m) > _RESCALE_LIMIT
            if np.any(big):
                f = np.where(big, np.abs(m), 1.0)
                m = m / f
                m_prev = m_prev / f
                log_offset = log_offset + np.log(f)
        out = m * np.exp(log_offset - 0.5 * xa * xa)
    return float(out[0]) if scalar else out


def _check_hermite_order(n) -> int:
    if not isinstance(n, (int, np.integer)):
        raise DomainError(f"Hermite order must be an integer, got {n!r}")
    if n < 0:
        raise DomainError(f"Hermite order must be nonnegative, got {n}")
    if n > _MAX_HERMITE:
        raise DomainError(f"Hermite order {n} exceeds the overflow guard {_MAX_HERMITE}")
    return int(n)


@dataclass(frozen=True)
class QuadratureSpec:
    """Integration window [center - half_width, center + half_width] and
    the number of Gauss-Legendre nodes to place on it."""

    center: float
    half_width: float
    points: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.center) and math.isfinite(self.half_width)):
            raise DomainError("quadrature window must be finite")
        if self.half_width <= 0.0:
            raise DomainError(f"half_width must be positive, got {self.half_width}")
        if self.points < 16:
            raise DomainError(f"at least 16 quadrature points required, got {self.points}")


@lru_cache(maxsize=128)
def _gauss_legendre(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def integrate(f: Callable, spec: QuadratureSpec):
    """Gauss-Legendre estimate of the integral of f over the window.

    f must be vectorized (called once with the full node array) and may
    return real or complex values.  For Gaussian-tailed integrands with
    half_width >= 8 sigma, doubling `points` moves the result by < 1e-10.
    """
    nodes, weights = _gauss_legendre(spec.points)
    xs = spec.center + spec.half_width * nodes
    ys = np.asarray(f(xs))
    if ys.shape != xs.shape:
        raise DomainError("integrand must return one value per node")
    if not np.all(np.isfinite(ys)):
        raise NonFinite("integrand returned non-finite values inside the window")
    total = spec.half_width * np.dot(weights, ys)
    return complex(total) if np.iscomplexobj(ys) else float(total)


def central_diff(f: Callable, x: float, h: float, order: int = 1) -> float:
    """Central finite difference of f at x with step h (O(h**2) truncation).

    order=1: (f(x+h) - f(x-h)) / (2h)
    order=2: (f(x+h) - 2 f(x) + f(x-h)) / h**2
    """
    if not (math.isfinite(h) and h > 0.0):
        raise DomainError(f"step h must be positive and finite, got {h}")
    if order == 1:
        return (f(x + h) - f(x - h)) / (2.0 * h)
    if order == 2:
        return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
    raise DomainError(f"derivative order must be 1 or 2, got {order}")


_FMT = "%.17g"  # 17 significant digits round-trip binary doubles exactly


def _fmt(x: float) -> str:
    return _FMT % float(x)


@dataclass(frozen=True)
class Axis:
    """A named, uniformly spaced, strictly increasing sample axis."""

    name: str
    values: np.ndarray

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=float)
        if vals.ndim != 1 or vals.size < 1:
            raise DomainError(f"axis {self.name!r} must be a nonempty 1-D array")
        if not np.all(np.isfinite(vals)):
            raise DomainError(f"axis {self.name!r} contains non-finite values")
        if vals.size > 1:
            d = np.diff(vals)
            if np.any(d <= 0.0):
                raise DomainError(f"axis {self.name!r} must be strictly increasing")
            step = d[0]
            if np.any(np.abs(d - step) > 1e-12 * abs(step)):
                raise DomainError(f"axis {self.name!r} is not uniformly spaced")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True)
class ScalarGrid:
    """Real-valued samples over one or two uniform axes plus metadata.

    values are stored row-major with axis1 as the outer (slowest) index:
    shape (len(axis1),) for one axis, (len(axis1), len(axis2)) for two.
    meta maps string keys to string values and travels with every output
    format.
    """

    axis1: Axis
    values: np.ndarray
    axis2: Axis | None = None
    meta: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=float)
        expected = (len(self.axis1),) if self.axis2 is None else (
            len(self.axis1),
            len(self.axis2),
        )
        if vals.shape != expected:
            raise DomainError(
                f"values shape {vals.shape} does not match axes {expected}"
            )
        object.__setattr__(self, "values", vals)
        object.__setattr__(
            self, "meta", {str(k): str(v) for k, v in self.meta.items()}
        )

    # ------------------------------------------------------------------ CSV

    def to_csv(self) -> str:
        """Serialize as '#'-commented metadata, a header row, then long-form
        rows (axis1[, axis2], value), all numbers with 17 significant digits."""
        lines = [f"# {k}={v}" for k, v in self.meta.items()]
        if self.axis2 is None:
            lines.append(f"{self.axis1.name},value")
            for a, v in zip(self.axis1.values, self.values):
                lines.append(f"{_fmt(a)},{_fmt(v)}")
        else:
            lines.append(f"{self.axis1.name},{self.axis2.name},value")
            for i, a in enumerate(self.axis1.values):
                for j, b in enumerate(self.axis2.values):
                    lines.append(f"{_fmt(a)},{_fmt(b)},{_fmt(self.values[i, j])}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "ScalarGrid":
        meta: dict[str, str] = {}
        rows: list[list[str]] = []
        header: list[str] | None = None
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition("=")
                meta[key.strip()] = value
                continue
            if header is None:
                header = [c.strip() for c in line.split(",")]
                continue
            rows.append(line.split(","))
        if header is None or not rows:
            raise DomainError("CSV text contains no data rows")
        if len(header) == 2:
            ax1 = Axis(header[0], np.array([float(r[0]) for r in rows]))
            values = np.array([float(r[1]) for r in rows])
            return cls(axis1=ax1, values=values, meta=meta)
        if len(header) != 3:
            raise DomainError(f"expected 2 or 3 CSV columns, got {len(header)}")
        col1 = [float(r[0]) for r in rows]
        col2 = [float(r[1]) for r in rows]
        vals = [float(r[2]) for r in rows]
        ax1_vals = list(dict.fromkeys(col1))
        ax2_vals = list(dict.fromkeys(col2))
        n1, n2 = len(ax1_vals), len(ax2_vals)
        if n1 * n2 != len(rows):
            raise DomainError("CSV rows do not form a complete rectangular grid")
        values = np.array(vals).reshape(n1, n2)
        return cls(
            axis1=Axis(header[0], np.array(ax1_vals)),
            axis2=Axis(header[1], np.array(ax2_vals)),
            values=values,
            meta=meta,
        )

    # ----------------------------------------------------------------- JSON

    def to_json(self) -> str:
        payload = {
            "meta": self.meta,
            "axis1": {"name": self.axis1.name, "values": self.axis1.values.tolist()},
            "axis2": None
            if self.axis2 is None
            else {"name": self.axis2.name, "values": self.axis2.values.tolist()},
            "values": self.values.reshape(-1).tolist(),
        }
        return json.dumps(payload, indent=None, separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ScalarGrid":
        payload = json.loads(text)
        ax1 = Axis(payload["axis1"]["name"], np.array(payload["axis1"]["values"]))
        ax2 = None
        if payload.get("axis2") is not None:
            ax2 = Axis(payload["axis2"]["name"], np.array(payload["axis2"]["values"]))
        shape = (len(ax1),) if ax2 is None else (len(ax1), len(ax2))
        values = np.array(payload["values"], dtype=float).reshape(shape)
        return cls(axis1=ax1, axis2=ax2, values=values, meta=payload.get("meta", {}))
