"""Boundary-quadrature integral means and the recursive derivative-space norms.

Norm evaluation never searches over radii: a stored series is a polynomial,
continuous up to the closed disk, and its integral means are nondecreasing
in the radius, so the boundary radius r = 1 realises the sup.  Every norm
call still checks that monotonicity on a three-point radius grid as a
sanity assertion on the quadrature itself.

Quadrature modes:

``parseval``
    p = 2 only; the mean is the coefficient sum ``sum |c_k|^2 r^(2k)``.
``power-trick``
    even integer p; reduces to the Parseval sum of ``f**(p/2)``.
``trapezoid``
    any p >= 1; uniform boundary samples via FFT.  For trigonometric
    polynomials the uniform trapezoid rule is exact once the node count
    exceeds the top frequency, so the node count is silently raised to at
    least ``4 * (order + 1)``.
``auto``
    picks the first applicable mode in the order above.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .series import TaylorSeries, derivative, evaluate

__all__ = [
    "SpaceParams",
    "QuadratureConfig",
    "boundary_values",
    "boundary_scale",
    "integral_mean",
    "hp_norm",
    "sn_norm",
    "sn_norm_unrolled",
    "derivative_sum_norm",
    "sup_sum_norm",
    "sup_norm",
    "hardy_sum",
]

_MODES = ("auto", "parseval", "power-trick", "trapezoid")
_SANITY_RADII = (0.5, 0.75, 1.0)
_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SpaceParams:
    """Space selector (n, p): functions whose n-th derivative lies in H^p."""

    n: int
    p: float

    def __post_init__(self):
        if self.n != int(self.n) or self.n < 0:
            raise ValueError(
                f"derivative depth n must be a non-negative integer, got {self.n}"
            )
        if not (self.p >= 1 and math.isfinite(self.p)):
            raise ValueError(f"exponent p must satisfy 1 <= p < inf, got {self.p}")


@dataclass(frozen=True)
class QuadratureConfig:
    """Boundary quadrature knobs.

    ``num_points`` is a floor request, not an exact count: quadrature
    oversamples to at least ``4 * (order + 1)`` nodes so the configured
    count can never undersample the integrand.
    """

    num_points: int = 4096
    radius: float = 1.0
    mode: str = "auto"

    def __post_init__(self):
        if self.num_points < 4:
            raise ValueError(f"num_points must be at least 4, got {self.num_points}")
        if not 0 < self.radius <= 1:
            raise ValueError(f"radius must lie in (0, 1], got {self.radius}")
        if self.mode not in _MODES:
            raise ValueError(f"mode must be one of {_MODES}, got {self.mode!r}")


def _effective_points(f, requested):
    return max(int(requested), 4 * (f.order + 1))


def boundary_values(f, num_points, radius=1.0):
    """Values of f at ``num_points`` uniform samples of the circle |z| = radius.

    FFT-based: the j-th entry is ``f(radius * exp(2j*pi*1j*j/num_points))``.
    Sampling a degree-N polynomial needs ``num_points >= N + 1``.
    """
    c = np.asarray([complex(x) for x in f.coeffs], dtype=complex)
    if num_points < c.size:
        raise ValueError(
            f"need at least order+1 = {c.size} sample points, got {num_points}"
        )
    if radius != 1.0:
        c = c * radius ** np.arange(c.size)
    buf = np.zeros(int(num_points), dtype=complex)
    buf[: c.size] = c
    return np.fft.ifft(buf) * int(num_points)


def boundary_scale(f, num_points=None):
    """Max of |f| over boundary samples; 0.0 for the zero series.

    Used as the natural magnitude reference when a residual has to be
    compared scale-free against f itself.
    """
    if f.is_zero:
        return 0.0
    m = int(num_points) if num_points else max(256, 4 * (f.order + 1))
    return float(np.max(np.abs(boundary_values(f, m))))


def _check_exponent(p):
    if not (p >= 1 and math.isfinite(p)):
        raise ValueError(f"exponent p must satisfy 1 <= p < inf, got {p}")


def _resolve_mode(p, mode):
    if mode == "auto":
        if p == 2:
            return "parseval"
        if float(p).is_integer() and int(p) % 2 == 0:
            return "power-trick"
        return "trapezoid"
    if mode == "parseval" and p != 2:
        raise ValueError("parseval mode is only valid for p = 2")
    if mode == "power-trick" and not (float(p).is_integer() and int(p) % 2 == 0):
        raise ValueError("power-trick mode needs an even integer exponent")
    return mode


def _parseval_mean(f, r):
    c = np.abs(np.asarray([complex(x) for x in f.coeffs], dtype=complex))
    weights = 1.0 if r == 1.0 else r ** (2.0 * np.arange(c.size))
    return math.sqrt(float(np.sum(c * c * weights)))


def _even_power_mean(f, p, r):
    half = int(p) // 2
    c = np.asarray([complex(x) for x in f.coeffs], dtype=complex)
    g = c
    for _ in range(half - 1):
        g = np.convolve(g, c)
    mag = np.abs(g)
    weights = 1.0 if r == 1.0 else r ** (2.0 * np.arange(g.size))
    return float(np.sum(mag * mag * weights)) ** (1.0 / p)


def _trapezoid_mean(f, p, r, num_points):
    vals = boundary_values(f, _effective_points(f, num_points), r)
    return float(np.mean(np.abs(vals) ** p)) ** (1.0 / p)


def integral_mean(f, p, r=None, cfg=None):
    """The p-th integral mean of f on the circle of radius r.

    Parameters
    ----------
    f : TaylorSeries
    p : float
        Exponent, 1 <= p < inf.
    r : float, optional
        Radius in (0, 1]; defaults to ``cfg.radius``.
    cfg : QuadratureConfig, optional

    Returns
    -------
    float
        ``( (1/2pi) * integral |f(r e^{i t})|^p dt )^(1/p)``.
    """
    cfg = cfg if cfg is not None else QuadratureConfig()
    if r is None:
        r = cfg.radius
    _check_exponent(p)
    if not 0 < r <= 1:
        raise ValueError(f"radius must lie in (0, 1], got {r}")
    mode = _resolve_mode(p, cfg.mode)
    if mode == "parseval":
        return _parseval_mean(f, r)
    if mode == "power-trick":
        return _even_power_mean(f, p, r)
    return _trapezoid_mean(f, p, r, cfg.num_points)


def hp_norm(f, p, cfg=None):
    """The H^p norm of the stored polynomial.

    Returns the boundary integral mean, after asserting that the means on
    the radius grid (0.5, 0.75, 1.0) are nondecreasing; a violation means
    the quadrature itself is broken and raises RuntimeError.
    """
    cfg = cfg if cfg is not None else QuadratureConfig()
    means = [integral_mean(f, p, r, cfg) for r in _SANITY_RADII]
    for lo, hi in zip(means, means[1:]):
        if lo > hi + 1e-12 * max(1.0, hi):
            raise RuntimeError(
                f"integral means {means} are not nondecreasing in the radius"
            )
    return means[-1]


def sn_norm(f, params, cfg=None):
    """Recursive derivative-space norm: ``|f(0)| + norm(f', n-1)``, base H^p."""
    if params.n == 0:
        return hp_norm(f, params.p, cfg)
    tail = sn_norm(derivative(f, 1), SpaceParams(params.n - 1, params.p), cfg)
    return abs(complex(f.coeffs[0])) + tail


def sn_norm_unrolled(f, params, cfg=None):
    """Unrolled form: ``sum_{k<n} |f^(k)(0)| + hp_norm(f^(n))``.

    Agrees with :func:`sn_norm` up to float summation order.
    """
    heads = math.fsum(
        abs(complex(derivative(f, k).coeffs[0])) for k in range(params.n)
    )
    return heads + hp_norm(derivative(f, params.n), params.p, cfg)


def derivative_sum_norm(f, params, cfg=None):
    """Equivalent norm: sum of the H^p norms of the first n+1 derivatives."""
    return math.fsum(
        hp_norm(derivative(f, k), params.p, cfg) for k in range(params.n + 1)
    )


def sup_sum_norm(f, params, cfg=None):
    """Equivalent norm: boundary sups of the first n derivatives plus the
    H^p norm of the n-th."""
    total = math.fsum(sup_norm(derivative(f, k), cfg) for k in range(params.n))
    return total + hp_norm(derivative(f, params.n), params.p, cfg)


_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_max(fn, lo, hi, iterations=60):
    a, b = lo, hi
    c = b - _INV_GOLDEN * (b - a)
    d = a + _INV_GOLDEN * (b - a)
    fc, fd = fn(c), fn(d)
    for _ in range(iterations):
        if fc < fd:
            a, c, fc = c, d, fd
            d = a + _INV_GOLDEN * (b - a)
            fd = fn(d)
        else:
            b, d, fd = d, c, fc
            c = b - _INV_GOLDEN * (b - a)
            fc = fn(c)
    return max(fc, fd)


def sup_norm(f, cfg=None):
    """Boundary sup of |f|: dense sampling plus one golden-section polish.

    The maximum principle puts the sup of a polynomial over the closed disk
    on the boundary circle.
    """
    cfg = cfg if cfg is not None else QuadratureConfig()
    if f.is_zero:
        return 0.0
    m = _effective_points(f, cfg.num_points)
    vals = np.abs(boundary_values(f, m))
    j = int(np.argmax(vals))
    theta = _TWO_PI * j / m
    delta = _TWO_PI / m
    polished = _golden_max(
        lambda t: abs(complex(evaluate(f, cmath.exp(1j * t)))),
        theta - delta,
        theta + delta,
    )
    return max(float(vals[j]), polished)


def hardy_sum(f):
    """``sum |c_k| / (k+1)``: the coefficient side of the classical H^1
    coefficient inequality (bounded by pi times the H^1 norm)."""
    return math.fsum(abs(c) / (k + 1) for k, c in enumerate(f.coeffs))
