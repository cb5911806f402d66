"""Keyhole-contour diagnostics for the rebased excess function.

The rebased excess is analytic off the cut ``(-inf, 0]``, so the Cauchy
integral over a keyhole contour — a small half circle of radius ``eps``
around the origin, two horizontal lines at ``±i*eps`` along the cut, and an
outer arc of radius ``r`` — reproduces its value at any enclosed point.  This
module evaluates the four pieces separately so the three limit claims behind
the integral representation can be watched numerically: the small arc
vanishes, the outer arc tends to the rebased arithmetic mean, and the two
lines collapse onto the cut-limit density integral.

The contour is closed approximately: the lines are truncated at ``x = -r``
and the outer arc spans the full ``(-pi, pi)``; the resulting O(eps/r)
junction mismatch is part of the reported reconstruction error and shrinks
as ``eps`` decreases and ``r`` grows.  This module validates the derivation;
production evaluation lives in :mod:`gmeanrep.representation`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .boundary import _segments_raw
from .means import Sequence, _check_cut, _check_point, _gmean_raw
from .quadrature import QuadratureSpec, integrate_near_pole

_TWO_PI_I = 2j * math.pi


class GeometryError(ValueError):
    """Raised when an evaluation point conflicts with the contour geometry."""


@dataclass(frozen=True)
class ContourSpec:
    """Keyhole geometry and discretization budget.

    ``eps`` is both the small half-circle radius and the line offset from the
    cut; ``r`` the outer radius.  ``points_per_arc`` sets the composite-Gauss
    node count on each arc; ``points_per_line`` caps the adaptive-quadrature
    evaluation budget on each horizontal line.
    """

    eps: float = 1e-3
    r: float = 1e3
    points_per_arc: int = 512
    points_per_line: int = 4096

    def __post_init__(self):
        if not (0.0 < self.eps < self.r):
            raise ValueError(f"need 0 < eps < r, got eps={self.eps}, r={self.r}")
        if self.points_per_arc < 8 or self.points_per_line < 8:
            raise ValueError("point counts must be >= 8")


@dataclass(frozen=True)
class ContourBreakdown:
    """The four contour pieces and their sum (small, outer, upper, lower)."""

    small_arc: complex
    outer_arc: complex
    upper_line: complex
    lower_line: complex
    total: complex

    def to_dict(self) -> dict:
        return {
            name: {"re": v.real, "im": v.imag}
            for name, v in (
                ("small_arc", self.small_arc),
                ("outer_arc", self.outer_arc),
                ("upper_line", self.upper_line),
                ("lower_line", self.lower_line),
                ("total", self.total),
            )
        }


_GAUSS_X, _GAUSS_W = np.polynomial.legendre.leggauss(16)


def _composite_gauss(g, lo: float, hi: float, n_points: int) -> complex:
    """Fixed composite 16-point Gauss rule with ~n_points nodes on [lo, hi].

    Gauss nodes are strictly interior, so ``g`` is never evaluated at the
    panel edges (the outer arc touches the cut at its angular endpoints).
    """
    n_panels = max(1, n_points // 16)
    edges = np.linspace(lo, hi, n_panels + 1)
    c = 0.5 * (edges[:-1] + edges[1:])
    h = 0.5 * (edges[1:] - edges[:-1])
    x = (c[:, None] + h[:, None] * _GAUSS_X[None, :]).reshape(-1)
    w = (h[:, None] * _GAUSS_W[None, :]).reshape(-1)
    return complex(np.asarray(g(x)) @ w)


def _excess_shifted_raw(shifted: tuple[float, ...], w: np.ndarray) -> np.ndarray:
    return _gmean_raw(shifted, w) - w


def small_circle_term(a: Sequence, z, eps: float, n_points: int = 512) -> complex:
    """Small-arc piece: the half circle ``eps * e^{i*theta}`` traversed from
    ``theta = pi/2`` down to ``-pi/2`` (indenting around the origin).

    Its magnitude decays like ``eps**(1 + 1/n)`` as ``eps -> 0``.
    """
    z = complex(_check_point(z))
    if not (0.0 < eps < abs(z)):
        raise GeometryError(f"need 0 < eps < |z|, got eps={eps}, |z|={abs(z)}")
    shifted = a.shifted()

    def g(theta):
        w = eps * np.exp(1j * theta)
        return (1j * w) * _excess_shifted_raw(shifted, w) / (w - z) / _TWO_PI_I

    # reversed orientation: from pi/2 to -pi/2
    return -_composite_gauss(g, -0.5 * math.pi, 0.5 * math.pi, n_points)


def big_circle_term(a: Sequence, z, r: float, n_points: int = 512) -> complex:
    """Outer-arc piece over ``theta`` in ``(-pi, pi)`` at radius ``r``.

    Converges to the arithmetic mean of the rebased entries as ``r -> inf``.
    Beyond the last entry the cut carries no jump, so over the full circle the
    integral picks out the constant Laurent coefficient exactly; the residual
    is discretization plus cancellation noise (which grows with ``r``), not a
    1/r tail.
    """
    z = complex(_check_point(z))
    if not r > abs(z):
        raise GeometryError(f"need r > |z|, got r={r}, |z|={abs(z)}")
    if not r > a.max:
        raise GeometryError(f"need r > max(a), got r={r}, max={a.max}")
    shifted = a.shifted()

    def g(theta):
        w = r * np.exp(1j * theta)
        return (1j * w) * _excess_shifted_raw(shifted, w) / (w - z) / _TWO_PI_I

    return _composite_gauss(g, -math.pi, math.pi, n_points)


def _line_quad_spec(points_per_line: int) -> QuadratureSpec:
    return QuadratureSpec(
        abs_tol=1e-11, rel_tol=1e-10, max_subdivisions=max(64, points_per_line // 30)
    )


def _line_terms(a: Sequence, z: complex, eps: float, r: float, points_per_line: int):
    """Upper and lower horizontal-line pieces, split at the cut junctions."""
    shifted = a.shifted()
    spec = _line_quad_spec(points_per_line)
    cuts = sorted({-r, 0.0} | {-s for s in shifted if 0.0 < s < r})

    def piece(sign: float) -> complex:
        offset = 1j * sign * eps

        def f(x):
            w = x + offset
            return _excess_shifted_raw(shifted, w) / (w - z) / _TWO_PI_I

        total = 0j
        for lo, hi in zip(cuts, cuts[1:]):
            total += complex(integrate_near_pole(f, lo, hi, z.real, spec).value)
        return total

    upper = piece(+1.0)          # integral from -r to 0 at +i*eps
    lower = -piece(-1.0)         # integral from 0 to -r at -i*eps
    return upper, lower


def _contour_distance(z: complex, eps: float, r: float) -> float:
    """Distance from z to the four contour pieces."""
    d_small = abs(abs(z) - eps)
    d_outer = abs(r - abs(z))
    dx = max(z.real, -r - z.real, 0.0)
    d_lines = min(math.hypot(dx, z.imag - eps), math.hypot(dx, z.imag + eps))
    return min(d_small, d_outer, d_lines)


def _check_geometry(a: Sequence, z: complex, eps: float, r: float) -> None:
    if not (eps < abs(z) < r):
        raise GeometryError(f"need eps < |z| < r, got eps={eps}, |z|={abs(z)}, r={r}")
    _check_cut(z, 0.0, "cauchy_eval")
    if z.real < 0.0 and abs(z.imag) <= eps:
        raise GeometryError("z lies inside the cut indentation strip |im z| <= eps")
    d = _contour_distance(z, eps, r)
    if not d > 0.5 * eps:
        raise GeometryError(f"z too close to the contour: distance {d} <= eps/2")


def cauchy_eval(a: Sequence, z, spec: ContourSpec | None = None) -> ContourBreakdown:
    """Cauchy-integral reconstruction of the rebased excess at ``z``.

    Evaluates the four keyhole pieces and their sum; the total converges to
    ``gmean_excess_shifted(a, z)`` as ``eps -> 0`` and ``r -> inf``.

    Raises:
        GeometryError: when ``z`` is outside the annulus ``eps < |z| < r``,
            on the cut, inside the indentation strip, or within ``eps/2`` of
            the contour.
    """
    z = complex(_check_point(z))
    if spec is None:
        spec = ContourSpec()
    _check_geometry(a, z, spec.eps, spec.r)
    small = small_circle_term(a, z, spec.eps, spec.points_per_arc)
    outer = big_circle_term(a, z, spec.r, spec.points_per_arc)
    upper, lower = _line_terms(a, z, spec.eps, spec.r, spec.points_per_line)
    total = small + outer + upper + lower
    return ContourBreakdown(small, outer, upper, lower, total)


def line_collapse_check(
    a: Sequence, z, eps: float, r: float, spec: QuadratureSpec | None = None
) -> tuple[complex, complex]:
    """The two line pieces against their collapsed cut-limit form.

    Returns ``(upper + lower, -(1/pi) * sum_l sin(l*pi/n) * int density/(t+z))``
    over the rebased segments clipped to ``[0, r]``.  The pair agrees to
    ``O(eps**(1/n))`` plus discretization error.
    """
    z = complex(_check_point(z))
    cspec = ContourSpec(eps=eps, r=r)
    _check_geometry(a, z, eps, r)
    if spec is None:
        spec = QuadratureSpec()
    upper, lower = _line_terms(a, z, eps, r, cspec.points_per_line)

    collapsed = 0j
    for seg in _segments_raw(a.shifted()):
        lo, hi = seg.lo, min(seg.hi, r)
        if lo >= hi:
            continue

        def f(t, seg=seg):
            return seg.density(t) / (t + z)

        collapsed -= seg.weight * complex(integrate_near_pole(f, lo, hi, -z.real, spec).value)
    return upper + lower, collapsed
