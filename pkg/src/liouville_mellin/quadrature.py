"""Semi-infinite quadrature for kernel Mellin integrals.

The target objects are

    integral_0^inf f(x) x^(s-1/2) dx,    -3/2 < Re s < 1/2,

for kernel integrands that vanish linearly at 0 and decay like 1/x at
infinity, plus the classical calibration integral

    Gamma(s) eta(s) = integral_0^inf t^(s-1) / (e^t + 1) dt.

Scheme: a tanh-sinh (double-exponential) rule on (0, split_point], which
absorbs the algebraic endpoint behavior x^(Re s + 1/2) without any explicit
singularity subtraction, followed by geometrically growing Gauss-Legendre
panels.  Panel widths are additionally capped so the log-oscillation of
x^(i Im s) stays below pi/4 per panel.  Panels stop once a panel contributes
less than tail_stop_rel of the accumulated integral, or once the trusted
range max_x is reached, in which case the discarded tail is bounded
analytically with the supplied decay envelope |f(x)| <= decay_const * x^(-decay_power).

Node positions depend only on the spec, never on s or the integrand, so
integrand evaluations can be memoized across a grid of s values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidArgumentError, NonConvergenceError

__all__ = ["QuadratureSpec", "IntegralResult", "integrate_mellin",
           "integrate_gamma_zeta_a", "de_nodes", "panel_sequence"]

_DE_TMAX = 4.6  # transformed-tail suppression e^{-(1+a) pi sinh(tmax)} <= 1e-16 for a >= -3/4


@dataclass(frozen=True)
class QuadratureSpec:
    """Node layout and tail policy for the semi-infinite integrals.

    split_point: boundary between the singular-endpoint rule and the panels.
    de_levels: tanh-sinh refinement; the step is h = 2^-de_levels.
    panel_growth: geometric growth factor of panel widths (> 1).
    panel_nodes: Gauss-Legendre order per panel.
    tail_stop_rel: stop once a panel contributes less than this fraction.
    max_panels: hard cap on the number of panels.
    max_x: trusted upper edge; beyond it the decay envelope takes over.
    decay_const / decay_power: envelope |f(x)| <= decay_const * x^-decay_power
        used to bound the discarded tail (None disables the envelope).
    """

    split_point: float = 1.0
    de_levels: int = 5
    panel_growth: float = 2.0
    panel_nodes: int = 32
    tail_stop_rel: float = 1e-9
    max_panels: int = 60
    max_x: float = math.inf
    decay_const: float | None = None
    decay_power: float = 1.0

    def __post_init__(self):
        if self.split_point <= 0 or self.de_levels < 1 or self.panel_nodes < 2:
            raise InvalidArgumentError("bad quadrature spec: positive split/levels/nodes required")
        if self.panel_growth <= 1.0:
            raise InvalidArgumentError("panel_growth must exceed 1")
        if self.tail_stop_rel <= 0 or self.max_panels < 1:
            raise InvalidArgumentError("tail_stop_rel and max_panels must be positive")
        if self.max_x <= self.split_point:
            raise InvalidArgumentError("max_x must exceed split_point")


@dataclass
class IntegralResult:
    """Value plus an error budget: rule error estimate, analytic tail bound."""

    value: complex
    est_error: float
    tail_bound: float
    panels_used: int


def de_nodes(a: float, levels: int) -> tuple[np.ndarray, np.ndarray]:
    """tanh-sinh nodes and weights on (0, a), step h = 2^-levels.

    The map is x = a * logistic(pi sinh t); x is computed from the nearer
    endpoint so nodes deep in the singular corner never cancel to 0.
    """
    h = 2.0 ** (-levels)
    t = np.arange(-_DE_TMAX, _DE_TMAX + h / 2, h)
    u = 0.5 * math.pi * np.sinh(t)
    e = np.exp(-2.0 * np.abs(u))
    near = a * e / (1.0 + e)            # distance to the nearer endpoint
    x = np.where(u < 0, near, a - near)
    sech2 = 4.0 * e / (1.0 + e) ** 2
    w = 0.5 * a * (0.5 * math.pi) * np.cosh(t) * sech2 * h
    good = (x > 0.0) & (x < a) & (w > 0.0) & np.isfinite(w)
    return x[good], w[good]


_leggauss_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _leggauss(n: int) -> tuple[np.ndarray, np.ndarray]:
    if n not in _leggauss_cache:
        _leggauss_cache[n] = np.polynomial.legendre.leggauss(n)
    return _leggauss_cache[n]


def panel_sequence(spec: QuadratureSpec, im_s: float = 0.0):
    """Yield (a, b) panel edges: geometric growth, oscillation-capped width."""
    ratio_cap = math.inf
    if abs(im_s) > 1e-12:
        ratio_cap = math.exp((math.pi / 4.0) / abs(im_s))
    a = spec.split_point
    for _ in range(spec.max_panels):
        b = min(a * spec.panel_growth, a * ratio_cap, spec.max_x)
        yield a, b
        if b >= spec.max_x:
            return
        a = b


def _panel_xw(a: float, b: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    xg, wg = _leggauss(n)
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    return mid + half * xg, half * wg


def integrate_mellin(integrand, s: complex, spec: QuadratureSpec) -> IntegralResult:
    """integral_0^inf f(x) x^(s-1/2) dx for a kernel-type integrand.

    `integrand(x_array) -> (values, truncation_bounds)` must be pure and
    expose a per-point bound on its own series-truncation error; those
    bounds are folded into est_error with the quadrature weights.

    Raises:
        DomainError: outside the strip -3/2 < Re s < 1/2.
        NonConvergenceError: max_panels exhausted before either the
            tail_stop_rel criterion or the max_x envelope policy applied
            (the partial result rides on the exception).
    """
    s = complex(s)
    if not -1.5 < s.real < 0.5:
        raise DomainError(f"integrate_mellin requires -3/2 < Re s < 1/2, got {s}")
    expo = s - 0.5

    # singular-endpoint region, with an embedded coarse rule for the estimate
    x0, w0 = de_nodes(spec.split_point, spec.de_levels)
    f0, b0 = integrand(x0)
    wt0 = x0 ** expo
    fine = np.sum(f0 * wt0 * w0)
    xc, wc = de_nodes(spec.split_point, spec.de_levels - 1)
    fc, _ = integrand(xc)
    coarse = np.sum(fc * xc ** expo * wc)
    est = abs(fine - coarse)
    est += float(np.sum(np.abs(wt0) * w0 * b0))
    # mass cut off below the smallest node, using near-0 linearity of f
    x_min = float(x0.min())
    slope = abs(f0[np.argmin(x0)]) / x_min
    est += 1.5 * slope * x_min ** (s.real + 1.5) / (s.real + 1.5)
    total = fine

    tail_bound = 0.0
    panels = 0
    converged = False
    nsub = max(2, spec.panel_nodes // 2)
    for a, b in panel_sequence(spec, s.imag):
        xp, wp = _panel_xw(a, b, spec.panel_nodes)
        fp, bp = integrand(xp)
        wtp = xp ** expo
        contrib = np.sum(fp * wtp * wp)
        xq, wq = _panel_xw(a, b, nsub)
        fq, _ = integrand(xq)
        embedded = np.sum(fq * xq ** expo * wq)
        est += abs(contrib - embedded)
        est += float(np.sum(np.abs(wtp) * wp * bp))
        total += contrib
        panels += 1
        if abs(contrib) < spec.tail_stop_rel * max(abs(total), 1e-300):
            tail_bound = _envelope_tail(spec, s.real, b, fallback=abs(contrib))
            converged = True
            break
        if b >= spec.max_x:
            if spec.decay_const is None:
                break  # no envelope: fall through to the non-convergence error
            tail_bound = _envelope_tail(spec, s.real, b, fallback=None)
            converged = True
            break
    result = IntegralResult(value=complex(total), est_error=float(est),
                            tail_bound=float(tail_bound), panels_used=panels)
    if not converged:
        raise NonConvergenceError(
            f"integrate_mellin: no tail criterion met after {panels} panels",
            partial=result)
    return result


def _envelope_tail(spec: QuadratureSpec, sigma: float, edge: float,
                   fallback: float | None) -> float:
    """Bound on integral_edge^inf |f| x^(sigma-1/2) dx from the decay envelope."""
    if spec.decay_const is not None:
        p = spec.decay_power - sigma - 0.5
        if p <= 0:
            raise DomainError("decay envelope too weak for this sigma")
        return spec.decay_const * edge ** (-p) / p
    return fallback if fallback is not None else 0.0


def integrate_gamma_zeta_a(s: complex, spec: QuadratureSpec) -> IntegralResult:
    """integral_0^inf t^(s-1)/(e^t+1) dt, to compare against Gamma(s) eta(s).

    Re s > 0 uses the kernel as is.  For -1 < Re s < 0 the continued form is
    used: the kernel is replaced by 1/(e^t+1) - 1/2 on (0, split_point], the
    plain kernel is kept on the exponentially decaying far side, and the
    compensating term split^s/(2 s) is added in closed form.

    Raises:
        DomainError: for Re s <= -1, Re s = 0, or s = 0.
    """
    s = complex(s)
    subtracted = False
    if s.real <= 0.0:
        if not -1.0 < s.real < 0.0:
            raise DomainError(f"integrate_gamma_zeta_a needs Re s > 0 or -1 < Re s < 0, got {s}")
        subtracted = True
    expo = s - 1.0

    def fermi_arr(t):
        e = np.exp(-np.abs(t))
        return np.where(t >= 0, e / (1.0 + e), 1.0 / (1.0 + e))

    if subtracted:
        near = lambda t: fermi_arr(t) - 0.5   # ~ -t/4 near 0
    else:
        near = fermi_arr

    x0, w0 = de_nodes(spec.split_point, spec.de_levels)
    fine = np.sum(near(x0) * x0 ** expo * w0)
    xc, wc = de_nodes(spec.split_point, spec.de_levels - 1)
    coarse = np.sum(near(xc) * xc ** expo * wc)
    est = abs(fine - coarse)
    x_min = float(x0.min())
    if subtracted:
        est += 0.375 * x_min ** (s.real + 1.0) / (s.real + 1.0)
    else:
        est += 0.75 * x_min ** s.real / max(s.real, 1e-300)
    total = fine

    panels = 0
    tail_bound = 0.0
    converged = False
    nsub = max(2, spec.panel_nodes // 2)
    for a, b in panel_sequence(spec, s.imag):
        xp, wp = _panel_xw(a, b, spec.panel_nodes)
        contrib = np.sum(fermi_arr(xp) * xp ** expo * wp)
        xq, wq = _panel_xw(a, b, nsub)
        est += abs(contrib - np.sum(fermi_arr(xq) * xq ** expo * wq))
        total += contrib
        panels += 1
        if abs(contrib) < spec.tail_stop_rel * max(abs(total), 1e-300):
            # kernel < e^-a out here: exponential tail bound
            tail_bound = math.exp(-b) * 2.0 * b ** (s.real - 1.0) if b > abs(s) else abs(contrib)
            converged = True
            break
    if subtracted:
        total += spec.split_point ** s / (2.0 * s)
    result = IntegralResult(value=complex(total), est_error=float(est),
                            tail_bound=float(tail_bound), panels_used=panels)
    if not converged:
        raise NonConvergenceError(
            f"integrate_gamma_zeta_a: tail not reached after {panels} panels",
            partial=result)
    return result
