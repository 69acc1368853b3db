"""The Fermi-type kernel and the two meromorphic kernel sums built on it.

Two series define the same odd meromorphic function with simple poles at
i*pi*(2l+1) and residues beta(2l+1)/sqrt(2l+1):

    partial-fraction form (coefficients beta):
        N(z) = 2z sum_m beta(2m+1) / (sqrt(2m+1) (z^2 + pi^2 (2m+1)^2))

    exponential form (coefficients nu), in a half-shifted and a plain variant:
        M(z) = sum_m nu(2m+1) (1/2 - 1/(e^(z/(2m+1)) + 1))
             = -sum_m nu(2m+1) / (e^(z/(2m+1)) + 1)

The plain variant converges only because the nu series sums to zero; it is
evaluated through summation by parts with the cached partial sums
S(2m+1), which also yields a computable remainder bound

    |remainder| <= sup_{m>M} |S(2m+1)| * O(kernel variation beyond M).

The sup factor uses the table's suffix envelope inside the sieve range and
a frozen empirical constant beyond it, so these bounds are honest but not
purely analytic; reports downstream flag them as such.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .arith import ArithTable
from .errors import (DomainError, EstimationFailureError, InvalidArgumentError,
                     PoleError, TruncationBudgetError)
from .special import DEFAULT_EVAL_CONFIG
from .zeta_family import zeta_beta

__all__ = ["KernelConfig", "DEFAULT_KERNEL_CONFIG", "fermi", "fermi_deficit",
           "kernel_N", "kernel_N_series", "kernel_M", "kernel_M_prime",
           "residue_estimate", "kernel_N_with_bound", "kernel_M_with_bound",
           "nearest_pole"]

_POLE_TOL = 1e-12
_CHUNK = 1 << 17

# sup of |S(n)| beyond any table this package builds; frozen from a sieve run
# to 2e6 where the suffix envelope had decayed to 1.2e-4 (last-octave max
# 5.34e-4), decreasing steadily over every octave past 2^14.
S_TAIL_BEYOND_TABLE = 5.4e-4


@dataclass(frozen=True)
class KernelConfig:
    """Truncation depths and tolerances for the kernel sums.

    n_terms_N: number of partial-fraction terms (index m runs to this).
    n_terms_M: number of exponential-kernel terms.
    series_order_K: power-series truncation order; capped at 60 because the
        coefficients fall below double-precision underflow near |z| <= 1
        well before that.
    abel_tail_tol: stopping tolerance for the summation-by-parts remainder
        of the plain-form kernel on the real axis.
    """

    n_terms_N: int = 10 ** 6
    n_terms_M: int = 10 ** 6
    series_order_K: int = 30
    abel_tail_tol: float = 5e-8

    def __post_init__(self):
        if min(self.n_terms_N, self.n_terms_M, self.series_order_K) < 1:
            raise InvalidArgumentError("kernel truncations must be positive")
        if self.series_order_K > 60:
            raise InvalidArgumentError("series_order_K must be <= 60")
        if self.abel_tail_tol <= 0:
            raise InvalidArgumentError("abel_tail_tol must be positive")


DEFAULT_KERNEL_CONFIG = KernelConfig()


def config_for_table(table: ArithTable,
                     base: KernelConfig = DEFAULT_KERNEL_CONFIG) -> KernelConfig:
    """`base` with its truncation depths clamped to what the table can serve."""
    available = (table.limit - 1) // 2 + 1
    if base.n_terms_N <= available and base.n_terms_M <= available:
        return base
    return KernelConfig(n_terms_N=min(base.n_terms_N, available),
                        n_terms_M=min(base.n_terms_M, available),
                        series_order_K=base.series_order_K,
                        abel_tail_tol=base.abel_tail_tol)


# ---------------------------------------------------------------------------
# Fermi-type kernel 1/(e^z + 1)
# ---------------------------------------------------------------------------

def nearest_pole(z: complex) -> tuple[complex, int]:
    """The pole i*pi*(2l+1) closest to z, returned as (pole, l)."""
    z = complex(z)
    # closest odd integer to Im(z)/pi
    q = z.imag / math.pi
    odd = 2 * math.floor((q - 1) / 2) + 1
    cands = (odd, odd + 2)
    best = min(cands, key=lambda o: abs(z - 1j * math.pi * o))
    return 1j * math.pi * best, (int(best) - 1) // 2


def _check_pole(z: complex, what: str) -> complex:
    z = complex(z)
    pole, l = nearest_pole(z)
    if abs(z - pole) < _POLE_TOL:
        raise PoleError(f"{what}: z={z} is within {_POLE_TOL} of pole {pole}",
                        location=pole, index=l)
    return z


def fermi(z: complex) -> complex:
    """1/(e^z + 1), overflow-safe on the whole plane.

    Raises:
        PoleError: within 1e-12 of a pole i*pi*(2k+1).
    """
    z = _check_pole(z, "fermi")
    if z.real > 30.0:
        w = cmath.exp(-z)
        return w / (1.0 + w)
    if z.real < -30.0:
        return 1.0 / (1.0 + cmath.exp(z))
    return 1.0 / (cmath.exp(z) + 1.0)


def fermi_deficit(z: complex) -> complex:
    """1/2 - 1/(e^z + 1) = tanh(z/2)/2, exact relative accuracy near 0."""
    z = _check_pole(z, "fermi_deficit")
    return 0.5 * cmath.tanh(0.5 * z)


def _fermi_real(x: np.ndarray) -> np.ndarray:
    """Vectorized 1/(e^x + 1) on real arrays, stable in both directions."""
    e = np.exp(-np.abs(x))
    return np.where(x >= 0.0, e / (1.0 + e), 1.0 / (1.0 + e))


# ---------------------------------------------------------------------------
# per-table workspace
# ---------------------------------------------------------------------------

class _Workspace:
    """Cached per-table odd-index views used by every kernel sum."""

    def __init__(self, table: ArithTable):
        self.m_avail = (table.limit - 1) // 2  # odd numbers 1..limit -> m_avail+1 terms
        self.n_odd = np.arange(1, table.limit + 1, 2, dtype=np.float64)
        self.coef_N = table.beta[1::2].astype(np.float64) / np.sqrt(self.n_odd)
        self.nu_odd = table.nu[1::2]
        self.S_odd = table.nu_cumsum[1::2]
        self.s_tail_odd = table.s_tail_max[1::2]

    def s_sup_beyond(self, m_index: int) -> float:
        """sup |S| over m > m_index, table envelope plus frozen beyond-table cap."""
        if m_index + 1 < len(self.s_tail_odd):
            return max(float(self.s_tail_odd[m_index + 1]), S_TAIL_BEYOND_TABLE)
        return S_TAIL_BEYOND_TABLE


def _ws(table: ArithTable) -> _Workspace:
    ws = table.__dict__.get("_kernel_ws")
    if ws is None:
        ws = _Workspace(table)
        table.__dict__["_kernel_ws"] = ws
    return ws


def _terms_N(table: ArithTable, config: KernelConfig) -> int:
    ws = _ws(table)
    if ws.m_avail + 1 < config.n_terms_N:
        raise InvalidArgumentError(
            f"table limit {table.limit} supports {ws.m_avail + 1} partial-fraction "
            f"terms, config requests {config.n_terms_N} (need limit >= 2*n_terms_N+1)")
    return config.n_terms_N


# ---------------------------------------------------------------------------
# partial-fraction kernel
# ---------------------------------------------------------------------------

def kernel_N_with_bound(z: complex, table: ArithTable,
                        config: KernelConfig | None = None
                        ) -> tuple[complex, float]:
    """Truncated partial-fraction kernel and its analytic tail bound.

    The tail uses |beta(2m+1)|/sqrt(2m+1) <= 1:
        |tail| <= |2z| sum_{m>M} 1/|z^2 + pi^2 (2m+1)^2|.

    With config=None the truncation is sized to the table; an explicit
    config must satisfy table limit >= 2*n_terms_N + 1.
    """
    if config is None:
        config = config_for_table(table)
    z = _check_pole(z, "kernel_N")
    M = _terms_N(table, config)
    ws = _ws(table)
    nn = ws.n_odd[:M]
    c = ws.coef_N[:M]
    if z.imag == 0.0:
        den = z.real * z.real + (math.pi * nn) ** 2
        val = complex(2.0 * z.real * float(np.sum(c / den)))
    else:
        den = z * z + (math.pi * nn) ** 2
        val = 2.0 * z * complex(np.sum(c / den))
    # sum_{m>M} (2m+1)^-2 <= 1/(2(2M+1)); inflate while pi(2M+1) > 2|z|
    zabs = abs(z)
    edge = math.pi * (2.0 * M + 1.0)
    inflate = 1.0 / (1.0 - min(0.75, (zabs / edge) ** 2))
    bound = 2.0 * zabs / (2.0 * math.pi ** 2 * (2.0 * M + 1.0)) * inflate
    return val, bound


def kernel_N(z: complex, table: ArithTable,
             config: KernelConfig | None = None) -> complex:
    """Partial-fraction kernel N(z); odd in z, N(0) = 0."""
    return kernel_N_with_bound(z, table, config)[0]


def _kernel_N_real_array(x: np.ndarray, table: ArithTable,
                         config: KernelConfig) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized kernel_N on a real grid (no pole checks: poles are off-axis)."""
    M = _terms_N(table, config)
    ws = _ws(table)
    x = np.asarray(x, dtype=np.float64)
    acc = np.zeros_like(x)
    for lo in range(0, M, _CHUNK):
        hi = min(lo + _CHUNK, M)
        a2 = (math.pi * ws.n_odd[lo:hi]) ** 2
        c = ws.coef_N[lo:hi]
        for xb in range(0, len(x), 32):
            xe = min(xb + 32, len(x))
            den = x[xb:xe, None] ** 2 + a2[None, :]
            acc[xb:xe] += (c[None, :] / den).sum(axis=1)
    vals = 2.0 * x * acc
    bounds = 2.0 * np.abs(x) / (2.0 * math.pi ** 2 * (2.0 * M + 1.0))
    return vals, bounds


# ---------------------------------------------------------------------------
# power series of the kernel around 0
# ---------------------------------------------------------------------------

_series_coef_cache: dict[int, np.ndarray] = {}


def kernel_series_coefficients(order: int) -> np.ndarray:
    """Coefficients c_k = 2 (-1)^k pi^(-(2k+2)) zeta_beta(2k + 5/2), k <= order."""
    cached = _series_coef_cache.get(order)
    if cached is None:
        ks = np.arange(order + 1)
        cached = np.array([2.0 * (-1.0) ** k * math.pi ** (-(2 * k + 2))
                           * zeta_beta(2 * k + 2.5, DEFAULT_EVAL_CONFIG).real
                           for k in ks])
        _series_coef_cache[order] = cached
    return cached


def kernel_N_series(z: complex,
                    config: KernelConfig = DEFAULT_KERNEL_CONFIG) -> complex:
    """Power series 2 sum_k (-1)^k z^(2k+1) pi^(-(2k+2)) zeta_beta(2k+5/2).

    Raises:
        DomainError: outside the disc of convergence |z| < pi.
    """
    z = complex(z)
    if abs(z) >= math.pi:
        raise DomainError(f"kernel series requires |z| < pi, got |z|={abs(z)}")
    c = kernel_series_coefficients(config.series_order_K)
    w = z * z
    acc = 0.0 + 0.0j
    for k in range(len(c) - 1, -1, -1):
        acc = acc * w + c[k]
    return acc * z


# ---------------------------------------------------------------------------
# exponential kernel (half-shifted and plain forms)
# ---------------------------------------------------------------------------

def kernel_M_with_bound(z: complex, table: ArithTable,
                        config: KernelConfig | None = None,
                        form: str = "half-shifted") -> tuple[complex, float]:
    """Truncated exponential kernel and a summation-by-parts remainder bound.

    form="half-shifted": sum nu(2m+1) tanh(z/(2(2m+1)))/2, any z off poles.
    form="plain": S(2M+1) f(M+1) - sum_{m<=M} nu(2m+1) f(m) with
        f(m) = 1/(e^(z/(2m+1)) + 1); on real z >= 0 the sum stops early once
        the remainder bound drops below config.abel_tail_tol.
    """
    if config is None:
        config = config_for_table(table)
    z = _check_pole(z, "kernel_M")
    ws = _ws(table)
    M = min(config.n_terms_M, ws.m_avail + 1)
    if form == "half-shifted":
        nn = ws.n_odd[:M]
        if z.imag == 0.0:
            g = 0.5 * np.tanh(z.real / (2.0 * nn))
            val = complex(float(np.sum(ws.nu_odd[:M] * g)))
        else:
            g = 0.5 * np.tanh(z / (2.0 * nn))
            val = complex(np.sum(ws.nu_odd[:M] * g))
        bound = _abel_remainder_bound(z, M, ws)
        return val, bound
    if form == "plain":
        if z.imag == 0.0 and z.real >= 0.0:
            return _kernel_M_plain_real(float(z.real), table, config)
        nn = ws.n_odd[:M]
        with np.errstate(over="ignore"):  # exp overflow cleanly yields f = 0
            f = 1.0 / (np.exp(z / nn) + 1.0)
        f_next = 1.0 / (cmath.exp(z / (2.0 * M + 1.0)) + 1.0)
        val = complex(ws.S_odd[M - 1] * f_next - np.sum(ws.nu_odd[:M] * f))
        bound = _abel_remainder_bound(z, M, ws)
        return val, bound
    raise DomainError(f"unknown kernel_M form {form!r}")


def _abel_remainder_bound(z: complex, M: int, ws: _Workspace) -> float:
    # |sum_{m>=M} nu g| <= sup_{m>=M}|S| * (|g(M)| + total variation of g);
    # g ~ z/(4(2m+1)) past the truncation point, variation comparable to |g|
    g_edge = abs(z) / (4.0 * (2.0 * M + 1.0))
    return ws.s_sup_beyond(M - 1) * 3.0 * g_edge


def _kernel_M_plain_real(x: float, table: ArithTable,
                         config: KernelConfig) -> tuple[float, float]:
    """Plain form on real x >= 0, chunked with early stopping."""
    ws = _ws(table)
    M_cap = min(config.n_terms_M, ws.m_avail + 1)
    acc = 0.0
    m_done = 0
    while m_done < M_cap:
        hi = min(m_done + _CHUNK, M_cap)
        f = _fermi_real(x / ws.n_odd[m_done:hi])
        acc += float(np.sum(ws.nu_odd[m_done:hi] * f))
        m_done = hi
        # remainder bound after this chunk: monotone variation of f
        g_edge = 0.5 - float(_fermi_real(np.array([x / (2.0 * m_done + 1.0)]))[0])
        bound = 2.0 * ws.s_sup_beyond(m_done - 1) * g_edge
        if bound < config.abel_tail_tol:
            break
    f_next = float(_fermi_real(np.array([x / (2.0 * m_done + 1.0)]))[0])
    val = float(ws.S_odd[m_done - 1]) * f_next - acc
    return val, bound


def kernel_M(z: complex, table: ArithTable,
             config: KernelConfig | None = None,
             form: str = "half-shifted") -> complex:
    """Exponential kernel M(z).

    Raises:
        TruncationBudgetError: when the table is exhausted before the
            remainder bound reaches config.abel_tail_tol (plain form on the
            real axis only; elsewhere the bound is informational).
    """
    if config is None:
        config = config_for_table(table)
    val, bound = kernel_M_with_bound(z, table, config, form)
    if form == "plain" and complex(z).imag == 0.0 and complex(z).real >= 0.0 \
            and bound > config.abel_tail_tol:
        raise TruncationBudgetError(
            f"kernel_M: table exhausted at remainder bound {bound:.3e} "
            f"(> {config.abel_tail_tol:.1e}) for x={complex(z).real}",
            achieved_bound=bound)
    return val


def _kernel_M_abel_real_array(x: np.ndarray, table: ArithTable,
                              config: KernelConfig) -> tuple[np.ndarray, np.ndarray]:
    """Plain-form kernel over a real grid; per-point early stopping."""
    vals = np.empty(len(x))
    bounds = np.empty(len(x))
    for i, xi in enumerate(np.asarray(x, dtype=np.float64)):
        vals[i], bounds[i] = _kernel_M_plain_real(float(xi), table, config)
    return vals, bounds


def _kernel_M_half_real_array(x: np.ndarray, table: ArithTable,
                              config: KernelConfig) -> tuple[np.ndarray, np.ndarray]:
    """Half-shifted kernel over a real grid, chunked over the series index."""
    ws = _ws(table)
    M = min(config.n_terms_M, ws.m_avail + 1)
    x = np.asarray(x, dtype=np.float64)
    acc = np.zeros_like(x)
    for lo in range(0, M, _CHUNK):
        hi = min(lo + _CHUNK, M)
        nn = ws.n_odd[lo:hi]
        nu = ws.nu_odd[lo:hi]
        for xb in range(0, len(x), 32):
            xe = min(xb + 32, len(x))
            g = 0.5 * np.tanh(x[xb:xe, None] / (2.0 * nn[None, :]))
            acc[xb:xe] += g @ nu
    bounds = np.array([_abel_remainder_bound(complex(xi), M, ws) for xi in x])
    return acc, bounds


def kernel_M_prime(x: float, table: ArithTable,
                   config: KernelConfig | None = None) -> float:
    """Termwise derivative sum_m nu(2m+1)/(2m+1) e^w/(e^w+1)^2, w = x/(2m+1).

    Absolutely convergent; each term is evaluated in the overflow-safe
    symmetric form e^(-|w|)/(1+e^(-|w|))^2.
    """
    if config is None:
        config = config_for_table(table)
    if x < 0.0:
        raise DomainError(f"kernel_M_prime requires x >= 0, got {x}")
    ws = _ws(table)
    M = min(config.n_terms_M, ws.m_avail + 1)
    w = x / ws.n_odd[:M]
    e = np.exp(-w)  # w >= 0 here
    sig = e / (1.0 + e) ** 2
    val = float(np.sum(ws.nu_odd[:M] / ws.n_odd[:M] * sig))
    # remainder via summation by parts on phi(m) = sig/(2m+1)
    phi_edge = 0.25 / (2.0 * M + 1.0)
    bound = 3.0 * ws.s_sup_beyond(M - 1) * phi_edge
    if bound > config.abel_tail_tol:
        raise TruncationBudgetError(
            f"kernel_M_prime: remainder bound {bound:.3e} above tolerance",
            achieved_bound=bound)
    return val


# ---------------------------------------------------------------------------
# numerical residues
# ---------------------------------------------------------------------------

def residue_estimate(kernel: str, l: int, table: ArithTable,
                     config: KernelConfig | None = None) -> complex:
    """Residue of N or M at the pole i*pi*(2l+1) by Richardson extrapolation.

    Protocol: approach along the real direction with radii 2^-j, 4 <= j <= 20,
    f_j = r_j * kernel(pole + r_j); two Richardson stages cancel the linear
    and quadratic Taylor terms of (z - pole) * kernel(z).

    Raises:
        EstimationFailureError: if the extrapolated sequence has not settled.
    """
    if config is None:
        config = config_for_table(table)
    if kernel not in ("N", "M"):
        raise DomainError(f"kernel must be 'N' or 'M', got {kernel!r}")
    if l < 0:
        raise DomainError("pole index l must be >= 0")
    pole = 1j * math.pi * (2 * l + 1)
    fs = []
    for j in range(4, 21):
        r = 2.0 ** (-j)
        zj = pole + r
        if kernel == "N":
            fs.append(r * kernel_N(zj, table, config))
        else:
            fs.append(r * kernel_M(zj, table, config, form="half-shifted"))
    f = np.array(fs)
    r1 = 2.0 * f[1:] - f[:-1]
    r2 = (4.0 * r1[1:] - r1[:-1]) / 3.0
    if abs(r2[-1] - r2[-2]) > 1e-5 * max(1.0, abs(r2[-1])):
        raise EstimationFailureError(
            f"residue extrapolation did not settle for kernel {kernel}, l={l}",
            sequence=r2.tolist())
    return complex(r2[-1])
