"""Derived Dirichlet functions and their functional equations.

All family members are closed-form combinations of zeta, eta and Gamma:

    zeta_imp(s)    = (1 - 2^-s) zeta(s)            (odd-integer zeta)
    zeta_lambda(s) = zeta(2s) / zeta(s)            (Liouville coefficients)
    zeta_mu(s)     = 1 / zeta(s)                   (Moebius coefficients)
    zeta_alpha(s)  = eta(2s) / eta(s)
    zeta_beta(s)   = zeta_imp(2s-1) / zeta_imp(s)  (beta coefficients)
    zeta_nu(s)     = zeta_beta(s+3/2) / zeta_imp(s+1)

None of them is ever computed from its own truncated Dirichlet series here;
table-backed partial sums exist only as verification oracles in the test
suite and harness.

Near-zero denominators raise instead of returning huge values: the zeros of
zeta on the critical line are genuine singular points of zeta_lambda and
must never be masked.
"""

from __future__ import annotations

import cmath
import math

from .errors import DomainError, NearZeroDenominatorError, PoleError
from .special import DEFAULT_EVAL_CONFIG, EvalConfig, eta_continued, gamma, zeta

__all__ = ["zeta_imp", "zeta_lambda", "zeta_mu", "zeta_alpha", "zeta_beta",
           "zeta_nu", "functional_eq_rhs_zeta_a", "functional_eq_rhs_zeta_alpha",
           "mellin_prefactor", "alpha_to_lambda_factor"]

_POLE_TOL = 1e-12


def _guarded_div(num: complex, den: complex, what: str,
                 config: EvalConfig) -> complex:
    if abs(den) < config.zero_threshold * max(1.0, abs(num)):
        raise NearZeroDenominatorError(
            f"{what}: denominator {den} is numerically zero (numerator {num})")
    return num / den


def zeta_imp(s: complex, config: EvalConfig = DEFAULT_EVAL_CONFIG) -> complex:
    """Dirichlet series over odd integers, (1 - 2^-s) zeta(s)."""
    s = complex(s)
    if abs(s - 1.0) < _POLE_TOL:
        raise PoleError("zeta_imp pole at s=1", location=1.0 + 0.0j)
    return (1.0 - 2.0 ** (-s)) * zeta(s, config)


def zeta_lambda(s: complex, config: EvalConfig = DEFAULT_EVAL_CONFIG) -> complex:
    """zeta(2s)/zeta(s), the generating function of the Liouville function."""
    s = complex(s)
    if abs(s - 1.0) < _POLE_TOL:
        raise PoleError("zeta_lambda: zeta pole in denominator at s=1",
                        location=1.0 + 0.0j)
    if abs(2.0 * s - 1.0) < _POLE_TOL:
        raise PoleError("zeta_lambda: zeta(2s) pole at s=1/2", location=0.5 + 0.0j)
    return _guarded_div(zeta(2.0 * s, config), zeta(s, config), "zeta_lambda", config)


def zeta_mu(s: complex, config: EvalConfig = DEFAULT_EVAL_CONFIG) -> complex:
    """1/zeta(s), the generating function of the Moebius function."""
    s = complex(s)
    return _guarded_div(1.0 + 0.0j, zeta(s, config), "zeta_mu", config)


def zeta_alpha(s: complex, mode: str = "definition",
               config: EvalConfig = DEFAULT_EVAL_CONFIG) -> complex:
    """eta(2s)/eta(s), by definition or through the zeta_lambda relation.

    mode="definition":       eta(2s) / eta(s) with eta continued everywhere.
    mode="lambda-relation":  zeta_lambda(s) (1 - 2^(1-2s)) / (1 - 2^(1-s)).
    The two agree identically; keeping both routes makes the algebraic
    bridge between the eta and zeta pictures directly testable.
    """
    s = complex(s)
    if mode == "definition":
        return _guarded_div(eta_continued(2.0 * s, config),
                            eta_continued(s, config), "zeta_alpha", config)
    if mode == "lambda-relation":
        num = zeta_lambda(s, config) * (1.0 - 2.0 ** (1.0 - 2.0 * s))
        return _guarded_div(num, 1.0 - 2.0 ** (1.0 - s), "zeta_alpha", config)
    raise DomainError(f"unknown zeta_alpha mode {mode!r}")


def zeta_beta(s: complex, config: EvalConfig = DEFAULT_EVAL_CONFIG) -> complex:
    """zeta_imp(2s-1)/zeta_imp(s), generating function of beta."""
    s = complex(s)
    if abs(s - 1.0) < _POLE_TOL:
        raise PoleError("zeta_beta pole at s=1 (numerator pole at 2s-1=1)",
                        location=1.0 + 0.0j)
    return _guarded_div(zeta_imp(2.0 * s - 1.0, config), zeta_imp(s, config),
                        "zeta_beta", config)


def zeta_nu(s: complex, config: EvalConfig = DEFAULT_EVAL_CONFIG) -> complex:
    """zeta_beta(s+3/2)/zeta_imp(s+1), generating function of nu."""
    s = complex(s)
    return _guarded_div(zeta_beta(s + 1.5, config), zeta_imp(s + 1.0, config),
                        "zeta_nu", config)


def functional_eq_rhs_zeta_a(s: complex,
                             config: EvalConfig = DEFAULT_EVAL_CONFIG) -> complex:
    """-2 pi^(s-1) sin(pi s/2) Gamma(1-s) zeta_imp(1-s).

    The right-hand side of the eta functional equation; meaningful as a
    cross-check for Re s < 1 where zeta_imp(1-s) comes from its own series
    region.
    """
    s = complex(s)
    return (-2.0 * math.pi ** (s - 1.0) * cmath.sin(math.pi * s / 2.0)
            * gamma(1.0 - s) * zeta_imp(1.0 - s, config))


def functional_eq_rhs_zeta_alpha(s: complex,
                                 config: EvalConfig = DEFAULT_EVAL_CONFIG) -> complex:
    """2^(1-2s) pi^(s-1/2) cos(pi s/2) Gamma(1/2-s) zeta_beta(1-s).

    Right-hand side of the functional equation linking zeta_alpha to
    zeta_beta (duplication-formula route); use for Re s < 1/2 so the Gamma
    factor stays clear of poles.
    """
    s = complex(s)
    return (2.0 ** (1.0 - 2.0 * s) * math.pi ** (s - 0.5)
            * cmath.cos(math.pi * s / 2.0) * gamma(0.5 - s)
            * zeta_beta(1.0 - s, config))


def mellin_prefactor(s: complex) -> complex:
    """phi(s) = (2^(1-2s)/pi) cos(pi s/2) cos(pi s/2 + pi/4) Gamma(1/2 - s).

    The prefactor that turns the half-shifted Mellin integral of the kernel
    into zeta_alpha on the strip -3/2 < Re s < -1/2.
    """
    s = complex(s)
    return (2.0 ** (1.0 - 2.0 * s) / math.pi * cmath.cos(math.pi * s / 2.0)
            * cmath.cos(math.pi * s / 2.0 + math.pi / 4.0) * gamma(0.5 - s))


def alpha_to_lambda_factor(s: complex) -> complex:
    """(1 - 2^(1-s)) / (1 - 2^(1-2s)): converts zeta_alpha into zeta_lambda."""
    s = complex(s)
    return (1.0 - 2.0 ** (1.0 - s)) / (1.0 - 2.0 ** (1.0 - 2.0 * s))
