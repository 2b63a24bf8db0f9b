"""Truncated Hadamard products for xi.

With ``rho_n`` the zeros in the upper half-plane,

    xi(s) = 1/2 e^{B s} prod_n (1 - s/rho_n) e^{s/rho_n} (1 - s/conj rho_n) e^{s/conj rho_n}.

``paired`` keeps the first N zero pairs of this product as written;
``regrouped`` folds their exponential factors into the prefactor,
``1/2 e^{(B + S_N) s} prod_{n<=N} (1 - s/rho_n)(1 - s/conj rho_n)``.  At fixed
N the two are the same number.  Products are accumulated as sums of
logarithms with :func:`math.fsum`, so the result does not depend on the
order (or partitioning) of the factors.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .xi import XiValue
from .zeros import ZeroTable, ZetaZero, b_closed_form, partial_sum_S

__all__ = [
    "Mode",
    "TruncationSpec",
    "exp_factor_log_modulus",
    "p_N",
    "product_factor_log_modulus",
    "relative_error",
    "truncated_xi",
]

_LOG_HALF = math.log(0.5)


class Mode(str, enum.Enum):
    PAIRED = "paired"
    REGROUPED = "regrouped"


@dataclass(frozen=True)
class TruncationSpec:
    N: int
    mode: Mode = Mode.REGROUPED

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.N < 1:
            raise ValueError(f"truncation needs N >= 1, got {self.N}")


def product_factor_log_modulus(s: complex, rho: ZetaZero) -> float:
    """``log|1 - s/rho| = log|s - rho| - log|rho|``; ``-inf`` at ``s = rho``."""
    d = abs(complex(s) - rho.rho)
    if d == 0.0:
        return -math.inf
    return math.log(d) - math.log(abs(rho.rho))


def exp_factor_log_modulus(s: complex, rho: ZetaZero) -> float:
    """``log|e^{s/rho}| = Re(s/rho) = (beta sigma + gamma t)/(beta^2 + gamma^2)``."""
    s = complex(s)
    b, g = rho.beta, rho.gamma
    return (b * s.real + g * s.imag) / (b * b + g * g)


def _factor_logs(s: complex, rho: np.ndarray):
    """Log-moduli and arguments of ``1 - s/rho`` for an array of zeros."""
    diff = rho - s
    with np.errstate(divide="ignore"):
        logmod = np.log(np.abs(diff)) - np.log(np.abs(rho))
    arg = np.angle(diff) - np.angle(rho)
    return logmod, arg


def _product_log(s: complex, rho: np.ndarray) -> tuple[float, float]:
    """Log-modulus and phase of ``prod (1 - s/rho)(1 - s/conj rho)``."""
    lm_u, ar_u = _factor_logs(s, rho)
    lm_l, ar_l = _factor_logs(s, rho.conj())
    if np.isneginf(lm_u).any() or np.isneginf(lm_l).any():
        return -math.inf, 0.0
    return math.fsum(np.concatenate([lm_u, lm_l])), math.fsum(np.concatenate([ar_u, ar_l]))


def truncated_xi(s: complex, table: ZeroTable, spec: TruncationSpec) -> XiValue:
    """Hadamard product for xi truncated after ``spec.N`` zero pairs."""
    s = complex(s)
    table.check_index(spec.N, lowest=1)
    rho = table.rho[: spec.N]
    logmod, phase = _product_log(s, rho)
    if logmod == -math.inf:
        return XiValue.from_log(-math.inf, 0.0)
    B = b_closed_form()
    if spec.mode is Mode.PAIRED:
        # Re and Im of s/rho + s/conj(rho), one term per zero pair
        w = 2.0 * rho.real / (rho.real ** 2 + rho.imag ** 2)
        logmod = math.fsum([_LOG_HALF, B * s.real, logmod, *(w * s.real)])
        phase = math.fsum([B * s.imag, phase, *(w * s.imag)])
    else:
        lin = B + partial_sum_S(table, spec.N)
        logmod = math.fsum([_LOG_HALF, lin * s.real, logmod])
        phase = math.fsum([lin * s.imag, phase])
    return XiValue.from_log(logmod, phase)


def p_N(s: complex, table: ZeroTable, N: int) -> XiValue:
    """``(1 - s/rho_1) prod_{n=2}^{N} (1 - s/rho_n)(1 - s/conj rho_n)``, for N >= 2.

    The first zero enters without its conjugate partner, so
    ``(1 - s/conj rho_1) p_N(s)`` is the full product over N zero pairs.
    """
    s = complex(s)
    table.check_index(N, lowest=2)
    rho = table.rho[:N]
    lm1, ar1 = _factor_logs(s, rho[:1])
    if np.isneginf(lm1).any():
        return XiValue.from_log(-math.inf, 0.0)
    logmod, phase = _product_log(s, rho[1:])
    if logmod == -math.inf:
        return XiValue.from_log(-math.inf, 0.0)
    return XiValue.from_log(math.fsum([lm1[0], logmod]), math.fsum([ar1[0], phase]))


def relative_error(approx: XiValue, exact: XiValue) -> float:
    """``|approx - exact| / |exact|`` from the log forms, safe against overflow."""
    if exact.is_zero:
        return 0.0 if approx.is_zero else math.inf
    if approx.is_zero:
        return 1.0
    d = complex(approx.log_modulus - exact.log_modulus, approx.phase - exact.phase)
    return abs(np.expm1(d))
