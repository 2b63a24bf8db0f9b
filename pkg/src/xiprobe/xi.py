"""Riemann's xi function, evaluated in log scale.

``xi(s) = 1/2 s (s-1) pi^{-s/2} Gamma(s/2) zeta(s)`` is entire, but the
literal product multiplies a pole of zeta by a zero of ``s - 1`` and poles of
Gamma by trivial zeros of zeta.  Here it is evaluated as

    xi(s) = pi^{-s/2} Gamma(s/2 + 1) zeta_reg(s)                Re(s) >= 1/2

which has no removable singularities on that half-plane.  Left of the
critical line the reflection formula for zeta is substituted into the same
expression and the ``Gamma(s/2+1) sin(pi s/2)`` pole/zero pair is cancelled
analytically, leaving

    xi(s) = 2^{s-1} pi^{s/2} Gamma(2 - s) zeta_reg(1 - s) / Gamma(1 - s/2)

which is again free of singularities.  The two expressions agree through the
duplication formula, so the functional-equation residual below is a genuine
check on the gamma and zeta kernels rather than an identity by construction.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .specfun import LOG_PI, lgamma, zeta_reg

__all__ = [
    "XiValue",
    "ZERO_LOG",
    "functional_equation_residual",
    "log_abs_xi",
    "xi",
    "xi_log",
]

#: log|xi| below this is reported as an exact zero (|xi| < 1e-300).
ZERO_LOG = math.log(1e-300)

_LOG2 = math.log(2.0)
# exp() overflows just above this
_MAX_LOG = 709.0


@dataclass(frozen=True)
class XiValue:
    """A value of xi (or of a product approximating it) in polar log form.

    ``value`` is ``None`` when ``exp(log_modulus)`` is not representable as
    a double.  ``log_modulus`` is ``-inf`` at a zero.
    """

    log_modulus: float
    phase: float
    value: complex | None

    @classmethod
    def from_log(cls, log_modulus: float, phase: float) -> "XiValue":
        phase = _principal(phase)
        if log_modulus == -math.inf:
            return cls(-math.inf, 0.0, 0j)
        if log_modulus > _MAX_LOG:
            return cls(log_modulus, phase, None)
        return cls(log_modulus, phase, cmath.rect(math.exp(log_modulus), phase))

    @property
    def is_zero(self) -> bool:
        return self.log_modulus == -math.inf


def _principal(phase: float) -> float:
    """Reduce an angle to (-pi, pi]."""
    p = math.remainder(phase, 2.0 * math.pi)
    return math.pi if p == -math.pi else p


def xi_log(s: complex) -> complex:
    """``log xi(s)`` on some branch; real part is exact, imaginary part mod 2 pi.

    Returns ``complex(-inf, 0)`` at a zero of xi.
    """
    s = complex(s)
    if s.real >= 0.5:
        zr = zeta_reg(s)
        head = -0.5 * s * LOG_PI + lgamma(0.5 * s + 1.0)
    else:
        zr = zeta_reg(1.0 - s)
        head = (
            (s - 1.0) * _LOG2
            + 0.5 * s * LOG_PI
            + lgamma(2.0 - s)
            - lgamma(1.0 - 0.5 * s)
        )
    if zr == 0:
        return complex(-math.inf, 0.0)
    out = head + cmath.log(zr)
    if out.real < ZERO_LOG:
        return complex(-math.inf, 0.0)
    return out


def xi(s: complex) -> XiValue:
    """Riemann's xi function at ``s``."""
    lg = xi_log(s)
    return XiValue.from_log(lg.real, lg.imag)


def log_abs_xi(s: complex) -> float:
    """``ln|xi(s)|``, finite wherever xi is nonzero, ``-inf`` at zeros.

    Stays accurate where ``|xi|`` itself would overflow, e.g. ``s = 1000``.
    """
    return xi_log(s).real


def functional_equation_residual(s: complex) -> float:
    """``|xi(s) - xi(1-s)| / max(|xi(s)|, 1e-300)``, computed without overflow."""
    s = complex(s)
    a = xi_log(s)
    b = xi_log(1.0 - s)
    if a.real == -math.inf and b.real == -math.inf:
        return 0.0
    if a.real == -math.inf:
        a = complex(ZERO_LOG, 0.0)
    if b.real == -math.inf:
        b = complex(ZERO_LOG, 0.0)
    # |e^a - e^b| / |e^a| = |1 - e^{b-a}|, with the floor applied to |e^a|
    scale = max(a.real, ZERO_LOG)
    diff = abs(cmath.exp(complex(a.real - scale, a.imag)) - cmath.exp(complex(b.real - scale, b.imag)))
    return diff
