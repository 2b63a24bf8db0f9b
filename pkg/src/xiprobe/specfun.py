"""Complex log-gamma and Riemann zeta in double precision.

Scalars are plain Python ``complex``.  Everything here is a pure function of
its arguments; the only cached state is the table of eta-series weights,
which depends on nothing but the number of terms.

Accuracy target is a relative error of about 1e-10 in the box
``-20 <= Re(s) <= 30``, ``|Im(s)| <= 100``.  Outside that box results are
still returned, and :func:`zeta` warns with :class:`AccuracyWarning` once
``|Im(s)| > 100``.
"""
from __future__ import annotations

import cmath
import math
import warnings
from functools import lru_cache

import numpy as np

__all__ = [
    "AccuracyWarning",
    "EULER_GAMMA",
    "PoleError",
    "lgamma",
    "sinpi",
    "zeta",
    "zeta_reg",
]

#: Euler's constant, 20 significant digits.
EULER_GAMMA = 0.57721566490153286061

# Stieltjes constants gamma_1..gamma_4 for the Laurent series of zeta at 1.
_STIELTJES = (
    -0.072815845483676724861,
    -0.0096903631928723184845,
    0.0020538344203033458662,
    0.0023253700654673000078,
)

LOG_PI = math.log(math.pi)
LOG_2PI = math.log(2.0 * math.pi)
POLE_TOL = 1e-12
REG_RADIUS = 1e-3
T_ACCURATE = 100.0

# Lanczos approximation, g = 7, n = 9 (Godfrey's coefficients).
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


class PoleError(ValueError):
    """Argument sits on a pole of the function being evaluated."""


class AccuracyWarning(UserWarning):
    """Argument lies outside the region where the accuracy target holds."""


def _near_nonpositive_integer(s: complex) -> bool:
    n = round(s.real)
    return n <= 0 and abs(s - n) <= POLE_TOL


def sinpi(z: complex) -> complex:
    """sin(pi*z), with the real part reduced exactly before scaling by pi."""
    n = round(z.real)
    r = complex(z.real - n, z.imag)
    v = cmath.sin(math.pi * r)
    return -v if n % 2 else v


def _lgamma_lanczos(z: complex) -> complex:
    # valid for Re(z) >= 1/2
    z = z - 1.0
    a = _LANCZOS_COEF[0]
    for k in range(1, len(_LANCZOS_COEF)):
        a += _LANCZOS_COEF[k] / (z + k)
    t = z + _LANCZOS_G + 0.5
    return 0.5 * LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(a)


def _log_sinpi_upper(z: complex) -> complex:
    """Branch of log sin(pi z) continuous on Im(z) >= 0, zero at z = 1/2.

    Written as ``-i pi z + log(1 - e^{2 pi i z}) + i pi/2 - log 2``; the
    middle logarithm never crosses its cut because ``|e^{2 pi i z}| <= 1``.
    """
    n = round(z.real)
    r = complex(z.real - n, z.imag)
    w = cmath.exp(2j * math.pi * r)
    # the integer shift n only moves -i*pi*z by a multiple of i*pi
    return -1j * math.pi * z + cmath.log(1.0 - w) + 0.5j * math.pi - math.log(2.0)


def lgamma(s: complex) -> complex:
    """Principal branch of log Gamma(s).

    This is the branch that is real on the positive real axis and continuous
    on the plane cut along the negative real axis (the convention of
    ``scipy.special.loggamma``).  On the cut itself the limit from above is
    returned.  Uses Lanczos for ``Re(s) >= 1/2`` and the reflection formula
    below that.

    Raises :class:`PoleError` within 1e-12 of ``0, -1, -2, ...``.
    """
    s = complex(s)
    if _near_nonpositive_integer(s):
        raise PoleError(f"log-gamma pole at s = {s}")
    if s.real >= 0.5:
        return _lgamma_lanczos(s)
    if s.imag < 0.0:
        return lgamma(s.conjugate()).conjugate()
    return LOG_PI - _log_sinpi_upper(s) - _lgamma_lanczos(1.0 - s)


@lru_cache(maxsize=64)
def _eta_weights(n: int) -> np.ndarray:
    """Signed weights ``(-1)^k (d_n - d_k)/d_n`` for k = 0..n-1 (Borwein, alg. 2).

    ``d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)``.  The terms are
    normalised in log space so that large ``n`` does not overflow.
    """
    i = np.arange(n + 1)
    log_terms = np.array(
        [
            math.lgamma(n + k) - math.lgamma(n - k + 1) - math.lgamma(2 * k + 1)
            + k * math.log(4.0)
            for k in i
        ]
    )
    terms = np.exp(log_terms - log_terms.max())
    # tail[k] = sum_{i > k} terms[i], summed from the small end
    tail = np.concatenate([np.cumsum(terms[::-1])[::-1][1:], [0.0]])
    w = tail[:n] / terms.sum()
    w[1::2] *= -1.0
    w.setflags(write=False)
    return w


def _eta_terms(t: float) -> int:
    # |error| ~ e^{pi |t|} (3 + sqrt 8)^{-n}; ln(3 + sqrt 8) = 1.7627
    return int(min(24 + math.ceil((math.pi * abs(t) + 4.0) / 1.7627), 600))


def _eta(s: complex) -> complex:
    """Dirichlet eta function by the accelerated alternating series."""
    w = _eta_weights(_eta_terms(s.imag))
    logs = np.log(np.arange(1, len(w) + 1, dtype=float))
    return complex(np.dot(w, np.exp(-s * logs)))


def _zeta_right(s: complex) -> complex:
    # eta(s) = (1 - 2^{1-s}) zeta(s)
    denom = -_expm1((1.0 - s) * math.log(2.0))
    return _eta(s) / denom


def _expm1(z: complex) -> complex:
    if abs(z) < 1e-5:
        return z * (1.0 + z * (0.5 + z / 6.0))
    return cmath.exp(z) - 1.0


def _sinpi_half_over(s: complex) -> complex:
    """sin(pi s/2) / s, finite at s = 0."""
    if abs(s) < 1e-3:
        x2 = (0.5 * math.pi * s) ** 2
        return 0.5 * math.pi * (1.0 - x2 / 6.0 + x2 * x2 / 120.0)
    return sinpi(0.5 * s) / s


def _zeta_left(s: complex) -> complex:
    # zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s), with the pole of
    # zeta(1-s) at s = 0 absorbed: sin(pi s/2) zeta(1-s) = -sin(pi s/2)/s * zeta_reg(1-s)
    one_minus = 1.0 - s
    log_mag = s * math.log(2.0) + (s - 1.0) * LOG_PI + lgamma(one_minus)
    return -cmath.exp(log_mag) * _sinpi_half_over(s) * zeta_reg(one_minus)


def zeta(s: complex) -> complex:
    """Riemann zeta function.

    Right of the critical line the Dirichlet eta series is summed with
    Borwein's acceleration and divided by ``1 - 2^{1-s}``; left of it the
    functional equation maps back to the right half.

    Raises :class:`PoleError` within 1e-12 of ``s = 1``.  Warns with
    :class:`AccuracyWarning` when ``|Im(s)| > 100``.
    """
    s = complex(s)
    if abs(s - 1.0) <= POLE_TOL:
        raise PoleError("zeta has a pole at s = 1")
    if abs(s.imag) > T_ACCURATE:
        warnings.warn(
            f"zeta({s}): |Im s| > {T_ACCURATE:g}, accuracy not guaranteed",
            AccuracyWarning,
            stacklevel=2,
        )
    if s.real >= 0.5:
        return _zeta_right(s)
    return _zeta_left(s)


def zeta_reg(s: complex) -> complex:
    """The entire function ``(s - 1) zeta(s)``; equals 1 at ``s = 1``.

    Inside ``|s - 1| < 1e-3`` the Laurent series of zeta about 1 is used
    instead of multiplying through the pole.
    """
    s = complex(s)
    d = s - 1.0
    if abs(d) < REG_RADIUS:
        acc = 0.0j
        for n in range(len(_STIELTJES), 0, -1):
            acc = acc * d + (-1) ** n * _STIELTJES[n - 1] / math.factorial(n)
        acc = acc * d + EULER_GAMMA
        return 1.0 + d * acc
    return d * zeta(s)
