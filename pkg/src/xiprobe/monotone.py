"""Monotonicity of |xi| along horizontal half-lines.

Two complementary tools:

* grid scans of ``log|xi(sigma + i t0)|`` that flag every step where the
  modulus fails to increase (rightward) or decrease (leftward);
* the prefactor ``f_N(sigma) = |1/2 e^{(B+S_N) s} (1 - s/rho_1)|^2`` of the
  regrouped Hadamard product, the closed-form sufficient condition for
  ``f_N' > 0``, and the smallest N for which it holds.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .xi import log_abs_xi
from .zeros import EmptyTableError, ZeroTable, ZeroTableError, b_closed_form, b_deficit, partial_sum_S

__all__ = [
    "ConditionReport",
    "DegeneratePointError",
    "Direction",
    "GridTooLargeError",
    "HalfLineSpec",
    "MAX_GRID",
    "MONO_RTOL",
    "ScanReport",
    "TableExhaustedError",
    "Violation",
    "derivative_condition",
    "f_N",
    "fd_slope_check",
    "minimal_N",
    "rh_probe",
    "scan_half_line",
]

MAX_GRID = 10_000_000
MONO_RTOL = 1e-9

RH_NOTE = (
    "A violation on a line right of Re(s) = 1/2 would mean a zero off the "
    "critical line; at heights covered by published zero verifications it "
    "points to numerical error, not a counterexample."
)


class GridTooLargeError(ValueError):
    pass


class DegeneratePointError(ValueError):
    """The derivative condition is 0/0 at ``s = rho_1``."""


class TableExhaustedError(ZeroTableError):
    """No N up to the table length satisfies the derivative condition."""


class Direction(str, enum.Enum):
    RIGHTWARD = "rightward"
    LEFTWARD = "leftward"


@dataclass(frozen=True)
class HalfLineSpec:
    """Grid ``sigma_start + k step <= sigma_end`` on the line ``Im(s) = t0``.

    ``rightward`` expects |xi| to increase with sigma, ``leftward`` expects it
    to decrease (i.e. to increase as the line is walked to the left).
    """

    t0: float
    sigma_start: float
    sigma_end: float
    step: float
    direction: Direction = Direction.RIGHTWARD

    def __post_init__(self):
        object.__setattr__(self, "direction", Direction(self.direction))
        if not (self.step > 0 and math.isfinite(self.step)):
            raise ValueError(f"step must be positive, got {self.step}")
        if not self.sigma_start < self.sigma_end:
            raise ValueError(f"need sigma_start < sigma_end, got {self.sigma_start} >= {self.sigma_end}")
        if (self.sigma_end - self.sigma_start) / self.step > MAX_GRID:
            raise GridTooLargeError(f"grid exceeds {MAX_GRID} points")

    def grid(self) -> np.ndarray:
        n = int(math.floor((self.sigma_end - self.sigma_start) / self.step * (1 + 1e-12)))
        return self.sigma_start + self.step * np.arange(n + 1)


class Violation(NamedTuple):
    sigma_pair: tuple[float, float]
    delta: float
    zero: bool = False


@dataclass(frozen=True)
class ScanReport:
    spec: HalfLineSpec
    samples: list[tuple[float, float]]
    violations: list[Violation]
    mirror_discrepancy: float | None = None
    note: str = ""

    @property
    def monotone(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "spec": {
                "t0": self.spec.t0,
                "sigma_start": self.spec.sigma_start,
                "sigma_end": self.spec.sigma_end,
                "step": self.spec.step,
                "direction": self.spec.direction.value,
            },
            "samples": [list(p) for p in self.samples],
            "monotone": self.monotone,
            "violations": [
                {"sigma_pair": list(v.sigma_pair), "delta": v.delta, "zero": v.zero}
                for v in self.violations
            ],
            "mirror_discrepancy": self.mirror_discrepancy,
            "note": self.note,
        }


def _violations(sig: np.ndarray, logs: np.ndarray, sign: float) -> list[Violation]:
    out = []
    for k in range(len(sig) - 1):
        a, b = logs[k], logs[k + 1]
        pair = (float(sig[k]), float(sig[k + 1]))
        if math.isinf(a) or math.isinf(b):
            out.append(Violation(pair, float(b - a) if a != b else -math.inf, zero=True))
            continue
        eps = MONO_RTOL * max(1.0, abs(a), abs(b))
        delta = sign * (b - a)
        if not delta > -eps:
            out.append(Violation(pair, float(b - a)))
    return out


def scan_half_line(spec: HalfLineSpec, cross_check: bool = False) -> ScanReport:
    """Sample ``log|xi|`` along the line and list monotonicity violations.

    A step counts as monotone when the log-modulus moves the expected way by
    more than ``-1e-9 max(1, |log|xi||)``.  Zeros of xi on the grid always
    count as violations.  With ``cross_check`` the same samples are
    recomputed on the mirror line through the functional equation,
    ``|xi(sigma + i t0)| = |xi(1 - sigma + i t0)|``, and the largest
    disagreement is stored in ``mirror_discrepancy``.
    """
    sig = spec.grid()
    t0 = spec.t0
    logs = np.array([log_abs_xi(complex(x, t0)) for x in sig])
    sign = 1.0 if spec.direction is Direction.RIGHTWARD else -1.0
    mirror = None
    if cross_check:
        refl = np.array([log_abs_xi(complex(1.0 - x, t0)) for x in sig])
        finite = np.isfinite(logs) & np.isfinite(refl)
        mirror = float(np.max(np.abs(logs[finite] - refl[finite]), initial=0.0))
    return ScanReport(
        spec=spec,
        samples=[(float(x), float(y)) for x, y in zip(sig, logs)],
        violations=_violations(sig, logs, sign),
        mirror_discrepancy=mirror,
    )


def rh_probe(t0: float, sigma_max: float, step: float) -> ScanReport:
    """Rightward scan of ``sigma in (1/2, sigma_max]`` at height t0.

    Under the Riemann Hypothesis every such scan is monotone.
    """
    if not step > 0:
        raise ValueError(f"step must be positive, got {step}")
    if not sigma_max > 0.5:
        raise ValueError(f"sigma_max must exceed 1/2, got {sigma_max}")
    report = scan_half_line(HalfLineSpec(t0, 0.5 + step, sigma_max, step, Direction.RIGHTWARD))
    return ScanReport(report.spec, report.samples, report.violations, note=RH_NOTE)


# --- the prefactor f_N and its derivative condition -----------------------

@dataclass(frozen=True)
class ConditionReport:
    sigma: float
    t0: float
    N: int
    lhs: float
    rhs: float
    holds: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "holds", bool(self.lhs > self.rhs))

    @property
    def margin(self) -> float:
        return self.lhs - self.rhs


def f_N(sigma: float, t0: float, table: ZeroTable, N: int) -> float:
    """``1/4 e^{2(B+S_N) sigma} ((sigma-beta_1)^2 + (t0-gamma_1)^2) / (beta_1^2 + gamma_1^2)``."""
    table.require_nonempty()
    lin = b_closed_form() + partial_sum_S(table, N)
    r1 = table[0]
    dist2 = (sigma - r1.beta) ** 2 + (t0 - r1.gamma) ** 2
    return 0.25 * math.exp(2.0 * lin * sigma) * dist2 / (r1.beta ** 2 + r1.gamma ** 2)


def _lhs(sigma: float, t0: float, table: ZeroTable) -> float:
    r1 = table[0]
    x = sigma - r1.beta
    d2 = x * x + (t0 - r1.gamma) ** 2
    if d2 == 0.0:
        raise DegeneratePointError(f"sigma + i t0 = rho_1 = {r1.rho}; condition undefined")
    return x / d2


def derivative_condition(sigma: float, t0: float, table: ZeroTable, N: int) -> ConditionReport:
    """Check ``(sigma-beta_1)/((sigma-beta_1)^2 + (t0-gamma_1)^2) > -(B + S_N)``.

    When it holds, ``f_N`` is increasing at ``sigma``.
    """
    table.require_nonempty()
    lhs = _lhs(sigma, t0, table)
    return ConditionReport(sigma, t0, N, lhs, b_deficit(table, N))


def minimal_N(sigma1: float, t0: float, table: ZeroTable) -> int:
    """Smallest ``N >= 1`` for which :func:`derivative_condition` holds.

    The deficit ``-(B + S_N)`` decreases with N, so the condition, once true,
    stays true and the first hit of a linear scan is the minimum.  Raises
    :class:`TableExhaustedError` if no N up to ``len(table)`` works, which
    is certain when ``sigma1 <= beta_1``.
    """
    if not table.zeros:
        raise EmptyTableError("zero table is empty")
    lhs = _lhs(sigma1, t0, table)
    for N in range(1, len(table) + 1):
        if lhs > b_deficit(table, N):
            return N
    raise TableExhaustedError(
        f"condition fails for every N <= {len(table)} at sigma = {sigma1}, t0 = {t0}"
    )


def fd_slope_check(sigma: float, t0: float, table: ZeroTable, N: int) -> float:
    """Central difference of :func:`f_N` at sigma with ``h = 1e-6 max(1, |sigma|)``."""
    h = 1e-6 * max(1.0, abs(sigma))
    return (f_N(sigma + h, t0, table, N) - f_N(sigma - h, t0, table, N)) / (2.0 * h)
