"""Zeta-zero tables and the Hadamard constant B.

A :class:`ZeroTable` holds zeros ``rho_n = beta_n + i gamma_n`` with
``gamma_n > 0`` in ascending order; the conjugate zeros are implicit.  The
bundled table has the first 10^4 ordinates, all with ``beta = 1/2``, but
nothing downstream assumes that: every sum uses the general
``2 beta / (beta^2 + gamma^2)`` term, so off-line zeros can be injected.
"""
from __future__ import annotations

import io
import math
import os
import warnings
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from pathlib import Path
from typing import Iterable, TextIO

import numpy as np

from .specfun import EULER_GAMMA
from .xi import xi

__all__ = [
    "B",
    "DomainError",
    "EmptyTableError",
    "OrderingError",
    "ParseError",
    "StepTooCoarseWarning",
    "TableRangeError",
    "ZERO_PATH_ENV",
    "ZeroTable",
    "ZeroTableError",
    "ZetaZero",
    "b_closed_form",
    "b_deficit",
    "bundled_zero_table",
    "default_zero_table",
    "dump_zero_table",
    "find_zeros_on_critical_line",
    "load_zero_table",
    "partial_sum_S",
]

ZERO_PATH_ENV = "XI_ZEROS_PATH"
BUNDLED_NAME = "zeros_10000.txt"
BISECT_TOL = 1e-9


class ZeroTableError(ValueError):
    """Base class for malformed or unusable zero tables."""


class ParseError(ZeroTableError):
    def __init__(self, lineno: int, text: str):
        super().__init__(f"line {lineno}: cannot parse {text!r} as an ordinate")
        self.lineno = lineno


class OrderingError(ZeroTableError):
    """Ordinates are not strictly ascending."""


class DomainError(ZeroTableError):
    """A zero lies outside ``0 <= beta <= 1``, ``gamma > 0``."""


class EmptyTableError(ZeroTableError):
    """An operation needed at least one zero and got none."""


class TableRangeError(ZeroTableError, IndexError):
    """A truncation index exceeds the number of zeros available."""


class StepTooCoarseWarning(UserWarning):
    """Sampling may have missed a close pair of zeros."""


@dataclass(frozen=True)
class ZetaZero:
    beta: float
    gamma: float

    def __post_init__(self):
        if not (0.0 <= self.beta <= 1.0) or not self.gamma > 0.0:
            raise DomainError(f"zero {self.beta} + {self.gamma}i outside the upper critical strip")

    @property
    def rho(self) -> complex:
        return complex(self.beta, self.gamma)


@dataclass(frozen=True)
class ZeroTable:
    """Immutable ascending table of upper-half-plane zeta zeros."""

    zeros: tuple[ZetaZero, ...]
    source: str = "<memory>"

    def __post_init__(self):
        object.__setattr__(self, "zeros", tuple(self.zeros))
        g = [z.gamma for z in self.zeros]
        for n in range(1, len(g)):
            if not g[n] > g[n - 1]:
                raise OrderingError(
                    f"ordinates not strictly ascending at entry {n + 1}: {g[n - 1]} then {g[n]}"
                )

    @classmethod
    def from_gammas(cls, gammas: Iterable[float], beta: float = 0.5,
                    source: str = "<memory>") -> "ZeroTable":
        return cls(tuple(ZetaZero(beta, float(g)) for g in gammas), source)

    def __len__(self) -> int:
        return len(self.zeros)

    def __getitem__(self, i):
        return self.zeros[i]

    def head(self, n: int) -> "ZeroTable":
        return ZeroTable(self.zeros[:n], f"{self.source}[:{n}]")

    @cached_property
    def beta(self) -> np.ndarray:
        a = np.array([z.beta for z in self.zeros], dtype=float)
        a.setflags(write=False)
        return a

    @cached_property
    def gamma(self) -> np.ndarray:
        a = np.array([z.gamma for z in self.zeros], dtype=float)
        a.setflags(write=False)
        return a

    @cached_property
    def rho(self) -> np.ndarray:
        a = self.beta + 1j * self.gamma
        a.setflags(write=False)
        return a

    @cached_property
    def prefix_S(self) -> np.ndarray:
        """``prefix_S[N]`` is S_N for N = 0..len(table)."""
        b, g = self.beta, self.gamma
        terms = 2.0 * b / (b * b + g * g)
        # terms shrink with n, so summing in order loses at most ~N ulps of 0.02
        a = np.concatenate([[0.0], np.cumsum(terms)])
        a.setflags(write=False)
        return a

    def require_nonempty(self) -> None:
        if not self.zeros:
            raise EmptyTableError("zero table is empty")

    def check_index(self, N: int, lowest: int = 0) -> None:
        if N < lowest or N > len(self.zeros):
            raise TableRangeError(
                f"N = {N} outside [{lowest}, {len(self.zeros)}] for table {self.source}"
            )


def load_zero_table(stream: TextIO | str | os.PathLike, source: str | None = None) -> ZeroTable:
    """Parse a zero table: one decimal ordinate per line, ``#`` comments.

    ``stream`` may be an open text stream, or a path.  Blank lines are
    skipped.  Every zero gets ``beta = 1/2``.
    """
    if isinstance(stream, (str, os.PathLike)):
        path = Path(stream)
        with path.open(encoding="utf-8") as fh:
            return load_zero_table(fh, source or str(path))
    gammas = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            g = float(line)
        except ValueError:
            raise ParseError(lineno, line) from None
        if not math.isfinite(g):
            raise ParseError(lineno, line)
        if g <= 0.0:
            raise DomainError(f"line {lineno}: ordinate {g} is not positive")
        gammas.append(g)
    if not gammas:
        raise EmptyTableError("no ordinates found in zero table")
    return ZeroTable.from_gammas(gammas, source=source or getattr(stream, "name", "<stream>"))


def dump_zero_table(table: ZeroTable, out: TextIO, header: str | None = None) -> None:
    """Write ``table`` in the format :func:`load_zero_table` reads."""
    if header:
        for line in header.splitlines():
            out.write(f"# {line}\n")
    for z in table.zeros:
        out.write(f"{z.gamma:.12f}\n")


_BUNDLED: ZeroTable | None = None


def bundled_zero_table() -> ZeroTable:
    """The first 10^4 zeros shipped with the package (loaded once)."""
    global _BUNDLED
    if _BUNDLED is None:
        text = resources.files("xiprobe").joinpath("data", BUNDLED_NAME).read_text("utf-8")
        origin = next(
            (ln.split("source:", 1)[1].strip() for ln in text.splitlines()
             if ln.startswith("#") and "source:" in ln),
            "unknown",
        )
        _BUNDLED = load_zero_table(io.StringIO(text), source=f"bundled {BUNDLED_NAME} ({origin})")
    return _BUNDLED


def default_zero_table(path: str | os.PathLike | None = None) -> ZeroTable:
    """Resolve a table: explicit ``path``, then ``$XI_ZEROS_PATH``, then bundled."""
    path = path or os.environ.get(ZERO_PATH_ENV)
    if path:
        return load_zero_table(path)
    return bundled_zero_table()


# --- constants ------------------------------------------------------------

def b_closed_form() -> float:
    """``B = log(4 pi)/2 - 1 - C/2``, the linear coefficient of the Hadamard product."""
    return 0.5 * math.log(4.0 * math.pi) - 1.0 - 0.5 * EULER_GAMMA


B = b_closed_form()


def partial_sum_S(table: ZeroTable, N: int) -> float:
    """``S_N = sum_{n<=N} (1/rho_n + 1/conj(rho_n)) = sum 2 beta_n/(beta_n^2 + gamma_n^2)``."""
    table.check_index(N)
    return float(table.prefix_S[N])


def b_deficit(table: ZeroTable, N: int) -> float:
    """``-(B + S_N)``: how far the first N zeros fall short of cancelling B."""
    return -(b_closed_form() + partial_sum_S(table, N))


# --- self-computed zeros --------------------------------------------------

def _critical_sign(t: float) -> tuple[int, float]:
    """Sign of the (real) value xi(1/2 + it) and its log-modulus."""
    v = xi(complex(0.5, t))
    if v.is_zero:
        return 0, -math.inf
    return (1 if math.cos(v.phase) > 0 else -1), v.log_modulus


def _sample(t_max: float, step: float):
    n = int(math.ceil(t_max / step))
    ts = np.linspace(0.0, n * step, n + 1)
    ts[-1] = min(ts[-1], t_max)
    signs, logs = zip(*(_critical_sign(float(t)) for t in ts))
    return ts, np.array(signs), np.array(logs)


def _suspicious(signs: np.ndarray, logs: np.ndarray) -> bool:
    # a dip in |xi| flanked by samples of one sign hints at a hidden pair of zeros
    for i in range(1, len(signs) - 1):
        if signs[i - 1] == signs[i] == signs[i + 1] != 0:
            if logs[i] < logs[i - 1] and logs[i] < logs[i + 1]:
                return True
    return False


def _bisect(lo: float, hi: float, s_lo: int, tol: float) -> float:
    while hi - lo >= tol:
        mid = 0.5 * (lo + hi)
        s_mid, _ = _critical_sign(mid)
        if s_mid == 0:
            return mid
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def find_zeros_on_critical_line(t_max: float, count_limit: int | None = None,
                                step: float = 0.05, tol: float = BISECT_TOL) -> ZeroTable:
    """Locate zeros ``1/2 + i gamma`` with ``0 < gamma <= t_max`` by sign changes.

    xi is real on the critical line, so its sign is sampled on a grid of
    spacing ``step``; each sign change is bisected until the bracket is
    shorter than ``tol``.  If a dip in ``|xi|`` without a sign change is seen,
    the step is halved (at most 10 times) in case two zeros share a cell;
    :class:`StepTooCoarseWarning` is issued if the dip survives.

    Raises :class:`EmptyTableError` when no zero is found.
    """
    if not t_max > 0:
        raise ValueError(f"t_max must be positive, got {t_max}")
    for _ in range(11):
        ts, signs, logs = _sample(t_max, step)
        if not _suspicious(signs, logs):
            break
        step *= 0.5
    else:
        warnings.warn(
            f"sign sampling up to t = {t_max} may have missed zeros (step {step:g})",
            StepTooCoarseWarning,
            stacklevel=2,
        )

    found = []
    for i in range(len(ts) - 1):
        if count_limit is not None and len(found) >= count_limit:
            break
        if signs[i] == 0 and ts[i] > 0:
            found.append(float(ts[i]))
        elif signs[i] * signs[i + 1] < 0:
            found.append(_bisect(float(ts[i]), float(ts[i + 1]), int(signs[i]), tol))
    if signs[-1] == 0 and (count_limit is None or len(found) < count_limit):
        found.append(float(ts[-1]))
    if not found:
        raise EmptyTableError(f"no zeros on the critical line below t = {t_max}")
    return ZeroTable.from_gammas(found, source=f"computed: sign changes of xi(1/2+it), t <= {t_max}")
