"""Numerical probes of Riemann's xi function.

Evaluate xi from first principles, scan ``|xi|`` along horizontal half-lines,
compare it with truncated Hadamard products over tabulated zeta zeros, and
test the sufficient condition for growth of the product's prefactor.
"""
from .hadamard import Mode, TruncationSpec, p_N, truncated_xi
from .monotone import (
    ConditionReport,
    HalfLineSpec,
    ScanReport,
    derivative_condition,
    f_N,
    fd_slope_check,
    minimal_N,
    rh_probe,
    scan_half_line,
)
from .specfun import lgamma, zeta, zeta_reg
from .xi import XiValue, functional_equation_residual, log_abs_xi, xi
from .zeros import (
    ZeroTable,
    ZetaZero,
    b_closed_form,
    b_deficit,
    bundled_zero_table,
    default_zero_table,
    find_zeros_on_critical_line,
    load_zero_table,
    partial_sum_S,
)

__version__ = "0.1.0"
