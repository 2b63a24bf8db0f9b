"""Command-line interface.

    xiprobe eval --re 0.5 --im 14
    xiprobe scan --t0 0 --from 1.01 --to 30 --step 0.01 --format csv > line.csv
    xiprobe scan --t0 21.022 --to 10 --step 0.005 --rh-probe
    xiprobe hadamard --re 2 --im 0 --n 1000 --mode paired
    xiprobe bconst --n 100
    xiprobe cond --sigma 1.1 --t0 0 --find-min-n
    xiprobe zeros --compute --tmax 50

Exit status: 0 success (monotone scan, condition holds, zeros validated),
1 negative result, 2 usage or input error.  Numbers are printed with 15
significant digits; csv and json output is byte-for-byte reproducible.
"""
from __future__ import annotations

import argparse
import io
import json
import math
import sys
import warnings

from . import hadamard, monotone, zeros
from .xi import functional_equation_residual, xi

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("human", "csv", "json")


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.15g}"


def _jnum(x):
    """15-significant-digit float for JSON; non-finite values become strings."""
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, float):
        return fmt(x) if not math.isfinite(x) else float(fmt(x))
    if isinstance(x, dict):
        return {k: _jnum(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jnum(v) for v in x]
    return x


def _emit_json(obj, out) -> None:
    out.write(json.dumps(_jnum(obj), sort_keys=True, indent=2) + "\n")


def _emit_csv(header: list[str], rows, out) -> None:
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(fmt(v) if isinstance(v, float) else str(v) for v in row) + "\n")


def _table(args) -> zeros.ZeroTable:
    try:
        return zeros.default_zero_table(args.zeros)
    except (OSError, zeros.ZeroTableError) as exc:
        raise UsageError(f"cannot load zero table: {exc}") from exc


# --- subcommands ----------------------------------------------------------

def cmd_eval(args, out) -> int:
    s = complex(args.re, args.im)
    v = xi(s)
    res = functional_equation_residual(s)
    val = v.value if v.value is not None else complex(math.nan, math.nan)
    rec = {
        "re": args.re, "im": args.im,
        "value_re": val.real, "value_im": val.imag,
        "representable": v.value is not None,
        "log_abs_xi": v.log_modulus, "phase": v.phase,
        "fe_residual": res,
    }
    if args.format == "json":
        _emit_json(rec, out)
    elif args.format == "csv":
        keys = list(rec)
        _emit_csv(keys, [[rec[k] for k in keys]], out)
    else:
        out.write(f"s            = {fmt(args.re)} + {fmt(args.im)}i\n")
        if v.value is None:
            out.write("xi(s)        = (overflows double precision)\n")
        else:
            out.write(f"xi(s)        = {fmt(val.real)} + {fmt(val.imag)}i\n")
        out.write(f"log|xi(s)|   = {fmt(v.log_modulus)}\n")
        out.write(f"arg xi(s)    = {fmt(v.phase)}\n")
        out.write(f"FE residual  = {fmt(res)}\n")
    return EXIT_OK


def cmd_scan(args, out) -> int:
    try:
        if args.rh_probe:
            report = monotone.rh_probe(args.t0, args.to, args.step)
        else:
            if args.sigma_from is None:
                raise UsageError("--from is required unless --rh-probe is given")
            spec = monotone.HalfLineSpec(args.t0, args.sigma_from, args.to, args.step, args.direction)
            report = monotone.scan_half_line(spec, cross_check=args.cross_check)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    if args.format == "json":
        _emit_json(report.to_dict(), out)
    elif args.format == "csv":
        _emit_csv(["sigma", "log_abs_xi"], report.samples, out)
        sys.stderr.write(
            f"# monotone={str(report.monotone).lower()} violations={len(report.violations)}\n"
        )
    else:
        sp = report.spec
        out.write(
            f"line t0={fmt(sp.t0)} sigma in [{fmt(sp.sigma_start)}, {fmt(sp.sigma_end)}] "
            f"step {fmt(sp.step)} {sp.direction.value}, {len(report.samples)} samples\n"
        )
        out.write(f"monotone: {str(report.monotone).lower()}\n")
        if report.mirror_discrepancy is not None:
            out.write(f"mirror discrepancy: {fmt(report.mirror_discrepancy)}\n")
        for v in report.violations[:20]:
            tag = " (zero)" if v.zero else ""
            out.write(f"  violation {fmt(v.sigma_pair[0])} -> {fmt(v.sigma_pair[1])}: "
                      f"delta {fmt(v.delta)}{tag}\n")
        if len(report.violations) > 20:
            out.write(f"  ... {len(report.violations) - 20} more\n")
        if report.note:
            out.write(f"note: {report.note}\n")
    return EXIT_OK if report.monotone else EXIT_FAIL


def cmd_hadamard(args, out) -> int:
    table = _table(args)
    s = complex(args.re, args.im)
    try:
        spec = hadamard.TruncationSpec(args.n, args.mode)
        approx = hadamard.truncated_xi(s, table, spec)
    except (ValueError, IndexError) as exc:
        raise UsageError(str(exc)) from exc
    exact = xi(s)
    err = hadamard.relative_error(approx, exact)
    rec = {
        "re": args.re, "im": args.im, "n": args.n, "mode": spec.mode.value,
        "truncated_log_abs": approx.log_modulus, "truncated_phase": approx.phase,
        "direct_log_abs": exact.log_modulus, "direct_phase": exact.phase,
        "relative_error": err,
    }
    if args.format == "json":
        _emit_json(rec, out)
    elif args.format == "csv":
        keys = list(rec)
        _emit_csv(keys, [[rec[k] for k in keys]], out)
    else:
        def show(v):
            if v.value is None:
                return f"exp({fmt(v.log_modulus)} + {fmt(v.phase)}i)"
            return f"{fmt(v.value.real)} + {fmt(v.value.imag)}i"
        out.write(f"truncated ({spec.mode.value}, N={args.n}) = {show(approx)}\n")
        out.write(f"direct xi(s)                = {show(exact)}\n")
        out.write(f"relative error              = {fmt(err)}\n")
    return EXIT_OK


def cmd_bconst(args, out) -> int:
    table = _table(args)
    try:
        S = zeros.partial_sum_S(table, args.n)
    except zeros.ZeroTableError as exc:
        raise UsageError(str(exc)) from exc
    B = zeros.b_closed_form()
    rec = {"n": args.n, "B": B, "S_N": S, "deficit": zeros.b_deficit(table, args.n)}
    if args.format == "json":
        _emit_json(rec, out)
    elif args.format == "csv":
        _emit_csv(list(rec), [list(rec.values())], out)
    else:
        out.write(f"B            = {fmt(B)}\n")
        out.write(f"S_{args.n:<10} = {fmt(S)}\n")
        out.write(f"-(B + S_N)   = {fmt(rec['deficit'])}\n")
    return EXIT_OK


def cmd_cond(args, out) -> int:
    table = _table(args)
    try:
        if args.find_min_n:
            try:
                n = monotone.minimal_N(args.sigma, args.t0, table)
            except monotone.TableExhaustedError as exc:
                sys.stderr.write(f"xiprobe: {exc}\n")
                return EXIT_FAIL
        else:
            if args.n is None:
                raise UsageError("give --n N or --find-min-n")
            n = args.n
        rep = monotone.derivative_condition(args.sigma, args.t0, table, n)
    except (monotone.DegeneratePointError, zeros.ZeroTableError) as exc:
        raise UsageError(str(exc)) from exc
    slope = monotone.fd_slope_check(args.sigma, args.t0, table, n)
    rec = {"sigma": rep.sigma, "t0": rep.t0, "n": rep.N, "lhs": rep.lhs, "rhs": rep.rhs,
           "holds": rep.holds, "fd_slope": slope}
    if args.format == "json":
        _emit_json(rec, out)
    elif args.format == "csv":
        keys = list(rec)
        _emit_csv(keys, [[str(rec[k]).lower() if isinstance(rec[k], bool) else rec[k]
                          for k in keys]], out)
    else:
        if args.find_min_n:
            out.write(f"minimal N    = {n}\n")
        out.write(f"lhs          = {fmt(rep.lhs)}\n")
        out.write(f"-(B + S_N)   = {fmt(rep.rhs)}\n")
        out.write(f"holds        = {str(rep.holds).lower()}\n")
        out.write(f"f_N' (fd)    = {fmt(slope)}\n")
    return EXIT_OK if rep.holds else EXIT_FAIL


def cmd_zeros(args, out) -> int:
    if args.tmax is None or not args.tmax > 0:
        raise UsageError("--tmax must be a positive number")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", zeros.StepTooCoarseWarning)
        try:
            found = zeros.find_zeros_on_critical_line(args.tmax)
        except zeros.EmptyTableError:
            found = None
    for w in caught:
        sys.stderr.write(f"xiprobe: warning: {w.message}\n")

    if args.compute:
        if found is None:
            sys.stderr.write(f"xiprobe: warning: no zeros below t = {fmt(args.tmax)}\n")
            gammas = []
        else:
            gammas = [float(g) for g in found.gamma]
        if args.format == "json":
            _emit_json({"tmax": args.tmax, "gammas": gammas}, out)
        else:
            out.write(f"# zeros of xi(1/2+it), 0 < t <= {fmt(args.tmax)}\n")
            for g in gammas:
                out.write(f"{g:.12f}\n")
        return EXIT_OK

    table = _table(args)
    ref = [float(g) for g in table.gamma if g <= args.tmax]
    got = [] if found is None else [float(g) for g in found.gamma]
    diffs = [abs(a - b) for a, b in zip(got, ref)]
    worst = max(diffs, default=0.0)
    ok = len(got) == len(ref) and worst <= 1e-6
    rec = {"tmax": args.tmax, "computed": len(got), "tabulated": len(ref),
           "max_abs_diff": worst, "ok": ok}
    if args.format == "json":
        _emit_json(rec, out)
    elif args.format == "csv":
        _emit_csv(["n", "computed", "tabulated", "abs_diff"],
                  [[i + 1, a, b, abs(a - b)] for i, (a, b) in enumerate(zip(got, ref))], out)
    else:
        out.write(f"computed {len(got)} zeros, table has {len(ref)} below t = {fmt(args.tmax)}\n")
        out.write(f"max |difference| = {fmt(worst)}\n")
        out.write(f"validated: {str(ok).lower()}\n")
    return EXIT_OK if ok else EXIT_FAIL


# --- parser ---------------------------------------------------------------

def _global_flags(default_format, default_zeros) -> argparse.ArgumentParser:
    g = argparse.ArgumentParser(add_help=False)
    g.add_argument("--format", choices=FORMATS, default=default_format)
    g.add_argument("--zeros", metavar="PATH", default=default_zeros,
                   help="zero table file (else $XI_ZEROS_PATH, else bundled)")
    return g


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand; the
    # subcommand copies default to SUPPRESS so they never mask the top level
    common = _global_flags(argparse.SUPPRESS, argparse.SUPPRESS)
    p = argparse.ArgumentParser(prog="xiprobe", description="Riemann xi monotonicity probes.",
                                parents=[_global_flags("human", None)])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common], help="evaluate xi at a point")
    e.add_argument("--re", type=float, required=True)
    e.add_argument("--im", type=float, default=0.0)
    e.set_defaults(func=cmd_eval)

    s = sub.add_parser("scan", parents=[common], help="scan |xi| along a horizontal half-line")
    s.add_argument("--t0", type=float, default=0.0)
    s.add_argument("--from", dest="sigma_from", type=float)
    s.add_argument("--to", type=float, required=True)
    s.add_argument("--step", type=float, required=True)
    s.add_argument("--direction", choices=[d.value for d in monotone.Direction], default="rightward")
    s.add_argument("--rh-probe", action="store_true",
                   help="scan (1/2, --to] rightward; --from is ignored")
    s.add_argument("--cross-check", action="store_true",
                   help="also evaluate the mirror line via the functional equation")
    s.set_defaults(func=cmd_scan)

    h = sub.add_parser("hadamard", parents=[common], help="truncated Hadamard product vs xi")
    h.add_argument("--re", type=float, default=0.0)
    h.add_argument("--im", type=float, default=0.0)
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--mode", choices=[m.value for m in hadamard.Mode], default="regrouped")
    h.set_defaults(func=cmd_hadamard)

    b = sub.add_parser("bconst", parents=[common], help="B, S_N and the deficit -(B+S_N)")
    b.add_argument("--n", type=int, default=0)
    b.set_defaults(func=cmd_bconst)

    c = sub.add_parser("cond", parents=[common], help="derivative condition for f_N")
    c.add_argument("--sigma", type=float, required=True)
    c.add_argument("--t0", type=float, default=0.0)
    g = c.add_mutually_exclusive_group()
    g.add_argument("--n", type=int)
    g.add_argument("--find-min-n", action="store_true")
    c.set_defaults(func=cmd_cond)

    z = sub.add_parser("zeros", parents=[common], help="compute or validate zeros")
    g = z.add_mutually_exclusive_group(required=True)
    g.add_argument("--compute", action="store_true")
    g.add_argument("--validate", action="store_true")
    z.add_argument("--tmax", type=float)
    z.set_defaults(func=cmd_zeros)
    return p


def main(argv: list[str] | None = None, out: io.TextIOBase | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"xiprobe: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
