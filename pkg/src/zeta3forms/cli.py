"""Command-line front end: linear forms, certified checks, constants, audits.

All data output is deterministic for a fixed argv: exact rationals print as
p/q, decimals are directed roundings of enclosure midpoints and are only
printed to a precision the enclosure actually certifies (a +/- error field
is appended whenever the width exceeds one unit in the last printed place).

Exit codes: 0 all requested checks hold / completed, 1 some check fails,
2 usage error, 3 some check is still unknown after maximal refinement.
"""

from __future__ import annotations

import argparse
import csv
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import bounds, chain
from .beukers import linear_form
from .bounds import CheckStatus
from .exactnum import Enclosure, rat_str
from .zeta3 import Method, Zeta3Request

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3


# -- certified decimal printing ----------------------------------------------


def _pow10(e: int) -> Fraction:
    return Fraction(10**e) if e >= 0 else Fraction(1, 10**-e)


def _floor_log10(x: Fraction) -> int:
    """Largest e with 10**e <= x, for x > 0."""
    p, q = x.numerator, x.denominator
    e = len(str(p)) - len(str(q))
    while _pow10(e) > x:
        e -= 1
    while _pow10(e + 1) <= x:
        e += 1
    return e


def _round_nonneg(x: Fraction, mode: str) -> int:
    if mode == "half_up":
        return (2 * x.numerator + x.denominator) // (2 * x.denominator)
    if mode == "up":
        return -((-x.numerator) // x.denominator)
    raise ValueError(f"unknown rounding mode {mode!r}")


def fraction_sci(x: Fraction, sig: int, mode: str = "half_up") -> str:
    """Scientific notation with exactly ``sig`` significant digits."""
    if sig < 1:
        raise ValueError("sig must be >= 1")
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    ax = -x if x < 0 else x
    e = _floor_log10(ax)
    m = _round_nonneg(ax / _pow10(e - sig + 1), mode)
    if m >= 10**sig:  # rounding carried into the next decade
        m //= 10
        e += 1
    digs = str(m)
    mant = digs if sig == 1 else digs[0] + "." + digs[1:]
    return f"{sign}{mant}e{e:+03d}"


def enclosure_decimal(enc: Enclosure, max_sig: int = 7) -> str:
    """Midpoint decimal certified to < 1 ulp of the printed precision.

    The precision is lowered until the enclosure width is below one unit in
    the last place; if even one significant digit cannot be certified, the
    half-width is appended as an explicit +/- field (rounded upward).
    """
    mid = enc.midpoint()
    width = enc.width()
    if width == 0:
        return fraction_sci(mid, max_sig)
    if mid == 0:
        return "0±" + fraction_sci(width / 2, 2, "up")
    e = _floor_log10(abs(mid))
    sig = max_sig
    while sig > 1 and width >= _pow10(e - sig + 1):
        sig -= 1
    if width < _pow10(e - sig + 1):
        return fraction_sci(mid, sig)
    return fraction_sci(mid, sig) + "±" + fraction_sci(width / 2, 2, "up")


def fraction_places(x: Fraction, places: int) -> str:
    """Plain decimal with a fixed number of places, half-up, x >= 0."""
    if x < 0:
        raise ValueError("fraction_places expects a non-negative value")
    scale = 10**places
    n = (2 * x.numerator * scale + x.denominator) // (2 * x.denominator)
    if places == 0:
        return str(n)
    q, r = divmod(n, scale)
    return f"{q}.{r:0{places}d}"


# -- exit-code aggregation -----------------------------------------------------


def _exit_for(statuses: Sequence[CheckStatus]) -> int:
    if any(s is CheckStatus.FAILS for s in statuses):
        return EXIT_FAILS
    if any(s is CheckStatus.UNKNOWN for s in statuses):
        return EXIT_UNKNOWN
    return EXIT_OK


def _banner(args: argparse.Namespace, text: str) -> None:
    if not args.quiet:
        print(f"[zeta3forms] {text}", file=sys.stderr)


# -- subcommands ---------------------------------------------------------------


def cmd_form(args: argparse.Namespace) -> int:
    form = linear_form(args.n)
    _banner(args, f"form n={args.n}")
    if args.json:
        import json

        print(
            json.dumps(
                {
                    "n": form.n,
                    "alpha": rat_str(form.alpha),
                    "beta": form.beta,
                    "A": form.A,
                    "B": form.B,
                    "dn3": form.dn3,
                }
            )
        )
    else:
        print(
            f"alpha={rat_str(form.alpha)} beta={form.beta} "
            f"A={form.A} B={form.B} dn3={form.dn3}"
        )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    _banner(args, f"verify n=1..{args.n_max} digits={args.digits}")
    statuses = []
    rows = []
    for n in range(1, args.n_max + 1):
        fb = bounds.verify_form_bound(n, args.digits)
        rb = bounds.verify_ratio_bound(n, args.digits)
        statuses.extend((fb.status, rb.status))
        rows.append(
            (
                n,
                fb.status.value,
                rb.status.value,
                enclosure_decimal(fb.lhs),
                enclosure_decimal(fb.rhs),
                fb.digits_used,
                rb.digits_used,
            )
        )
    if args.csv:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(
            ["n", "bound_status", "ratio_status", "lhs", "rhs", "bound_digits", "ratio_digits"]
        )
        writer.writerows(rows)
    else:
        for n, b, r, lhs, rhs, bd, rd in rows:
            print(
                f"n={n} bound={b} ratio={r} lhs={lhs} rhs={rhs} "
                f"bound_digits={bd} ratio_digits={rd}"
            )
    return _exit_for(statuses)


def cmd_zeta3(args: argparse.Namespace) -> int:
    _banner(args, f"zeta3 digits={args.digits} method={args.method}")
    # One guard digit so the printed error is strictly below 1 ulp.
    enc = Zeta3Request(digits=args.digits + 1, method=Method(args.method)).evaluate()
    print(fraction_places(enc.midpoint(), args.digits))
    return EXIT_OK


def cmd_audit(args: argparse.Namespace) -> int:
    vector = chain.CoeffVector(tuple(args.coeffs))
    report = chain.audit(args.n, vector, args.digits)
    _banner(args, f"audit n={args.n} coeffs={vector} digits={args.digits}")
    if args.json:
        print(chain.report_to_json(report))
    else:
        print(
            f"n={report.n} coeffs={report.coeffs} m={report.coeffs.m} "
            f"digits_used={report.digits_used} "
            f"c0_positive={'true' if report.c0_positive else 'false'}"
        )
        print(
            f"R={enclosure_decimal(report.R)} S={enclosure_decimal(report.S)} "
            f"residual={enclosure_decimal(report.residual)}"
        )
        for step in report.steps:
            print(f"{step.step_id}: {step.numeric.value} | {step.justification.as_text()}")
    return _exit_for([s.numeric for s in report.steps])


def cmd_decay(args: argparse.Namespace) -> int:
    _banner(args, f"decay n=1..{args.n_max} digits={args.digits}")
    rows = bounds.decay_table(args.n_max, args.digits)
    header = ["n", "d_n", "abs_form", "rhs_bound", "ratio", "T_n"]
    formatted = [
        (
            row.n,
            row.dn,
            enclosure_decimal(row.form_abs, 10),
            enclosure_decimal(row.rhs, 10),
            enclosure_decimal(row.ratio, 10),
            enclosure_decimal(row.t_n, 10),
        )
        for row in rows
    ]
    if args.csv:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(formatted)
    else:
        for cells in formatted:
            print(" ".join(f"{k}={v}" for k, v in zip(header, cells)))
    return EXIT_OK


# -- parser ---------------------------------------------------------------------


def _parse_coeffs(text: str) -> list[int]:
    try:
        return [int(part.strip()) for part in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad coefficient list {text!r}: {exc}") from exc


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", help="suppress the stderr banner")

    parser = argparse.ArgumentParser(
        prog="zeta3forms",
        description="Exact linear forms in 1 and zeta(3), certified bounds, chain audits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("form", parents=[common], help="print the linear form for one n")
    p.add_argument("--n", type=_nonnegative_int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_form)

    p = sub.add_parser("verify", parents=[common], help="certify the sandwich bound for n=1..N")
    p.add_argument("--n-max", type=_positive_int, required=True)
    p.add_argument("--digits", type=_positive_int, default=30)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("zeta3", parents=[common], help="print zeta(3) to a certified precision")
    p.add_argument("--digits", type=_positive_int, required=True)
    p.add_argument(
        "--method",
        choices=[m.value for m in Method],
        default=Method.CROSS.value,
    )
    p.set_defaults(func=cmd_zeta3)

    p = sub.add_parser("audit", parents=[common], help="audit the inequality chain for one vector")
    p.add_argument("--coeffs", type=_parse_coeffs, required=True, metavar="c0,c1,...,cm")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--digits", type=_positive_int, default=60)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("decay", parents=[common], help="tabulate the decay of the bound")
    p.add_argument("--n-max", type=_positive_int, required=True)
    p.add_argument("--digits", type=_positive_int, default=230)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_decay)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # Fold "--coeffs -6,5" into "--coeffs=-6,5" so negative leading
    # coefficients are not mistaken for option flags.
    for i in range(len(argv) - 1):
        if argv[i] == "--coeffs":
            argv[i : i + 2] = [f"--coeffs={argv[i + 1]}"]
            break
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (chain.InvalidCoeffVector, ValueError) as exc:
        print(f"zeta3forms: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
