#!/usr/bin/env python3
"""Emit the decay table as CSV and certify the terminal bound.

Example:
    python scripts/run_decay_table.py --n-max 50 --digits 220 --out decay.csv
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from zeta3forms.bounds import decay_table  # noqa: E402
from zeta3forms.cli import enclosure_decimal  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=50)
    parser.add_argument("--digits", type=int, default=220)
    parser.add_argument("--out", type=Path, default=Path("decay.csv"))
    parser.add_argument("--t-cap-exp", type=int, default=10,
                        help="certify T_{n_max} < 10**-EXP")
    args = parser.parse_args()

    started = time.perf_counter()
    rows = decay_table(args.n_max, args.digits)
    elapsed = time.perf_counter() - started

    with args.out.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["n", "d_n", "abs_form", "rhs_bound", "ratio", "T_n"])
        for row in rows:
            writer.writerow(
                [
                    row.n,
                    row.dn,
                    enclosure_decimal(row.form_abs, 10),
                    enclosure_decimal(row.rhs, 10),
                    enclosure_decimal(row.ratio, 10),
                    enclosure_decimal(row.t_n, 10),
                ]
            )

    last = rows[-1]
    cap = Fraction(1, 10**args.t_cap_exp)
    certified = last.t_n.hi < cap
    print(f"wrote {args.out} ({len(rows)} rows) in {elapsed:.2f}s")
    print(f"T_{last.n} = {enclosure_decimal(last.t_n, 6)}")
    print(f"T_{last.n} < 1e-{args.t_cap_exp}: {'CERTIFIED' if certified else 'NOT CERTIFIED'}")
    return 0 if certified else 1


if __name__ == "__main__":
    sys.exit(main())
