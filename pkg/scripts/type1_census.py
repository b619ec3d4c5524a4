#!/usr/bin/env python3
"""Exact type-1 zero counts and densities over a range of n.

Emits one CSV row per n with the exact count (a decimal integer string,
never floating point) and the density to 6 decimals, then reports whether
the density was non-increasing across the range.
"""

import argparse

from snzeros.census import count_type1, ratio_decimal
from snzeros.ptable import build_p_table


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-n", type=int, default=82)
    ap.add_argument("--max-n", type=int, default=300)
    args = ap.parse_args()

    table = build_p_table(args.max_n)
    print("n,count_type1,z1")
    prev = None  # (count, p_n) for exact cross-multiplied comparison
    violations = []
    for n in range(args.min_n, args.max_n + 1):
        c = count_type1(n, cap=args.max_n)
        p_n = table.counts[n]
        print(f"{n},{c},{ratio_decimal(c, p_n * p_n, 6)}", flush=True)
        if prev is not None and prev[0] * p_n * p_n < c * prev[1] * prev[1]:
            violations.append(n)
        prev = (c, p_n)
    status = "non-increasing" if not violations else f"increases at {violations}"
    print(f"# z1 over [{args.min_n},{args.max_n}]: {status}")


if __name__ == "__main__":
    main()
