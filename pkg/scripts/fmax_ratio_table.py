#!/usr/bin/env python3
"""Tabulate f(n), f_max(n) and the ratio f_max(n) / 2^{n/4} by residue class.

The ratio sequences stabilise per residue class mod 4; their limits exist
but are not reproducible at desk scale, so this script only reports the
finite values (cross-checking the two enumeration routes where the oracle
is available).

Usage: python scripts/fmax_ratio_table.py [--n-max 28] [--workers 4] [--csv]
"""

from __future__ import annotations

import argparse
import sys
import time
from collections import defaultdict

from sumfree.census import ORACLE_MAX_N, f_branch, f_max_branch, f_max_oracle, f_oracle


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=28)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--csv", action="store_true")
    args = ap.parse_args()

    rows = []
    by_residue: dict[int, list[float]] = defaultdict(list)
    for n in range(1, args.n_max + 1):
        t0 = time.perf_counter()
        f = f_branch(n, workers=args.workers)
        fmax = f_max_branch(n, workers=args.workers)
        elapsed = (time.perf_counter() - t0) * 1000
        if n <= ORACLE_MAX_N and n <= 20:
            assert f == f_oracle(n) and fmax == f_max_oracle(n), n
        ratio = fmax / 2 ** (n / 4)
        by_residue[n % 4].append(ratio)
        rows.append((n, n % 4, f, fmax, ratio, elapsed))

    if args.csv:
        print("n,residue_mod_4,f,f_max,ratio_fmax_over_2_pow_n_quarter,elapsed_ms")
        for n, r, f, fmax, ratio, ms in rows:
            print(f"{n},{r},{f},{fmax},{ratio:.6f},{ms:.1f}")
    else:
        print(f"{'n':>4} {'mod4':>4} {'f':>12} {'f_max':>10} {'f_max/2^(n/4)':>14}")
        for n, r, f, fmax, ratio, _ in rows:
            print(f"{n:>4} {r:>4} {f:>12} {fmax:>10} {ratio:>14.6f}")
        print("\nlast ratio per residue class:")
        for r in sorted(by_residue):
            print(f"  n = {r} mod 4: {by_residue[r][-1]:.6f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
