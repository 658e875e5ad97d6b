"""Rerun the elimination for a set of levels and compare (M, #eqs, pole) with the stored table."""

import argparse
import time

from hauptmodul.jst import run_jst
from hauptmodul.tables import TABLE1

DEFAULT = (1, 2, 3, 5, 6, 7, 10, 13, 14, 15, 17, 21, 26, 34, 39)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("levels", nargs="*", type=int, default=DEFAULT)
    ap.add_argument("--variant", choices=["jst2", "jst3", "both"], default="jst3")
    args = ap.parse_args()
    variants = ("jst2", "jst3") if args.variant == "both" else (args.variant,)
    print(f"{'N':>4} {'variant':>7} {'M':>3} {'eqs':>5} {'pole':>5} {'table':>16} {'sec':>7}")
    for N in args.levels:
        for v in variants:
            t0 = time.perf_counter()
            r = run_jst(N, v)
            dt = time.perf_counter() - t0
            want = tuple(getattr(TABLE1[N], v))
            flag = "" if (r.M, r.equations, r.pole) == want else "  MISMATCH"
            print(f"{N:>4} {v:>7} {r.M:>3} {r.equations:>5} {r.pole:>5} {str(want):>16} {dt:7.2f}{flag}", flush=True)


if __name__ == "__main__":
    main()
