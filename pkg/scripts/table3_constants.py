"""Additive constants t_N - j_N for the eta/theta expressions of the Hauptmoduli."""

import argparse

from hauptmodul.exactnum import rational_str
from hauptmodul.identities import TABLE3, TABLE3_ERRATA, crosscheck_hauptmodul

CHEAP = [N for N in sorted(TABLE3) if N not in (31, 59, 71)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("levels", nargs="*", type=int)
    ap.add_argument("--all", action="store_true", help="include 31, 59 and 71 (several minutes)")
    args = ap.parse_args()
    levels = args.levels or (sorted(TABLE3) if args.all else CHEAP)
    for N in levels:
        r = crosscheck_hauptmodul(N)
        consts = ", ".join(rational_str(c) for c in r.constants)
        status = "ok" if r.ok else f"breaks at q^{r.first_bad}"
        fixed = " (corrected sign)" if any(n == N for n, _ in TABLE3_ERRATA) else ""
        print(f"N={N:>3}  through q^{r.through:<3} constants [{consts}]  {status}{fixed}", flush=True)


if __name__ == "__main__":
    main()
