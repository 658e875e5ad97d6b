"""Print the two identities found for a level, as LaTeX or plain text."""

import argparse

from hauptmodul.jst import run_jst
from hauptmodul.serialize import result_to_latex, result_to_text


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("level", type=int)
    ap.add_argument("--variant", choices=["jst2", "jst3"], default="jst3")
    ap.add_argument("--latex", action="store_true")
    args = ap.parse_args()
    r = run_jst(args.level, args.variant)
    print(result_to_latex(r) if args.latex else result_to_text(r))


if __name__ == "__main__":
    main()
