"""Tabulate every proportional spin/linear Brauer pair up to a size bound.

For each size the scan compares every spin Brauer vector against every
linear one; the classification predicts the hits, so the script prints
both and flags any disagreement.  With --cache the character tables are
reused across runs.

Usage: python3 scripts/scan_pairs.py --max-n 12 [--cache .cache]
"""

import argparse
import sys

from barspin import charvalues, classify
from barspin.partitions import format_partition
from barspin.scalars import sqrt2_pow


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--cache", default=None)
    args = ap.parse_args(argv)

    mismatches = 0
    total = 0
    for n in range(1, args.max_n + 1):
        got = charvalues.scan(n, args.cache)
        want = sorted(
            ((al, la, sqrt2_pow(e)) for al, la, e in classify.predicted_pairs(n)),
            key=lambda rec: (rec[0], rec[1]),
        )
        mark = "" if got == want else "   <-- differs from prediction"
        if got != want:
            mismatches += 1
        print(f"n={n}: {len(got)} proportional pairs{mark}")
        for al, la, c in got:
            dec = classify.fsas_decompose(al)
            tag = f"(a,r,s)=({dec.a},{dec.r},{dec.s})" if dec else "unclassified"
            print(
                f"  <<{format_partition(al)}>> = {c} * [{format_partition(la)}]   {tag}"
            )
            total += 1
    print(f"\n{total} pairs through n={args.max_n}; "
          f"{mismatches} sizes disagree with the prediction")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
