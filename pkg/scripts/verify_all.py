"""Run every verification suite and summarize the outcome.

Each suite sweeps one family of identities to its default bound unless
--max-n overrides it.  Exits 0 only if everything passes, so the script
doubles as a CI gate.  --json writes the full machine-readable reports.

Usage: python3 scripts/verify_all.py [--max-n 10] [--json reports.json]
"""

import argparse
import json
import sys

from barspin import verify


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=None)
    ap.add_argument("--json", default=None, help="write full reports to this file")
    args = ap.parse_args(argv)

    reports = verify.run_all(args.max_n)
    width = max(len(rep.suite) for rep in reports)
    for rep in reports:
        status = "PASS" if rep.ok else "FAIL"
        print(
            f"{rep.suite:<{width}}  {status}  "
            f"{len(rep.cases):>3} cases  maxN={rep.max_n:<3} {rep.millis} ms"
        )
        if not rep.ok:
            for case in rep.cases:
                if not case.ok:
                    print(f"    {case.input}")
                    print(f"      expected: {case.expected}")
                    print(f"      actual:   {case.actual}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([rep.to_dict() for rep in reports], fh, indent=2)
        print(f"reports written to {args.json}")
    return 0 if all(rep.ok for rep in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
