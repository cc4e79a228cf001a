"""Seeded route-and-verify campaigns over a grid of (n, k) at maximal f.

Prints one row per (n, k) with failures, fallback rate and per-case counts,
and optionally writes the summaries as JSON.

    python scripts/run_campaigns.py --samples 10000 --out campaigns.json
"""

import argparse
import json

from cubepaths.campaign import enumerate_check

GRID = [(5, 1), (5, 2), (5, 3), (6, 1), (6, 2), (6, 3), (6, 4), (7, 1), (7, 2), (7, 3), (7, 4), (7, 5)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0, help="base seed; each cell uses seed + 1000n + k")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--n", type=int, nargs="*", help="restrict to these dimensions")
    ap.add_argument("--out")
    args = ap.parse_args()

    rows = []
    print(f"{'n':>2} {'k':>2} {'f':>2} {'inst':>7} {'fail':>5} {'fallback':>9} {'time':>7}  cases")
    for n, k in GRID:
        if args.n and n not in args.n:
            continue
        s = enumerate_check(n, k, "randomized", args.samples, args.seed + 1000 * n + k, args.workers)
        cases = " ".join(f"{c}={v}" for c, v in sorted(s.case_counts.items()))
        print(f"{n:>2} {k:>2} {2*n-2*k-3:>2} {s.instances:>7} {s.failed:>5} {s.fallback_rate:>9.4f} {s.runtime:>6.1f}s  {cases}",
              flush=True)
        rows.append(s.as_dict(timing=True))
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
