"""Why did the construction fall back? Groups fallback reasons by case.

Routes seeded random instances and collects the ``branch`` note recorded on
every SolverFallback level, so gaps in the constructive branches can be
audited.

    python scripts/fallback_report.py --n 6 --k 2 --samples 2000
"""

import argparse
import random
from collections import Counter

from cubepaths.campaign import random_instance
from cubepaths.router import CaseTag, route


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    reasons = Counter()
    partial = Counter()
    for _ in range(args.samples):
        _, trace = route(random_instance(args.n, args.k, rng))
        for rec in trace.records:
            if rec.case is CaseTag.FALLBACK:
                reasons[rec.branch[:100]] += 1
            elif rec.case is CaseTag.CASE1_2B:
                partial[rec.branch or "(no branch note)"] += 1
    print(f"SolverFallback levels over {args.samples} instances:")
    for why, c in reasons.most_common():
        print(f"  {c:6d}  {why}")
    print("Case1_2b_fallback branches:")
    for why, c in partial.most_common():
        print(f"  {c:6d}  {why}")


if __name__ == "__main__":
    main()
