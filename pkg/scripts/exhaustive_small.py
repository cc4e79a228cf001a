"""Exhaustive check at n = 3, 4 against the brute-force optimum.

For every theorem-mode instance (sources in the even class) the routed
coverage, the bound 2^n - 2f and the true optimum are compared. The slack
histogram shows how far the construction lands above the bound.
"""

from collections import Counter

from cubepaths.campaign import exhaustive_instances
from cubepaths.router import route
from cubepaths.verify import brute_force_best, verify


def main():
    for n, k in [(3, 1), (4, 1), (4, 2)]:
        over_bound = Counter()
        below_opt = Counter()
        bad = 0
        for inst in exhaustive_instances(n, k):
            paths, _ = route(inst)
            cov = verify(inst, paths).coverage
            best, _ = brute_force_best(inst)
            bad += not (inst.bound <= cov <= best)
            over_bound[cov - inst.bound] += 1
            below_opt[best - cov] += 1
        total = sum(over_bound.values())
        print(f"n={n} k={k}: {total} instances, {bad} violations")
        print(f"  coverage - bound:   {dict(sorted(over_bound.items()))}")
        print(f"  optimum - coverage: {dict(sorted(below_opt.items()))}")


if __name__ == "__main__":
    main()
