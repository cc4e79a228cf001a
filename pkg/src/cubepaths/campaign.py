"""Theorem-mode instance generation and route-and-verify campaigns."""

from __future__ import annotations

import itertools
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import CubePathsError, InvalidArgument
from .faults import Instance, is_conditionally_fault_free
from .files import instance_to_dict
from .hypercube import parity, Parity
from .router import route
from .solvers import DEFAULT_BUDGET, SolverBudget
from .verify import verify


def max_faults(n: int, k: int) -> int:
    return 2 * n - 2 * k - 3


def conditional_fault_sets(n: int, max_f: int) -> Iterator[frozenset[int]]:
    """Every fault set of size <= ``max_f`` satisfying the conditional predicate."""
    for f in range(max_f + 1):
        for combo in itertools.combinations(range(1 << n), f):
            if is_conditionally_fault_free(n, combo):
                yield frozenset(combo)


def exhaustive_instances(n: int, k: int) -> Iterator[Instance]:
    """All theorem-mode instances with S in the even class X and T in Y."""
    for faults in conditional_fault_sets(n, max_faults(n, k)):
        xs = [v for v in range(1 << n) if v not in faults and parity(v) is Parity.X]
        ys = [v for v in range(1 << n) if v not in faults and parity(v) is Parity.Y]
        for S in itertools.combinations(xs, k):
            for T in itertools.combinations(ys, k):
                yield Instance(n, k, faults, S, T)


def random_instance(n: int, k: int, rng: random.Random, f: Optional[int] = None) -> Instance:
    """Rejection-sample a conditional fault set of size ``f``, then S and T."""
    f = max_faults(n, k) if f is None else f
    vertices = range(1 << n)
    while True:
        faults = frozenset(rng.sample(vertices, f))
        if is_conditionally_fault_free(n, faults):
            break
    xs = [v for v in vertices if v not in faults and parity(v) is Parity.X]
    ys = [v for v in vertices if v not in faults and parity(v) is Parity.Y]
    if rng.random() < 0.5:
        xs, ys = ys, xs
    return Instance(n, k, faults, tuple(rng.sample(xs, k)), tuple(rng.sample(ys, k)))


def random_instances(n: int, k: int, samples: int, seed: int) -> Iterator[Instance]:
    rng = random.Random(seed)
    for _ in range(samples):
        yield random_instance(n, k, rng)


@dataclass
class Outcome:
    ok: bool
    fallback: bool
    solver_fallback: bool
    tags: list[str]
    error: str = ""


def run_one(inst: Instance, budget: SolverBudget = DEFAULT_BUDGET) -> Outcome:
    try:
        paths, trace = route(inst, budget)
    except CubePathsError as exc:
        return Outcome(False, False, False, [], f"{type(exc).__name__}: {exc}")
    rep = verify(inst, paths)
    return Outcome(
        rep.passed,
        trace.used_fallback,
        trace.used_solver_fallback,
        trace.tags,
        "" if rep.passed else "; ".join(rep.failures[:3]),
    )


@dataclass
class CampaignSummary:
    n: int
    k: int
    mode: str
    seed: Optional[int]
    instances: int = 0
    passed: int = 0
    failed: int = 0
    fallback_used: int = 0
    solver_fallback_used: int = 0
    case_counts: Counter = field(default_factory=Counter)
    runtime: float = 0.0
    counterexample: Optional[Instance] = None
    error: str = ""

    @property
    def fallback_rate(self) -> float:
        return self.fallback_used / self.instances if self.instances else 0.0

    def as_dict(self, timing: bool = False) -> dict:
        """Summary document. Wall-clock time is left out unless asked for, so
        a seeded campaign always writes the same bytes."""
        out = {
            "n": self.n,
            "k": self.k,
            "mode": self.mode,
            "seed": self.seed,
            "instances": self.instances,
            "passed": self.passed,
            "failed": self.failed,
            "fallback_used": self.fallback_used,
            "solver_fallback_used": self.solver_fallback_used,
            "fallback_rate": round(self.fallback_rate, 6),
            "case_counts": dict(sorted(self.case_counts.items())),
            "counterexample": instance_to_dict(self.counterexample) if self.counterexample else None,
            "error": self.error,
        }
        if timing:
            out["runtime_s"] = round(self.runtime, 3)
        return out


EXHAUSTIVE_MAX_DIMENSION = 4
RANDOMIZED_MAX_DIMENSION = 7


def check_campaign(n: int, k: int, mode: str, samples: int = 1, workers: int = 1) -> None:
    if mode not in ("exhaustive", "randomized"):
        raise InvalidArgument(f"unknown mode {mode!r}")
    cap = EXHAUSTIVE_MAX_DIMENSION if mode == "exhaustive" else RANDOMIZED_MAX_DIMENSION
    if not 3 <= n <= cap:
        raise InvalidArgument(f"{mode} campaigns need 3 <= n <= {cap}, got n={n}")
    if not 1 <= k <= n - 2:
        raise InvalidArgument(f"k={k} outside [1, n-2={n - 2}]")
    if samples < 0 or workers < 1:
        raise InvalidArgument("samples must be >= 0 and workers >= 1")


def _work(args):
    inst, budget = args
    return inst, run_one(inst, budget)


def enumerate_check(
    n: int,
    k: int,
    mode: str = "randomized",
    samples: int = 1000,
    seed: int = 0,
    workers: int = 1,
    budget: SolverBudget = DEFAULT_BUDGET,
    progress=None,
) -> CampaignSummary:
    """Route and verify many instances; stop at the first failure."""
    check_campaign(n, k, mode, samples, workers)
    if mode == "exhaustive":
        insts = exhaustive_instances(n, k)
    else:
        insts = random_instances(n, k, samples, seed)
    summary = CampaignSummary(n, k, mode, seed if mode == "randomized" else None)
    start = time.perf_counter()

    jobs = ((inst, budget) for inst in insts)
    if workers > 1:
        import multiprocessing

        pool = multiprocessing.Pool(workers)
        results = pool.imap(_work, jobs, chunksize=16)
    else:
        pool = None
        results = map(_work, jobs)
    try:
        for inst, out in results:
            summary.instances += 1
            summary.case_counts.update(out.tags)
            summary.fallback_used += out.fallback
            summary.solver_fallback_used += out.solver_fallback
            if out.ok:
                summary.passed += 1
            else:
                summary.failed += 1
                summary.counterexample = inst
                summary.error = out.error
                break
            if progress is not None:
                progress(summary)
    finally:
        if pool is not None:
            pool.terminate()
    summary.runtime = time.perf_counter() - start
    return summary
