"""Fault sets, routing instances and the conditional-fault predicate."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NoValidDimension, PreconditionViolation
from .hypercube import (
    SplitContext,
    at_least_two_neighbors,
    check_dimension,
    full_mask,
    parity,
    split,
    to_mask,
)


@dataclass(frozen=True)
class Instance:
    """A routing problem: ``k`` disjoint paths from ``sources`` to ``sinks``."""

    n: int
    k: int
    faults: frozenset[int]
    sources: tuple[int, ...]
    sinks: tuple[int, ...]

    @classmethod
    def make(cls, n: int, faults: Iterable[int], sources: Iterable[int], sinks: Iterable[int]):
        sources = tuple(sources)
        return cls(n, len(sources), frozenset(faults), sources, tuple(sinks))

    @property
    def f(self) -> int:
        return len(self.faults)

    @property
    def bound(self) -> int:
        return (1 << self.n) - 2 * self.f

    def structural_violations(self) -> list[str]:
        """Problems with the instance as data, independent of the theorem hypotheses."""
        out = []
        n, size = self.n, 1 << self.n
        labels = [*self.faults, *self.sources, *self.sinks]
        bad = [v for v in labels if not 0 <= v < size]
        if bad:
            out.append(f"labels {sorted(bad)} outside Q_{n}")
        if len(self.sources) != self.k or len(self.sinks) != self.k:
            out.append(f"|S|={len(self.sources)}, |T|={len(self.sinks)} but k={self.k}")
        if len(set(self.sources)) != len(self.sources) or len(set(self.sinks)) != len(self.sinks):
            out.append("repeated vertex in S or T")
        if set(self.sources) & set(self.sinks):
            out.append("S and T intersect")
        hit = (set(self.sources) | set(self.sinks)) & self.faults
        if hit:
            out.append(f"faulty endpoints {sorted(hit)}")
        return out

    def hypothesis_violations(self) -> list[str]:
        n, k, f = self.n, self.k, self.f
        out = []
        if n < 3:
            out.append(f"n={n} below 3")
        if not 1 <= k <= n - 2:
            out.append(f"k={k} outside [1, n-2={n - 2}]")
        if f > 2 * n - 2 * k - 3:
            out.append(f"f={f} exceeds 2n-2k-3={2 * n - 2 * k - 3}")
        classes_s = {parity(v) for v in self.sources}
        classes_t = {parity(v) for v in self.sinks}
        if len(classes_s) > 1 or len(classes_t) > 1 or (classes_s and classes_s == classes_t):
            out.append("S and T must lie in different partite sets")
        if not is_conditionally_fault_free(n, self.faults):
            out.append("some fault-free vertex has fewer than two fault-free neighbors")
        return out

    def check_theorem_mode(self) -> None:
        check_dimension(self.n)
        problems = self.structural_violations() + self.hypothesis_violations()
        if problems:
            raise PreconditionViolation("; ".join(problems))


def is_conditionally_fault_free(n: int, faults: Iterable[int]) -> bool:
    free = full_mask(n) & ~to_mask(faults)
    return free & ~at_least_two_neighbors(free, n) == 0


def half_is_conditional(ctx: SplitContext, fault_mask: int, side: str) -> bool:
    """Predicate for one half, viewed as Q_{n-1} with the faults it contains."""
    free = ctx.half_mask(side) & ~fault_mask
    return free & ~at_least_two_neighbors(free, ctx.n) == 0


def split_fault_counts(faults: Iterable[int], ctx: SplitContext) -> tuple[int, int]:
    f_l = f_r = 0
    for v in faults:
        if ctx.in_left(v):
            f_l += 1
        else:
            f_r += 1
    return f_l, f_r


def valid_split_dimensions(n: int, faults: Iterable[int]) -> list[int]:
    fm = to_mask(faults)
    out = []
    for j in range(1, n + 1):
        ctx = split(n, j)
        if half_is_conditional(ctx, fm, "L") and half_is_conditional(ctx, fm, "R"):
            out.append(j)
    return out


def choose_split_dimension(inst: Instance) -> SplitContext:
    """Smallest ``j`` whose halves both satisfy the conditional predicate.

    Which half counts as L is settled later by relabelling, so every valid
    ``j`` can be made to satisfy ``f_L <= f_R``.
    """
    valid = valid_split_dimensions(inst.n, inst.faults)
    if not valid:
        raise NoValidDimension(f"no split dimension of Q_{inst.n} keeps both halves conditional")
    return split(inst.n, valid[0])
