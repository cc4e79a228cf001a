"""Bounded exact solvers for the three leaf path contracts.

All three reduce to one coverage-targeted backtracking search: grow paths one
at a time from the sources, jump to the next unused source whenever the head
steps onto a sink, and stop at the first path system whose vertex count
reaches the target. Pruning is an upper bound on reachable coverage that
combines flood fill with the bipartite balance of an alternating path.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import BudgetExceeded, ExceptionCase, PreconditionViolation
from .faults import is_conditionally_fault_free
from .hypercube import (
    Path,
    Relabel,
    adjacent,
    at_least_two_neighbors,
    check_dimension,
    distance,
    expand,
    flood,
    full_mask,
    parity,
    parity_mask,
    set_distance,
    to_mask,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolverBudget:
    max_dimension: int = 7
    node_limit: int = 50_000_000
    first_attempt: int = 4_000

    def __post_init__(self):
        if self.max_dimension < 3:
            raise ValueError("max_dimension must be at least 3")


DEFAULT_BUDGET = SolverBudget()


@lru_cache(maxsize=None)
def _neighbor_masks(n: int) -> tuple[int, ...]:
    return tuple(to_mask(v ^ (1 << i) for i in range(n)) for v in range(1 << n))


class _Search:
    """One depth-first search over a fixed labelling."""

    def __init__(self, n, blocked, sources, sinks, target, limit):
        self.n = n
        self.target = target
        self.limit = limit
        self.nodes = 0
        self.xmask = parity_mask(n)
        self.nb = _neighbor_masks(n)
        self.sources = list(sources)
        self.sink_list = list(sinks)
        ends = to_mask(self.sources) | to_mask(self.sink_list)
        self.free = full_mask(n) & ~blocked & ~ends
        self.sinks = to_mask(self.sink_list)
        self.paths: list[list[int]] = []
        self.visited = 0
        self.best: list[list[int]] | None = None
        self.best_count = -1

    def sign(self, v):
        return 1 if (self.xmask >> v) & 1 else -1

    def feasible(self, head, nxt):
        n = self.n
        rest = self.sources[nxt:]
        if not self.nb[head] & (self.free | self.sinks):
            return False
        starts = (1 << head) | to_mask(rest)
        sinks = self.sinks
        alive = self.free | starts | sinks
        cand = self.free & at_least_two_neighbors(alive, n)
        region = flood(expand(starts, n) & cand, cand, n)
        reach = region | starts
        for t in self._members(sinks):
            if not self.nb[t] & reach:
                return False
        for s in rest:
            if not self.nb[s] & (region | sinks):
                return False
        ax = (region & self.xmask).bit_count()
        ay = region.bit_count() - ax
        src_sum = sum(self.sign(s) for s in rest)
        sink_sum = sum(self.sign(t) for t in self._members(sinks))
        ch = self.sign(head)
        total = (src_sum + ch + sink_sum) // 2 - ch
        d_int = total - src_sum - sink_sum
        if d_int >= 0:
            y = min(ay, ax - d_int)
            if y < 0:
                return False
            extra = 2 * y + d_int
        else:
            x = min(ax, ay + d_int)
            if x < 0:
                return False
            extra = 2 * x - d_int
        paths_left = 1 + len(rest)
        return self.visited + len(rest) + paths_left + extra >= self.target

    @staticmethod
    def _members(mask):
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def _note_best(self):
        if self.visited > self.best_count:
            self.best_count = self.visited
            self.best = [list(p) for p in self.paths]

    def run(self):
        s = self.sources[0]
        self.paths.append([s])
        self.visited = 1
        found = self._extend(s, 1)
        return [tuple(p) for p in self.paths] if found else None

    def _extend(self, head, nxt):
        self.nodes += 1
        if self.nodes > self.limit:
            raise BudgetExceeded(f"node limit {self.limit} reached", self.best)
        if not self.feasible(head, nxt):
            return False
        free = self.free
        onward = free | self.sinks
        moves = []
        m = self.nb[head] & free
        while m:
            low = m & -m
            w = low.bit_length() - 1
            m ^= low
            moves.append(((self.nb[w] & onward).bit_count(), w))
        moves.sort()
        path = self.paths[-1]
        for _, w in moves:
            self.free &= ~(1 << w)
            path.append(w)
            self.visited += 1
            if self._extend(w, nxt):
                return True
            self.visited -= 1
            path.pop()
            self.free |= 1 << w
        m = self.nb[head] & self.sinks
        while m:
            low = m & -m
            t = low.bit_length() - 1
            m ^= low
            self.sinks &= ~low
            path.append(t)
            self.visited += 1
            if nxt == len(self.sources):
                self._note_best()
                if self.visited >= self.target:
                    return True
            else:
                s = self.sources[nxt]
                self.paths.append([s])
                self.visited += 1
                if self._extend(s, nxt + 1):
                    return True
                self.visited -= 1
                self.paths.pop()
            self.visited -= 1
            path.pop()
            self.sinks |= low
        return False


def _attempt_labellings(n: int):
    """Deterministic sequence of automorphisms used for restarts.

    The identity comes first; later attempts use seeded random coordinate
    permutations and translations, which spread restarts much better than
    rotations alone.
    """
    yield Relabel.identity(n)
    rng = random.Random(n)
    while True:
        perm = list(range(n))
        rng.shuffle(perm)
        yield Relabel(n, tuple(perm), rng.randrange(1 << n))


def search_paths(
    n: int,
    blocked: Iterable[int],
    sources: Sequence[int],
    sinks: Sequence[int],
    target: int,
    budget: SolverBudget = DEFAULT_BUDGET,
) -> list[Path] | None:
    """Find disjoint source-to-sink paths avoiding ``blocked`` with >= ``target`` vertices.

    The pairing of sources to sinks is free. Returns ``None`` when the search
    space is exhausted without success, which proves no such system exists.
    Raises :class:`BudgetExceeded` when ``budget.node_limit`` nodes are spent
    across all restarts.
    """
    check_dimension(n)
    if n > budget.max_dimension:
        raise BudgetExceeded(f"n={n} exceeds max_dimension={budget.max_dimension}")
    blocked = list(blocked)
    spent = 0
    limit = budget.first_attempt
    best = None
    for i, rl in enumerate(_attempt_labellings(n)):
        cap = min(limit, budget.node_limit - spent)
        if cap <= 0:
            break
        inv = rl.inverse()
        search = _Search(
            n,
            to_mask(rl(v) for v in blocked),
            [rl(v) for v in sources],
            [rl(v) for v in sinks],
            target,
            cap,
        )
        try:
            found = search.run()
        except BudgetExceeded:
            spent += search.nodes
            if search.best is not None:
                best = inv.paths(search.best)
            if i % 2:
                limit *= 2
            continue
        if found is None:
            return None
        return inv.paths(found)
    raise BudgetExceeded(f"search exceeded node limit {budget.node_limit}", best)


# -- solver contracts ------------------------------------------------------


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise PreconditionViolation(message)


def _recheck(n, faults, sources, sinks, paths, target):
    from .verify import check_paths

    report = check_paths(n, faults, sources, sinks, paths, target)
    if not report.passed:
        raise AssertionError(f"solver produced invalid output: {report.failures}")


def long_path(n: int, faults: Iterable[int], x: int, y: int, budget: SolverBudget = DEFAULT_BUDGET) -> Path:
    """Fault-free x-y path with at least 2^n - 2f vertices (odd distance) or one fewer (even)."""
    check_dimension(n)
    faults = frozenset(faults)
    f = len(faults)
    _require(n >= 3, f"n={n} below 3")
    _require(f <= 2 * n - 5, f"f={f} exceeds 2n-5={2 * n - 5}")
    _require(x != y, "x and y must differ")
    _require(x not in faults and y not in faults, "endpoints must be fault-free")
    _require(0 <= x < 1 << n and 0 <= y < 1 << n, "endpoint outside Q_n")
    _require(is_conditionally_fault_free(n, faults), "fault set violates the conditional predicate")
    target = (1 << n) - 2 * f - (0 if distance(x, y) % 2 else 1)
    found = search_paths(n, faults, [x], [y], target, budget)
    if found is None:
        raise PreconditionViolation(f"no {x}-{y} path with {target} vertices exists")
    _recheck(n, faults, [x], [y], found, target)
    return found[0]


def disjoint_paths_small(
    n: int,
    faults: Iterable[int],
    sources: Sequence[int],
    sinks: Sequence[int],
    budget: SolverBudget = DEFAULT_BUDGET,
) -> list[Path]:
    """k disjoint fault-free S-T paths covering at least 2^n - 2f vertices, for f <= n-k-1."""
    check_dimension(n)
    faults = frozenset(faults)
    k, f = len(sources), len(faults)
    _require(n >= 2, f"n={n} below 2")
    _require(len(sinks) == k and 1 <= k <= n - 1, f"k={k} outside [1, n-1]")
    _require(f <= n - k - 1, f"f={f} exceeds n-k-1={n - k - 1}")
    _require(len(set(sources) | set(sinks)) == 2 * k, "S and T must be disjoint sets")
    _require(not (set(sources) | set(sinks)) & faults, "endpoints must be fault-free")
    _require(
        len({parity(v) for v in sources}) == 1
        and len({parity(v) for v in sinks}) == 1
        and parity(sources[0]) != parity(sinks[0]),
        "S and T must lie in different partite sets",
    )
    target = (1 << n) - 2 * f
    found = search_paths(n, faults, sources, sinks, target, budget)
    if found is None:
        raise PreconditionViolation("no path system meets the bound")
    _recheck(n, faults, sources, sinks, found, target)
    return found


def is_exception_case(n: int, x: int, y: int, u: int, v: int) -> bool:
    return n == 3 and distance(u, v) == 1 and set_distance((x, y), (u, v)) == 2


def spanning_path_avoiding_edge(
    n: int, x: int, y: int, u: int, v: int, budget: SolverBudget = DEFAULT_BUDGET
) -> Path:
    """u-v path through every vertex of Q_n except the adjacent pair x, y."""
    check_dimension(n)
    _require(n >= 3, f"n={n} below 3")
    _require(adjacent(x, y), "x and y must be adjacent")
    _require(not {x, y} & {u, v} and u != v, "{x, y} and {u, v} must be disjoint pairs")
    _require(distance(u, v) % 2 == 1, "d(u, v) must be odd")
    if is_exception_case(n, x, y, u, v):
        raise ExceptionCase("n=3, d(u,v)=1 and d({x,y},{u,v})=2: no spanning path exists")
    target = (1 << n) - 2
    found = search_paths(n, (x, y), [u], [v], target, budget)
    if found is None:
        raise PreconditionViolation("no spanning path exists")
    _recheck(n, {x, y}, [u], [v], found, target)
    return found[0]
