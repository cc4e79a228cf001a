"""Independent checking of path systems, plus an exhaustive oracle for tiny cubes.

Nothing here imports the constructive code: adjacency, coverage and the
endpoint bijection are recomputed from the raw vertex labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DimensionTooLarge


@dataclass
class VerifyReport:
    disjoint: bool = True
    fault_free: bool = True
    endpoints_bijection: bool = True
    all_edges_valid: bool = True
    coverage: int = 0
    bound: int = 0
    meets_bound: bool = False
    failures: list[str] = field(default_factory=list)
    pairing: dict[int, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return (
            self.disjoint
            and self.fault_free
            and self.endpoints_bijection
            and self.all_edges_valid
            and self.meets_bound
        )

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "disjoint": self.disjoint,
            "fault_free": self.fault_free,
            "endpoints_bijection": self.endpoints_bijection,
            "all_edges_valid": self.all_edges_valid,
            "coverage": self.coverage,
            "bound": self.bound,
            "meets_bound": self.meets_bound,
            "failures": list(self.failures),
        }


def _one_bit(a: int, b: int) -> bool:
    x = a ^ b
    return x != 0 and x & (x - 1) == 0


def check_paths(
    n: int,
    faults: Iterable[int],
    sources: Sequence[int],
    sinks: Sequence[int],
    paths: Sequence[Sequence[int]],
    bound: int,
) -> VerifyReport:
    """Check every clause of a claimed path system against a coverage bound."""
    faults = set(faults)
    src, snk = set(sources), set(sinks)
    rep = VerifyReport(bound=bound)
    size = 1 << n

    for i, p in enumerate(paths):
        if not p:
            rep.all_edges_valid = False
            rep.failures.append(f"path {i} is empty")
            continue
        out = [v for v in p if not 0 <= v < size]
        if out:
            rep.all_edges_valid = False
            rep.failures.append(f"path {i} has labels {out} outside Q_{n}")
        if len(set(p)) != len(p):
            rep.all_edges_valid = False
            rep.failures.append(f"path {i} repeats a vertex")
        for a, b in zip(p, p[1:]):
            if not _one_bit(a, b):
                rep.all_edges_valid = False
                rep.failures.append(f"path {i}: {a}-{b} is not an edge")
        bad = [v for v in p if v in faults]
        if bad:
            rep.fault_free = False
            rep.failures.append(f"path {i} visits faulty vertices {bad}")

    owner: dict[int, int] = {}
    for i, p in enumerate(paths):
        for v in p:
            if v in owner and owner[v] != i:
                rep.disjoint = False
                rep.failures.append(f"vertex {v} shared by paths {owner[v]} and {i}")
            owner.setdefault(v, i)
    rep.coverage = len(owner)
    rep.meets_bound = rep.coverage >= bound
    if not rep.meets_bound:
        rep.failures.append(f"coverage {rep.coverage} below bound {bound}")

    used_s: set[int] = set()
    used_t: set[int] = set()
    ok = len(paths) == len(sources) == len(sinks)
    if not ok:
        rep.failures.append(f"{len(paths)} paths for {len(sources)} sources")
    for i, p in enumerate(paths):
        if not p:
            ok = False
            continue
        a, b = p[0], p[-1]
        if a in snk and b in src:
            a, b = b, a
        if a in src and b in snk and a not in used_s and b not in used_t:
            used_s.add(a)
            used_t.add(b)
            rep.pairing[a] = b
        else:
            ok = False
            rep.failures.append(f"path {i} endpoints ({p[0]}, {p[-1]}) do not pair S with T")
        inner = [v for v in p[1:-1] if v in src or v in snk]
        if inner:
            ok = False
            rep.failures.append(f"path {i} passes through endpoints {inner}")
    if used_s != src or used_t != snk:
        ok = False
        if len(paths) == len(sources):
            rep.failures.append("endpoints do not form a bijection S -> T")
    rep.endpoints_bijection = ok
    return rep


def verify(inst, paths: Sequence[Sequence[int]]) -> VerifyReport:
    """Check ``paths`` against every clause of the theorem for ``inst``."""
    return check_paths(inst.n, inst.faults, inst.sources, inst.sinks, paths, inst.bound)


# -- exhaustive oracle -----------------------------------------------------

ORACLE_MAX_DIMENSION = 4


def brute_force_best(inst) -> tuple[int, list[tuple[int, ...]]] | None:
    """Exact maximum coverage over all disjoint fault-free S-T path systems.

    Plain backtracking over adjacency lists; stops early once the bipartite
    upper bound is reached. Returns ``None`` if no system exists.
    """
    n = inst.n
    if n > ORACLE_MAX_DIMENSION:
        raise DimensionTooLarge(f"oracle limited to n <= {ORACLE_MAX_DIMENSION}")
    size = 1 << n
    adj = [[v ^ (1 << i) for i in range(n)] for v in range(size)]
    faults = set(inst.faults)
    sources = list(inst.sources)
    sinks = set(inst.sinks)
    endpoint = set(sources) | sinks
    used = [v in faults for v in range(size)]
    for v in endpoint:
        used[v] = True

    healthy = [v for v in range(size) if v not in faults]
    even = sum(1 for v in healthy if bin(v).count("1") % 2 == 0)
    odd = len(healthy) - even
    cross = bin(sources[0]).count("1") % 2 != bin(next(iter(sinks))).count("1") % 2
    ceiling = 2 * min(even, odd) if cross else len(healthy)

    best = [-1, None]
    paths: list[list[int]] = []
    free_left = [sum(1 for v in range(size) if not used[v])]

    class _Done(Exception):
        pass

    def step(head, idx, count):
        path = paths[-1]
        for w in adj[head]:
            if w in sinks and not used_sink[w]:
                used_sink[w] = True
                path.append(w)
                if idx == len(sources):
                    if count + 1 > best[0]:
                        best[0] = count + 1
                        best[1] = [tuple(p) for p in paths]
                        if best[0] >= ceiling:
                            raise _Done
                else:
                    paths.append([sources[idx]])
                    step(sources[idx], idx + 1, count + 2)
                    paths.pop()
                path.pop()
                used_sink[w] = False
            elif not used[w]:
                if count + free_left[0] + 2 * (len(sources) - idx) + 1 <= best[0]:
                    continue
                used[w] = True
                free_left[0] -= 1
                path.append(w)
                step(w, idx, count + 1)
                path.pop()
                free_left[0] += 1
                used[w] = False

    used_sink = {t: False for t in sinks}
    paths.append([sources[0]])
    try:
        step(sources[0], 1, 1)
    except _Done:
        pass
    if best[1] is None:
        return None
    return best[0], best[1]
