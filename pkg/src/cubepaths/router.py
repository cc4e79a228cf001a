"""Recursive construction of k disjoint fault-free S-T paths in a faulty Q_n.

Each level splits Q_n into halves L and R along a dimension that keeps both
halves conditionally fault-free, renames sides (and, if needed, swaps the
roles of S and T) so the bookkeeping always looks the same, and dispatches:

* Case 1: S and T on one side. Recurse there and detour one path through a
  long path of the other half; when that side carries too many faults, run
  the recursion with one fault lifted and repair the path through it, or
  route one endpoint pair less and reattach it through R.
* Case 2: balance the halves with pad vertices, recurse in both, glue.
* Case 3: all sinks in R and R heavily faulted. Recurse with one sink held
  back and reattach it using a temporarily faulted vertex or the
  spanning-paths-avoiding-an-edge construction.

Base levels (k = 1, k = n - 2) go to the exact solvers. Any branch whose side
conditions fail falls back to exact search on that level's subproblem and is
tagged so campaigns can count it.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import ConstructionFailure, CubePathsError
from .faults import Instance, choose_split_dimension, is_conditionally_fault_free
from .halves import connect, down, up
from .hypercube import Path, Relabel, adjacent, parity
from .edge_avoiding import spanning_disjoint_paths_avoiding_edge
from .pathops import join, splice, subpath
from .solvers import DEFAULT_BUDGET, SolverBudget, disjoint_paths_small, long_path, search_paths
from .verify import check_paths, verify

__all__ = ["CaseTag", "LevelRecord", "RouteTrace", "route", "splice", "subpath"]

log = logging.getLogger(__name__)


class CaseTag(str, enum.Enum):
    CASE1_1 = "Case1_1"
    CASE1_2A = "Case1_2a"
    CASE1_2B = "Case1_2b_fallback"
    CASE2 = "Case2"
    CASE3A = "Case3a"
    CASE3B = "Case3b"
    BASE_K1 = "BaseK1"
    BASE_KMAX = "BaseKmax"
    BASE_SMALL_N = "BaseSmallN"
    FALLBACK = "SolverFallback"


FALLBACK_TAGS = frozenset({CaseTag.CASE1_2B, CaseTag.FALLBACK})


@dataclass
class LevelRecord:
    depth: int
    n: int
    k: int
    f: int
    case: CaseTag
    j: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None
    f_l: Optional[int] = None
    f_r: Optional[int] = None
    branch: str = ""
    seams: list[tuple[int, int]] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "depth": self.depth,
            "n": self.n,
            "k": self.k,
            "f": self.f,
            "case": self.case.value,
            "j": self.j,
            "p": self.p,
            "q": self.q,
            "f_L": self.f_l,
            "f_R": self.f_r,
            "branch": self.branch,
            "seams": [list(s) for s in self.seams],
        }


@dataclass
class RouteTrace:
    records: list[LevelRecord] = field(default_factory=list)

    @property
    def tags(self) -> list[str]:
        return [r.case.value for r in self.records]

    @property
    def used_fallback(self) -> bool:
        return any(r.case in FALLBACK_TAGS for r in self.records)

    @property
    def used_solver_fallback(self) -> bool:
        return any(r.case is CaseTag.FALLBACK for r in self.records)


class _Retry(ConstructionFailure):
    """The current choice of held-back sink does not work; try another."""


def _theorem_mode(n, k, faults) -> bool:
    return (
        n >= 3
        and 1 <= k <= n - 2
        and len(faults) <= 2 * n - 2 * k - 3
        and is_conditionally_fault_free(n, faults)
    )


def _frame_ok(k, p, q, f_l, f_r, flip, swap) -> bool:
    if flip:
        p, q, f_l, f_r = k - p, k - q, f_r, f_l
    if swap:
        p, q = q, p
    return p >= q and f_l <= f_r


def _orient(paths: Sequence[Path], sources: Sequence[int]) -> list[Path]:
    src = set(sources)
    return [p if p[0] in src else p[::-1] for p in paths]


def _path_with(paths: Sequence[Path], v: int) -> int:
    for i, p in enumerate(paths):
        if v in p:
            return i
    return -1


class _Router:
    def __init__(self, budget: SolverBudget):
        self.budget = budget
        self.records: list[LevelRecord] = []

    # -- entry per level ---------------------------------------------------

    def solve(self, n, faults, S, T, depth=0) -> list[Path]:
        faults = frozenset(faults)
        S, T = list(S), list(T)
        k, f = len(S), len(faults)
        target = (1 << n) - 2 * f
        mark = len(self.records)

        if not _theorem_mode(n, k, faults):
            return self._fallback(n, faults, S, T, depth, "hypotheses fail at this level")
        if k == 1:
            self._record(depth, n, k, f, CaseTag.BASE_K1)
            return [long_path(n, faults, S[0], T[0], self.budget)]
        if k == n - 2:
            self._record(depth, n, k, f, CaseTag.BASE_KMAX)
            return disjoint_paths_small(n, faults, S, T, self.budget)
        if n <= 4:
            self._record(depth, n, k, f, CaseTag.BASE_SMALL_N)
            return self._search(n, faults, S, T)

        try:
            paths = _Level(self, n, faults, S, T, depth).run()
            paths = _orient(paths, S)
            rep = check_paths(n, faults, S, T, paths, target)
            if not rep.passed:
                raise ConstructionFailure("; ".join(rep.failures[:3]))
            return paths
        except CubePathsError as exc:
            failed = self.records[mark] if len(self.records) > mark else None
            del self.records[mark:]
            where = f"{failed.case.value}/{failed.branch or '-'}" if failed else "split"
            return self._fallback(n, faults, S, T, depth, f"{where}: {exc}")

    def _record(self, depth, n, k, f, case, **kw) -> LevelRecord:
        rec = LevelRecord(depth=depth, n=n, k=k, f=f, case=case, **kw)
        self.records.append(rec)
        return rec

    def _search(self, n, faults, S, T) -> list[Path]:
        found = search_paths(n, faults, S, T, (1 << n) - 2 * len(faults), self.budget)
        if found is None:
            raise ConstructionFailure(f"no path system meets the bound in Q_{n}")
        return _orient(found, S)

    def _fallback(self, n, faults, S, T, depth, why) -> list[Path]:
        log.debug("fallback at depth %d (n=%d, k=%d): %s", depth, n, len(S), why)
        self._record(depth, n, len(S), len(faults), CaseTag.FALLBACK, branch=why[:120])
        return self._search(n, faults, S, T)


class _Level:
    """One split step, carried out in a relabelled frame."""

    def __init__(self, router: _Router, n, faults, S, T, depth):
        self.router = router
        self.budget = router.budget
        self.n = n
        self.depth = depth
        self.orig = (frozenset(faults), list(S), list(T))
        self.k = len(S)
        self.f = len(faults)

    # -- helpers -----------------------------------------------------------

    def sub(self, side, faults, S, T) -> list[Path]:
        ctx = self.ctx
        mark = len(self.router.records)
        out = self.router.solve(
            self.n - 1, down(ctx, faults), down(ctx, S), down(ctx, T), self.depth + 1
        )
        for rec in self.router.records[mark:]:
            rec.seams = [(ctx.embed(side, a), ctx.embed(side, b)) for a, b in rec.seams]
        return up(ctx, side, out)

    def long_r(self, a, b) -> Path:
        ctx = self.ctx
        p = long_path(self.n - 1, down(ctx, self.f_right), ctx.project(a), ctx.project(b), self.budget)
        return up(ctx, "R", [p])[0]

    def healthy(self, v) -> bool:
        return v not in self.F

    def half_neighbors(self, v):
        """Neighbours of ``v`` inside its own half."""
        bit = self.ctx.bit
        return [v ^ (1 << i) for i in range(self.n) if (1 << i) != bit]

    def join(self, *parts) -> Path:
        return join(*parts, seams=self.rec.seams)

    def pads(self, count, exclude=()):
        """Lowest-labelled healthy L vertices of the sink class whose R peers are usable."""
        ctx = self.ctx
        out = []
        banned = set(self.t_left) | set(exclude)
        s_right = set(self.s_right)
        for w in range(1 << (self.n - 1)):
            if len(out) == count:
                return out
            u = ctx.embed("L", w)
            peer = ctx.peer(u)
            if (
                parity(u) == self.sink_class
                and u not in banned
                and self.healthy(u)
                and self.healthy(peer)
                and peer not in s_right
            ):
                out.append(u)
        if len(out) < count:
            raise ConstructionFailure("not enough pad vertices")
        return out

    # -- frame set-up ------------------------------------------------------

    def run(self) -> list[Path]:
        faults, S, T = self.orig
        n = self.n
        ctx = choose_split_dimension(Instance.make(n, faults, S, T))
        self.ctx = ctx
        f_l = sum(1 for v in faults if ctx.in_left(v))
        f_r = self.f - f_l
        p = sum(1 for v in S if ctx.in_left(v))
        q = sum(1 for v in T if ctx.in_left(v))
        k = self.k

        if p + q in (0, 2 * k):
            flip_sides, swap_roles = p == 0, False
        else:
            flip_sides, swap_roles = next(
                (flip, swap)
                for flip in (False, True)
                for swap in (False, True)
                if _frame_ok(k, p, q, f_l, f_r, flip, swap)
            )

        rl = Relabel.flip(n, ctx.bit) if flip_sides else Relabel.identity(n)
        F = frozenset(rl(v) for v in faults)
        S2, T2 = [rl(v) for v in S], [rl(v) for v in T]
        if swap_roles:
            S2, T2 = T2, S2
        self.F, self.S, self.T = F, S2, T2
        self.f_left = [v for v in F if ctx.in_left(v)]
        self.f_right = [v for v in F if not ctx.in_left(v)]
        self.s_left = [v for v in S2 if ctx.in_left(v)]
        self.s_right = [v for v in S2 if not ctx.in_left(v)]
        self.t_left = [v for v in T2 if ctx.in_left(v)]
        self.t_right = [v for v in T2 if not ctx.in_left(v)]
        self.sink_class = parity(T2[0])
        self.p, self.q = len(self.s_left), len(self.t_left)
        self.fl, self.fr = len(self.f_left), len(self.f_right)

        mark = len(self.router.records)
        self.rec = self.router._record(
            self.depth, n, k, self.f, CaseTag.FALLBACK,
            j=ctx.j, p=self.p, q=self.q, f_l=self.fl, f_r=self.fr,
        )
        paths = self.dispatch()
        if swap_roles:
            paths = [pp[::-1] for pp in paths]
        inv = rl.inverse()
        for r in self.router.records[mark:]:
            r.seams = [(inv(a), inv(b)) for a, b in r.seams]
        return inv.paths(paths)

    def dispatch(self) -> list[Path]:
        n, k, p, q = self.n, self.k, self.p, self.q
        if q == k or p == 0:
            if self.fl <= 2 * n - 2 * k - 5:
                return self.case1_1()
            if self.fr == 1:
                return self.case1_2a()
            return self.case1_2b()
        if 1 <= q <= k - 1 or self.fr <= 2 * n - 2 * k - 5:
            return self.case2()
        return self.case3()

    # -- Case 1 ------------------------------------------------------------

    def _detour_any_edge(self, paths) -> list[Path]:
        """Replace one L edge with both R peers healthy by a long R path."""
        ctx = self.ctx
        for i, path in enumerate(paths):
            for a, b in zip(path, path[1:]):
                ar, br = ctx.peer(a), ctx.peer(b)
                if self.healthy(ar) and self.healthy(br):
                    pr = self.long_r(ar, br)
                    paths = list(paths)
                    paths[i] = splice(path, (a, b), [((a, ar), pr), ((br, b), None)], seams=self.rec.seams)
                    return paths
        raise ConstructionFailure("no path edge with healthy R peers")

    def case1_1(self):
        self.rec.case = CaseTag.CASE1_1
        left = self.sub("L", self.f_left, self.S, self.T)
        return self._detour_any_edge(left)

    def case1_2a(self):
        self.rec.case = CaseTag.CASE1_2A
        ctx = self.ctx
        fmask_rest = None
        lifted = None
        for w in sorted(self.f_left):
            rest = [v for v in self.f_left if v != w]
            healthy_nbrs = [u for u in self.half_neighbors(w) if u not in rest]
            if len(healthy_nbrs) >= 2:
                lifted, fmask_rest = w, rest
                break
        if lifted is None:
            raise ConstructionFailure("no lifted fault keeps L conditional")
        w = lifted
        left = self.sub("L", fmask_rest, self.S, self.T)
        hi = _path_with(left, w)
        if hi < 0:
            self.rec.branch = "no path meets the lifted fault"
            return self._detour_any_edge(left)
        host = left[hi]
        i = host.index(w)
        u_l, v_l = host[i - 1], host[i + 1]
        u_r, v_r = ctx.peer(u_l), ctx.peer(v_l)
        others = [pp for j, pp in enumerate(left) if j != hi]
        if self.healthy(u_r) and self.healthy(v_r):
            self.rec.branch = "both peers healthy"
            pr = self.long_r(u_r, v_r)
            new = self.join(subpath(host, host[0], u_l), pr, subpath(host, v_l, host[-1]))
            return others + [new]
        if self.healthy(u_r):
            rev = [pp[::-1] for pp in left]
            return [pp[::-1] for pp in self._repair_faulty_front(rev, hi, w)]
        return self._repair_faulty_front(left, hi, w)

    def _repair_faulty_front(self, paths, hi, w):
        """Repair ``paths[hi]`` whose vertex before ``w`` has a faulty R peer.

        Paths here may be oriented sink-to-source; the caller re-orients.
        """
        ctx = self.ctx
        host = paths[hi]
        i = host.index(w)
        u_l, v_l = host[i - 1], host[i + 1]
        v_r = ctx.peer(v_l)
        others = [pp for j, pp in enumerate(paths) if j != hi]
        a, b = host[0], host[-1]
        if u_l != a:
            self.rec.branch = "peer faulty, step back one vertex"
            z_l = host[i - 2]
            pr = self.long_r(ctx.peer(z_l), v_r)
            return others + [self.join(subpath(host, a, z_l), pr, subpath(host, v_l, b))]

        nbrs = [z for z in self.half_neighbors(a) if self.healthy(z)]
        for z in nbrs:
            if _path_with(paths, z) < 0:
                self.rec.branch = "endpoint has an unused healthy neighbour"
                pr = self.long_r(ctx.peer(z), v_r)
                return others + [self.join((a, z), pr, subpath(host, v_l, b))]
        if all(z in host for z in nbrs):
            z = next((z for z in nbrs if z != b), None)
            if z is None:
                raise ConstructionFailure("endpoint neighbours exhausted")
            self.rec.branch = "all endpoint neighbours on the same path"
            z2 = host[host.index(z) + 1]
            pr = self.long_r(v_r, ctx.peer(z2))
            return others + [self.join((a,), subpath(host, z, v_l), pr, subpath(host, z2, b))]
        z = next(z for z in nbrs if z not in host)
        oi = _path_with(paths, z)
        other = paths[oi]
        if parity(other[0]) != parity(a):
            other = other[::-1]
        zi = other.index(z)
        if zi == 0:
            raise ConstructionFailure("neighbour is an endpoint of its path")
        self.rec.branch = "endpoint neighbour on another path"
        z2 = other[zi - 1]
        pr = self.long_r(ctx.peer(z2), v_r)
        first = self.join((a,), subpath(other, z, other[-1]))
        second = self.join(subpath(other, other[0], z2), pr, subpath(host, v_l, b))
        rest = [pp for j, pp in enumerate(paths) if j not in (hi, oi)]
        return rest + [first, second]

    def case1_2b(self):
        self.rec.case = CaseTag.CASE1_2B
        ctx = self.ctx
        S, T = self.S, self.T
        s_k, t_k = S[-1], T[-1]
        left = self.sub("L", self.f_left, S[:-1], T[:-1])
        hs, ht = _path_with(left, s_k), _path_with(left, t_k)
        peer = ctx.peer
        if hs < 0 and ht < 0:
            self.rec.branch = "held-back pair uncovered"
            pr = self.long_r(peer(s_k), peer(t_k))
            return left + [self.join((s_k,), pr, (t_k,))]
        if hs >= 0 and hs == ht:
            self.rec.branch = "held-back pair on one path"
            host = left[hs]
            i, j = sorted((host.index(s_k), host.index(t_k)))
            x_l, y_l = host[i - 1], host[j + 1]
            pr = self.long_r(peer(x_l), peer(y_l))
            outer = self.join(subpath(host, host[0], x_l), pr, subpath(host, y_l, host[-1]))
            inner = subpath(host, host[i], host[j])
            return [pp for n_, pp in enumerate(left) if n_ != hs] + [outer, inner]
        if hs >= 0 and ht >= 0:
            self.rec.branch = "held-back pair on two paths"
            p1, p2 = left[hs], left[ht]
            x_l = p1[p1.index(s_k) - 1]
            y_l = p2[p2.index(t_k) + 1]
            pr = self.long_r(peer(x_l), peer(y_l))
            new = [
                self.join(subpath(p1, p1[0], x_l), pr, subpath(p2, y_l, p2[-1])),
                subpath(p2, p2[0], t_k),
                subpath(p1, s_k, p1[-1]),
            ]
            return [pp for n_, pp in enumerate(left) if n_ not in (hs, ht)] + new
        if hs >= 0:
            self.rec.branch = "held-back source covered"
            p1 = left[hs]
            x_l = p1[p1.index(s_k) - 1]
            pr = self.long_r(peer(x_l), peer(t_k))
            new = [self.join(subpath(p1, p1[0], x_l), pr, (t_k,)), subpath(p1, s_k, p1[-1])]
            return [pp for n_, pp in enumerate(left) if n_ != hs] + new
        self.rec.branch = "held-back sink covered"
        p2 = left[ht]
        y_l = p2[p2.index(t_k) + 1]
        pr = self.long_r(peer(s_k), peer(y_l))
        new = [self.join((s_k,), pr, subpath(p2, y_l, p2[-1])), subpath(p2, p2[0], t_k)]
        return [pp for n_, pp in enumerate(left) if n_ != ht] + new

    # -- Case 2 ------------------------------------------------------------

    def case2(self):
        self.rec.case = CaseTag.CASE2
        ctx = self.ctx
        pads = self.pads(self.p - self.q)
        peers = [ctx.peer(u) for u in pads]
        left = self.sub("L", self.f_left, self.s_left, self.t_left + pads)
        right = self.sub("R", self.f_right, self.s_right + peers, self.t_right)
        return connect(left, right, dict(zip(pads, peers)), seams=self.rec.seams)

    # -- Case 3 ------------------------------------------------------------

    def case3(self):
        last = None
        for t1 in self.T:
            if self.p == 1 and adjacent(self.s_left[0], t1):
                continue
            mark = len(self.router.records)
            seams = len(self.rec.seams)
            try:
                return self._case3_with(t1)
            except _Retry as exc:
                del self.router.records[mark:]
                del self.rec.seams[seams:]
                last = exc
        raise ConstructionFailure(f"no held-back sink works: {last}")

    def _case3_with(self, t1):
        ctx = self.ctx
        peer = ctx.peer
        p = self.p
        s_left = self.s_left
        rest_pads = self.pads(p - 1)
        rest_peers = [peer(u) for u in rest_pads]
        pad_map = dict(zip(rest_pads, rest_peers))
        t_rest = [t for t in self.T if t != t1]
        right = self.sub("R", self.f_right, self.s_right + rest_peers, t_rest)
        in_right = set().union(*right)

        def glue(left):
            return connect(left, right, pad_map, seams=self.rec.seams)

        def replace(paths, old, new):
            return [pp for pp in paths if pp is not old] + new

        t_l = peer(t1)
        if t1 not in in_right:
            self.rec.case = CaseTag.CASE3A
            if self.healthy(t_l):
                if t_l in s_left:
                    self.rec.branch = "sink peer is a source"
                    if p < 2:
                        raise _Retry("sink peer is the only L source")
                    left = self.sub("L", self.f_left + [t_l], [s for s in s_left if s != t_l], rest_pads)
                    return glue(left) + [self.join((t_l,), (t1,))]
                self.rec.branch = "sink peer held as temporary fault"
                z = next(
                    (z for z in self.half_neighbors(t_l) if self.healthy(z) and z not in pad_map), None
                )
                if z is None:
                    raise _Retry("sink peer has no free healthy neighbour")
                left = self.sub("L", self.f_left + [t_l], s_left, rest_pads + [z])
                full = glue(left)
                p1 = full[_path_with(full, z)]
                return replace(full, p1, [self.join(p1, (t_l, t1))])

            cands = [w for w in self.half_neighbors(t1) if self.healthy(w)]
            free = [w for w in cands if w not in in_right]
            if free:
                self.rec.branch = "faulty sink peer, free R neighbour"
                w_r = free[0]
                w_l = peer(w_r)
                left = self.sub("L", self.f_left, s_left, rest_pads + [w_l])
                full = glue(left)
                p1 = full[_path_with(full, w_l)]
                return replace(full, p1, [self.join(p1, (w_r, t1))])
            for w_r in cands:
                host = right[_path_with(right, w_r)]
                u_r = host[host.index(w_r) + 1]
                u_l = peer(u_r)
                if u_l in s_left and p == 1:
                    continue
                break
            else:
                raise _Retry("every R neighbour of the sink leads back to the lone source")
            if u_l in s_left:
                self.rec.branch = "faulty sink peer, reroute through a source"
                left = self.sub("L", self.f_left + [u_l], [s for s in s_left if s != u_l], rest_pads)
                full = glue(left)
                hf = full[_path_with(full, w_r)]
                new = [
                    self.join((u_l,), subpath(hf, u_r, hf[-1])),
                    self.join(subpath(hf, hf[0], w_r), (t1,)),
                ]
                return replace(full, hf, new)
            self.rec.branch = "faulty sink peer, temporary fault on the detour"
            z = next(
                (z for z in self.half_neighbors(u_l) if self.healthy(z) and z not in pad_map), None
            )
            if z is None:
                raise _Retry("detour vertex has no free healthy neighbour")
            left = self.sub("L", self.f_left + [u_l], s_left, rest_pads + [z])
            full = glue(left)
            hf = full[_path_with(full, w_r)]
            p1 = full[_path_with(full, z)]
            new = [
                self.join(p1, (u_l,), subpath(hf, u_r, hf[-1])),
                self.join(subpath(hf, hf[0], w_r), (t1,)),
            ]
            return [pp for pp in full if pp is not hf and pp is not p1] + new

        self.rec.case = CaseTag.CASE3B
        host = right[_path_with(right, t1)]
        i = host.index(t1)
        u_r = host[i + 1]
        u_l = peer(u_r)
        if self.healthy(u_l):
            self.rec.branch = "successor peer healthy"
            left = self.sub("L", self.f_left, s_left, rest_pads + [u_l])
            full = glue(left)
            hf = full[_path_with(full, t1)]
            p1 = full[_path_with(full, u_l)]
            new = [subpath(hf, hf[0], t1), self.join(p1, subpath(hf, u_r, hf[-1]))]
            return [pp for pp in full if pp is not hf and pp is not p1] + new

        t2 = host[-1]
        if host[i + 2 :] != (t2,):
            # only u_R may be dropped from the R path, so it has to be t2's predecessor
            raise _Retry("successor of the held-back sink is not next to its path's sink")
        t2l = peer(t2)
        if t2l in s_left:
            if p < 2:
                raise _Retry("sink peer is the only L source")
            self.rec.branch = "edge-avoiding cover, sink peer is a source"
            srcs = [s for s in s_left if s != t2l]
            left = self._edge_avoiding_left(t2l, u_l, srcs, rest_pads)
            full = glue(left)
            hf = full[_path_with(full, t1)]
            return replace(full, hf, [subpath(hf, hf[0], t1), self.join((t2l,), (t2,))])
        self.rec.branch = "edge-avoiding cover, new pad next to the sink peer"
        z = next(
            (z for z in self.half_neighbors(t2l) if z != u_l and z not in pad_map), None
        )
        if z is None:
            raise _Retry("sink peer has no usable neighbour")
        left = self._edge_avoiding_left(t2l, u_l, s_left, rest_pads + [z])
        full = glue(left)
        hf = full[_path_with(full, t1)]
        p1 = full[_path_with(full, z)]
        new = [subpath(hf, hf[0], t1), self.join(p1, (t2l, t2))]
        return [pp for pp in full if pp is not hf and pp is not p1] + new

    def _edge_avoiding_left(self, x, y, sources, sinks) -> list[Path]:
        ctx = self.ctx
        trace: list = []
        out = spanning_disjoint_paths_avoiding_edge(
            self.n - 1, ctx.project(x), ctx.project(y), down(ctx, sources), down(ctx, sinks),
            self.budget, trace,
        )
        return _orient(up(ctx, "L", out), sources)


def route(inst: Instance, budget: SolverBudget = DEFAULT_BUDGET) -> tuple[list[Path], RouteTrace]:
    """Build the path system for a theorem-mode instance.

    Raises :class:`PreconditionViolation` if the instance is outside the
    theorem's hypotheses and :class:`ConstructionFailure` if the result does
    not verify (which would indicate a bug).
    """
    inst.check_theorem_mode()
    router = _Router(budget)
    paths = router.solve(inst.n, inst.faults, inst.sources, inst.sinks)
    rep = verify(inst, paths)
    if not rep.passed:
        raise ConstructionFailure(f"route output failed verification: {rep.failures[:3]}")
    return paths, RouteTrace(router.records)
