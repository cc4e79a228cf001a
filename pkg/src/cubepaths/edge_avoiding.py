"""k disjoint S-T paths that cover every vertex of Q_n except an edge xy.

Induction on k with an L/R split chosen so the excluded edge lies in L:

* k = 1 is a single spanning path of Q_n - {x, y};
* no sources in L: solve R exactly, then detour one R edge through a
  spanning path of L - {x, y};
* some but not all sources in L: balance L with pad sinks whose peers become
  extra R sources, recurse in L, solve R, glue at the pads;
* all sources in L: drop one source, recurse, cut the path through the dropped
  source and send its front half across to R.

Q_4 (where k = 2) is settled by the distance-2 re-split when it applies and by
exhaustive search otherwise.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import ConstructionFailure, ExceptionCase, PreconditionViolation
from .halves import connect, down, home_left, up
from .hypercube import Path, adjacent, check_dimension, parity, set_distance, split
from .pathops import splice, subpath
from .solvers import (
    DEFAULT_BUDGET,
    SolverBudget,
    disjoint_paths_small,
    is_exception_case,
    long_path,
    search_paths,
    spanning_path_avoiding_edge,
)


def spanning_disjoint_paths_avoiding_edge(
    n: int,
    x: int,
    y: int,
    sources: Sequence[int],
    sinks: Sequence[int],
    budget: SolverBudget = DEFAULT_BUDGET,
    trace: Optional[list] = None,
) -> list[Path]:
    """Disjoint paths from ``sources`` to ``sinks`` partitioning V(Q_n) - {x, y}.

    Each returned path starts at a source and ends at a sink.
    """
    check_dimension(n)
    sources, sinks = list(sources), list(sinks)
    k = len(sources)
    if n < 4:
        raise PreconditionViolation(f"n={n} below 4")
    if not 1 <= k <= n - 2 or len(sinks) != k:
        raise PreconditionViolation(f"k={k} outside [1, n-2={n - 2}] or |T| != |S|")
    if not adjacent(x, y):
        raise PreconditionViolation("x and y must be adjacent")
    ends = set(sources) | set(sinks)
    if len(ends) != 2 * k or ends & {x, y} or any(not 0 <= v < 1 << n for v in ends):
        raise PreconditionViolation("S and T must be disjoint k-sets inside Q_n - {x, y}")
    cs = {parity(v) for v in sources}
    ct = {parity(v) for v in sinks}
    if len(cs) != 1 or len(ct) != 1 or cs == ct:
        raise PreconditionViolation("S and T must lie in different partite sets")
    if parity(x) != parity(sources[0]):
        x, y = y, x

    paths = _build(n, x, y, sources, sinks, budget, trace)

    covered = set()
    for p in paths:
        covered.update(p)
    if covered != set(range(1 << n)) - {x, y} or sum(map(len, paths)) != (1 << n) - 2:
        raise ConstructionFailure("output does not partition Q_n - {x, y}")
    return paths


def _note(trace, tag):
    if trace is not None:
        trace.append(tag)


def _build(n, x, y, S, T, budget, trace) -> list[Path]:
    k = len(S)
    if k == 1:
        _note(trace, "EA.k1")
        return [spanning_path_avoiding_edge(n, x, y, S[0], T[0], budget)]
    if n == 4:
        return _base_q4(x, y, S, T, budget, trace)

    dxy = (x ^ y).bit_length()
    j = next(
        j
        for j in range(1, n + 1)
        if j != dxy and any((v ^ x) >> (j - 1) & 1 for v in S + T)
    )
    ctx = split(n, j)
    rl = home_left(n, ctx, x)
    inv = rl.inverse()
    x, y = rl(x), rl(y)
    S, T = [rl(v) for v in S], [rl(v) for v in T]

    s_left = [v for v in S if ctx.in_left(v)]
    t_left = [v for v in T if ctx.in_left(v)]
    swapped = len(s_left) < len(t_left)
    if swapped:
        S, T, x, y = T, S, y, x
    paths = _split_step(n, ctx, x, y, S, T, budget, trace)
    if swapped:
        paths = [p[::-1] for p in paths]
    return inv.paths(paths)


def _pads(ctx, count, sink_class, t_left, y, s_right, taken=()):
    """Lowest-labelled L vertices usable as pad sinks, with their R peers."""
    out = []
    banned = set(t_left) | {y} | set(taken)
    s_right = set(s_right)
    for w in range(1 << (ctx.n - 1)):
        if len(out) == count:
            break
        u = ctx.embed("L", w)
        if parity(u) != sink_class or u in banned or ctx.peer(u) in s_right:
            continue
        out.append(u)
    if len(out) < count:
        raise ConstructionFailure("not enough pad vertices")
    return out


def _split_step(n, ctx, x, y, S, T, budget, trace) -> list[Path]:
    m = n - 1
    k = len(S)
    s_left = [v for v in S if ctx.in_left(v)]
    t_left = [v for v in T if ctx.in_left(v)]
    s_right = [v for v in S if not ctx.in_left(v)]
    t_right = [v for v in T if not ctx.in_left(v)]
    p, q = len(s_left), len(t_left)
    sink_class = parity(T[0])
    xl, yl = ctx.project(x), ctx.project(y)

    if p == 0:
        _note(trace, "EA.Case1")
        right = up(ctx, "R", disjoint_paths_small(m, (), down(ctx, S), down(ctx, T), budget))
        for i, path in enumerate(right):
            for a, b in zip(path, path[1:]):
                al, bl = ctx.peer(a), ctx.peer(b)
                if al in (x, y) or bl in (x, y):
                    continue
                p0 = up(ctx, "L", [spanning_path_avoiding_edge(m, xl, yl, ctx.project(al), ctx.project(bl), budget)])[0]
                right[i] = splice(path, (a, b), [((a, al), p0), ((bl, b), None)])
                return right
        raise ConstructionFailure("no R edge whose L peers avoid x and y")

    if p < k:
        _note(trace, "EA.Case2")
        pads = _pads(ctx, p - q, sink_class, t_left, y, s_right)
        peers = [ctx.peer(u) for u in pads]
        left = up(ctx, "L", _build(m, xl, yl, down(ctx, s_left), down(ctx, t_left + pads), budget, trace))
        right = up(ctx, "R", disjoint_paths_small(m, (), down(ctx, s_right + peers), down(ctx, t_right), budget))
        return connect(left, right, dict(zip(pads, peers)))

    _note(trace, "EA.Case3")
    s_k = S[-1]
    pads = _pads(ctx, k - 1 - q, sink_class, t_left, y, s_right, taken=(s_k,))
    left = up(ctx, "L", _build(m, xl, yl, down(ctx, S[:-1]), down(ctx, t_left + pads), budget, trace))
    host = next(path for path in left if s_k in path[1:-1])
    u_l = host[host.index(s_k) - 1]
    pieces = [path for path in left if path is not host]
    pieces += [subpath(host, host[0], u_l), subpath(host, s_k, host[-1])]
    pad_map = {u: ctx.peer(u) for u in pads}
    pad_map[u_l] = ctx.peer(u_l)
    right = up(
        ctx, "R", disjoint_paths_small(m, (), down(ctx, pad_map.values()), down(ctx, t_right), budget)
    )
    return connect(pieces, right, pad_map)


def _base_q4(x, y, S, T, budget, trace) -> list[Path]:
    dxy = (x ^ y).bit_length()
    for i in (0, 1):
        o = 1 - i
        if set_distance((S[i], T[i]), (x, y)) != 2:
            continue
        for j in range(1, 5):
            if j == dxy:
                continue
            bit = 1 << (j - 1)
            side_xy = x & bit
            if (S[i] & bit) == (T[i] & bit) != side_xy and (S[o] & bit) == (T[o] & bit) == side_xy:
                ctx = split(4, j)
                home = "L" if not side_xy else "R"
                away = "R" if home == "L" else "L"
                proj = ctx.project
                if is_exception_case(3, proj(x), proj(y), proj(S[o]), proj(T[o])):
                    continue
                try:
                    near = spanning_path_avoiding_edge(3, proj(x), proj(y), proj(S[o]), proj(T[o]), budget)
                    far = long_path(3, (), proj(S[i]), proj(T[i]), budget)
                except ExceptionCase:
                    continue
                _note(trace, "EA.Q4.resplit")
                out = [(), ()]
                out[o] = up(ctx, home, [near])[0]
                out[i] = up(ctx, away, [far])[0]
                return out
    _note(trace, "EA.Q4.search")
    found = search_paths(4, (x, y), S, T, 14, budget)
    if found is None:
        raise ConstructionFailure("Q_4 search found no spanning path pair")
    return found
