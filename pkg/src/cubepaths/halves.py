"""Moving vertices and paths between Q_n and its two Q_{n-1} halves."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import ConstructionFailure
from .hypercube import Path, Relabel, SplitContext
from .pathops import join


def home_left(n: int, ctx: SplitContext, v: int) -> Relabel:
    """Relabelling that puts ``v`` on the L side of ``ctx``."""
    return Relabel.identity(n) if ctx.in_left(v) else Relabel.flip(n, ctx.bit)


def down(ctx: SplitContext, vertices: Iterable[int]) -> list[int]:
    return [ctx.project(v) for v in vertices]


def up(ctx: SplitContext, side: str, paths: Iterable[Sequence[int]]) -> list[Path]:
    return [tuple(ctx.embed(side, w) for w in p) for p in paths]


def connect(
    left_paths: Sequence[Path],
    right_paths: Sequence[Path],
    pads: Mapping[int, int],
    seams: list | None = None,
) -> list[Path]:
    """Glue each L path that ends on a pad to the R path starting at the pad's peer.

    L paths ending elsewhere and R paths starting at genuine sources pass
    through unchanged.
    """
    by_start = {p[0]: p for p in right_paths}
    out = []
    for p in left_paths:
        peer = pads.get(p[-1])
        if peer is None:
            out.append(p)
            continue
        q = by_start.pop(peer, None)
        if q is None:
            raise ConstructionFailure(f"no R path starts at pad peer {peer}")
        out.append(join(p, q, seams=seams))
    stray = [p for p in by_start.values() if p[0] in pads.values()]
    if stray:
        raise ConstructionFailure("pad peer path left unconnected")
    out.extend(by_start.values())
    return out
