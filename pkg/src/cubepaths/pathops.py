"""Cutting and gluing paths.

Paths are tuples of vertex labels. Every gluing operation checks that the
seams are cube edges and that no vertex appears twice, so a broken
construction fails at the step that broke it.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import SeamNotAdjacent, VertexCollision, VertexNotOnPath
from .hypercube import Path, adjacent


def subpath(path: Sequence[int], start: int, end: int) -> Path:
    """Contiguous segment of ``path`` from ``start`` to ``end`` (either direction)."""
    try:
        i = path.index(start)
        j = path.index(end)
    except ValueError as exc:
        raise VertexNotOnPath(str(exc)) from None
    if i <= j:
        return tuple(path[i : j + 1])
    return tuple(path[j : i + 1][::-1])


def join(*parts: Sequence[int], seams: Optional[list] = None) -> Path:
    """Concatenate path pieces; consecutive pieces must meet along an edge.

    Seam edges are appended to ``seams`` when a list is given.
    """
    out: list[int] = []
    seen: set[int] = set()
    for part in parts:
        if not part:
            continue
        if out:
            a, b = out[-1], part[0]
            if not adjacent(a, b):
                raise SeamNotAdjacent(f"seam {a}-{b} is not an edge")
            if seams is not None:
                seams.append((a, b))
        for v in part:
            if v in seen:
                raise VertexCollision(f"vertex {v} used twice")
            seen.add(v)
            out.append(v)
    return tuple(out)


def splice(
    path: Sequence[int],
    remove_edge: Optional[tuple[int, int]],
    insertions: Sequence[tuple[tuple[int, int], Optional[Sequence[int]]]],
    seams: Optional[list] = None,
) -> Path:
    """Replace an edge of ``path`` (or extend its tail) by a chain of inserted paths.

    ``insertions`` is a sequence of ``(seam, piece)``: each seam ``(a, b)``
    leaves the current end ``a`` and enters ``b``, the first vertex of
    ``piece``. A final ``(seam, None)`` closes back onto the far side of the
    removed edge. Without ``remove_edge`` the chain is appended after the
    last vertex.
    """
    path = tuple(path)
    if remove_edge is not None:
        u, v = remove_edge
        try:
            i = path.index(u)
        except ValueError:
            raise VertexNotOnPath(f"{u} not on path") from None
        if i + 1 < len(path) and path[i + 1] == v:
            left, right = path[: i + 1], path[i + 1 :]
        elif i > 0 and path[i - 1] == v:
            return splice(path[::-1], remove_edge, insertions, seams)[::-1]
        else:
            raise SeamNotAdjacent(f"{u}-{v} is not an edge of the path")
    else:
        left, right = path, ()

    pieces: list[Sequence[int]] = [left]
    end = left[-1]
    closed = not right
    for (a, b), piece in insertions:
        if a != end or not adjacent(a, b):
            raise SeamNotAdjacent(f"seam {a}-{b} does not leave current end {end}")
        if piece is None:
            if not right or b != right[0]:
                raise SeamNotAdjacent(f"closing seam {a}-{b} does not reach the cut")
            closed = True
            break
        if piece[0] != b:
            raise SeamNotAdjacent(f"seam {a}-{b} does not enter inserted path at {piece[0]}")
        pieces.append(piece)
        end = piece[-1]
    if not closed:
        raise SeamNotAdjacent("removed edge left open")
    return join(*pieces, right, seams=seams)
