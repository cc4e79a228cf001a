"""Deliberately naive reference implementations used as test oracles.

Nothing here imports cubepaths: graphs are built from scratch with
adjacency lists and searched by plain BFS/DFS.
"""

from collections import deque
from itertools import permutations


def naive_neighbors(v, n):
    out = []
    for w in range(1 << n):
        if bin(v ^ w).count("1") == 1:
            out.append(w)
    return out


def bfs_distance(u, v, n):
    seen = {u: 0}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        if a == v:
            return seen[a]
        for b in naive_neighbors(a, n):
            if b not in seen:
                seen[b] = seen[a] + 1
                queue.append(b)
    return None


def naive_conditional(n, faults):
    faults = set(faults)
    for v in range(1 << n):
        if v in faults:
            continue
        if sum(1 for w in naive_neighbors(v, n) if w not in faults) < 2:
            return False
    return True


def longest_path(n, blocked, u, v):
    """Vertex count of the longest u-v path avoiding ``blocked`` (None if none)."""
    blocked = set(blocked)
    best = [0]
    seen = {u}

    def go(head, count):
        if head == v:
            best[0] = max(best[0], count)
            return
        for w in naive_neighbors(head, n):
            if w not in seen and w not in blocked:
                seen.add(w)
                go(w, count + 1)
                seen.discard(w)

    go(u, 1)
    return best[0] or None


def has_spanning_path(n, blocked, u, v):
    return longest_path(n, blocked, u, v) == (1 << n) - len(set(blocked))


def best_cover(n, faults, sources, sinks):
    """Max vertices covered by disjoint S-T paths, trying every pairing."""
    best = None
    for perm in permutations(sinks):
        got = _best_for_pairing(n, set(faults), list(sources), list(perm))
        if got is not None and (best is None or got > best):
            best = got
    return best


def _best_for_pairing(n, faults, sources, sinks):
    ends = set(sources) | set(sinks)
    used = set(ends)
    best = [None]

    def go(i, head, count):
        for w in naive_neighbors(head, n):
            if w == sinks[i]:
                if i + 1 == len(sources):
                    best[0] = count + 1 if best[0] is None else max(best[0], count + 1)
                else:
                    go(i + 1, sources[i + 1], count + 2)
            elif w not in used and w not in faults:
                used.add(w)
                go(i, w, count + 1)
                used.discard(w)

    go(0, sources[0], 1)
    return best[0]
