"""Single-clause corruptions of a verified path system.

Each mutator returns ``(faults, paths, bound)`` for the corrupted system, or
``None`` when the system offers no site where the corruption leaves every
other clause intact.
"""


def _adj(a, b):
    x = a ^ b
    return x and not x & (x - 1)


def shared_vertex(inst, paths):
    """Swap an internal vertex for one that already lies on another path."""
    owner = {v: i for i, p in enumerate(paths) for v in p[1:-1]}
    if sum(map(len, paths)) - 1 < inst.bound:
        return None
    for i, p in enumerate(paths):
        for r in range(1, len(p) - 1):
            for w, j in owner.items():
                if j != i and w != p[r] and _adj(w, p[r - 1]) and _adj(w, p[r + 1]):
                    q = p[:r] + (w,) + p[r + 1 :]
                    return inst.faults, [q if x == i else pp for x, pp in enumerate(paths)], inst.bound
    return None


def faulty_vertex(inst, paths):
    """Reroute one internal step through a faulty vertex."""
    for i, p in enumerate(paths):
        for r in range(1, len(p) - 1):
            for z in inst.faults:
                if _adj(z, p[r - 1]) and _adj(z, p[r + 1]):
                    q = p[:r] + (z,) + p[r + 1 :]
                    return inst.faults, [q if x == i else pp for x, pp in enumerate(paths)], inst.bound
    return None


def broken_seam(inst, paths):
    """Transpose two consecutive internal vertices, so two steps stop being edges."""
    for i, p in enumerate(paths):
        if len(p) >= 4:
            q = p[:1] + (p[2], p[1]) + p[3:]
            return inst.faults, [q if x == i else pp for x, pp in enumerate(paths)], inst.bound
    return None


def dropped_endpoint(inst, paths):
    """Cut the sink off the end of a path."""
    if sum(map(len, paths)) - 1 < inst.bound:
        return None
    i = max(range(len(paths)), key=lambda x: len(paths[x]))
    if len(paths[i]) < 2:
        return None
    q = paths[i][:-1]
    return inst.faults, [q if x == i else pp for x, pp in enumerate(paths)], inst.bound


def shortfall(inst, paths):
    """Ask for one more vertex than the system covers."""
    return inst.faults, list(paths), sum(map(len, paths)) + 1


MUTATIONS = {
    "disjoint": shared_vertex,
    "fault_free": faulty_vertex,
    "all_edges_valid": broken_seam,
    "endpoints_bijection": dropped_endpoint,
    "meets_bound": shortfall,
}

FIELDS = tuple(MUTATIONS)
