"""Model of the n-dimensional hypercube Q_n.

A vertex is an int in ``[0, 2**n)``; bit ``i`` is coordinate ``u_{i+1}`` of the
string ``u_n ... u_1``. Vertex *sets* are frequently carried as bitmasks over
the ``2**n`` vertices (bit ``v`` set iff vertex ``v`` is a member) so that
neighbourhood expansion and flood fill run as a handful of big-int operations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidArgument, InvalidDimension

MAX_DIMENSION = 30

Path = tuple[int, ...]


class Parity(enum.Enum):
    X = 0  # even popcount
    Y = 1  # odd popcount

    def other(self) -> "Parity":
        return Parity.Y if self is Parity.X else Parity.X


def check_dimension(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_DIMENSION:
        raise InvalidDimension(f"dimension {n!r} outside supported range [1, {MAX_DIMENSION}]")


def neighbors(v: int, n: int) -> list[int]:
    """Neighbours of ``v`` in ascending flipped-bit order."""
    check_dimension(n)
    if not 0 <= v < (1 << n):
        raise InvalidArgument(f"vertex {v} not in Q_{n}")
    return [v ^ (1 << i) for i in range(n)]


def parity(v: int) -> Parity:
    return Parity(v.bit_count() & 1)


def distance(u: int, v: int) -> int:
    return (u ^ v).bit_count()


def adjacent(u: int, v: int) -> bool:
    return (u ^ v).bit_count() == 1


def is_path(vertices: Sequence[int]) -> bool:
    if len(set(vertices)) != len(vertices):
        return False
    return all(adjacent(a, b) for a, b in zip(vertices, vertices[1:]))


def set_distance(a: Iterable[int], b: Iterable[int]) -> int:
    b = list(b)
    return min(distance(x, y) for x in a for y in b)


# -- bitmask set machinery -------------------------------------------------


@lru_cache(maxsize=None)
def low_masks(n: int) -> tuple[int, ...]:
    """``low_masks(n)[i]`` is the bitmask of all vertices whose bit ``i`` is 0."""
    out = []
    for i in range(n):
        m = 0
        for v in range(1 << n):
            if not (v >> i) & 1:
                m |= 1 << v
        out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def parity_mask(n: int) -> int:
    """Bitmask of the even-popcount class X."""
    m = 0
    for v in range(1 << n):
        if not v.bit_count() & 1:
            m |= 1 << v
    return m


def full_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_mask(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def expand(mask: int, n: int) -> int:
    """All vertices adjacent to some member of ``mask``."""
    out = 0
    for i, lo in enumerate(low_masks(n)):
        s = 1 << i
        out |= ((mask & lo) << s) | ((mask >> s) & lo)
    return out


def at_least_two_neighbors(mask: int, n: int) -> int:
    """Vertices with two or more neighbours inside ``mask``."""
    one = two = 0
    for i, lo in enumerate(low_masks(n)):
        s = 1 << i
        nb = ((mask & lo) << s) | ((mask >> s) & lo)
        two |= one & nb
        one |= nb
    return two


def flood(seed: int, allowed: int, n: int) -> int:
    """Vertices of ``allowed`` reachable from ``seed`` through ``allowed``."""
    reached = seed & allowed
    frontier = reached
    while frontier:
        frontier = expand(frontier, n) & allowed & ~reached
        reached |= frontier
    return reached


# -- L/R decomposition -----------------------------------------------------


@dataclass(frozen=True)
class SplitContext:
    """Q_n viewed as two copies of Q_{n-1} joined along dimension ``j`` (1-based).

    L holds the vertices whose bit ``j-1`` is 0.
    """

    n: int
    j: int
    bit: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "bit", 1 << (self.j - 1))

    def side(self, v: int) -> str:
        return "R" if v & self.bit else "L"

    def in_left(self, v: int) -> bool:
        return not v & self.bit

    def project(self, v: int) -> int:
        low = v & (self.bit - 1)
        return ((v >> self.j) << (self.j - 1)) | low

    def embed(self, side: str, label: int) -> int:
        low = label & (self.bit - 1)
        v = ((label >> (self.j - 1)) << self.j) | low
        return v | self.bit if side == "R" else v

    def peer(self, v: int) -> int:
        return v ^ self.bit

    def half(self, side: str) -> list[int]:
        return [self.embed(side, w) for w in range(1 << (self.n - 1))]

    def half_mask(self, side: str) -> int:
        lo = low_masks(self.n)[self.j - 1]
        return lo if side == "L" else full_mask(self.n) & ~lo


def split(n: int, j: int) -> SplitContext:
    check_dimension(n)
    if n < 2:
        raise InvalidDimension("cannot split Q_1")
    if not 1 <= j <= n:
        raise InvalidArgument(f"split index j={j} outside [1, {n}]")
    return SplitContext(n, j)


# -- automorphisms ---------------------------------------------------------


@dataclass(frozen=True)
class Relabel:
    """Automorphism of Q_n: permute coordinates, then XOR with ``mask``.

    ``perm[i]`` is the destination bit of source bit ``i``.
    """

    n: int
    perm: tuple[int, ...]
    mask: int = 0

    @classmethod
    def identity(cls, n: int) -> "Relabel":
        return cls(n, tuple(range(n)), 0)

    @classmethod
    def flip(cls, n: int, mask: int) -> "Relabel":
        return cls(n, tuple(range(n)), mask)

    def __call__(self, v: int) -> int:
        if self.perm == tuple(range(self.n)):
            return v ^ self.mask
        w = 0
        for i, dest in enumerate(self.perm):
            if (v >> i) & 1:
                w |= 1 << dest
        return w ^ self.mask

    def inverse(self) -> "Relabel":
        inv = [0] * self.n
        for i, dest in enumerate(self.perm):
            inv[dest] = i
        back = Relabel(self.n, tuple(inv), 0)
        return Relabel(self.n, tuple(inv), back(self.mask))

    def path(self, p: Sequence[int]) -> Path:
        return tuple(self(v) for v in p)

    def paths(self, ps: Iterable[Sequence[int]]) -> list[Path]:
        return [self.path(p) for p in ps]
