import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubepaths.errors import InvalidArgument, InvalidDimension
from cubepaths.hypercube import (
    Parity,
    Relabel,
    adjacent,
    at_least_two_neighbors,
    distance,
    expand,
    flood,
    from_mask,
    full_mask,
    is_path,
    neighbors,
    parity,
    set_distance,
    split,
    to_mask,
)
from oracles import bfs_distance, naive_neighbors


def test_neighbors_examples():
    assert neighbors(0b000, 3) == [0b001, 0b010, 0b100]
    assert sorted(neighbors(0b111, 3)) == sorted([0b110, 0b101, 0b011])
    out = neighbors(0b01011, 5)
    assert len(out) == 5
    assert all(bin(w ^ 0b01011).count("1") == 1 for w in out)


def test_neighbors_ascending_bit_order():
    assert neighbors(0b111, 3) == [0b110, 0b101, 0b011]


@pytest.mark.parametrize("n", [0, 31, -1])
def test_neighbors_rejects_dimension(n):
    with pytest.raises(InvalidDimension):
        neighbors(0, n)


def test_neighbors_rejects_label():
    with pytest.raises(InvalidArgument):
        neighbors(8, 3)


def test_parity_examples():
    assert parity(0b0000) is Parity.X
    assert parity(0b0111) is Parity.Y
    assert Parity.X.other() is Parity.Y


def test_distance_examples():
    assert distance(0b000, 0b111) == 3
    assert distance(5, 5) == 0


@given(st.integers(0, 31), st.integers(0, 31))
def test_distance_matches_bfs(u, v):
    assert distance(u, v) == bfs_distance(u, v, 5)


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, (1 << n) - 1))))
def test_neighbors_match_naive(nv):
    n, v = nv
    out = neighbors(v, n)
    assert sorted(out) == naive_neighbors(v, n)
    assert len(set(out)) == n
    assert all(parity(w) != parity(v) for w in out)


@given(st.integers(0, 255), st.integers(0, 255))
def test_distance_parity_matches_classes(u, v):
    assert (distance(u, v) % 2 == 1) == (parity(u) != parity(v))


def test_split_examples():
    ctx = split(3, 3)
    assert ctx.side(0b010) == "L" and ctx.side(0b110) == "R"
    assert ctx.peer(0b010) == 0b110
    assert split(3, 1).peer(0b010) == 0b011
    ctx = split(4, 2)
    assert ctx.project(0b1010) == 0b100
    assert all(ctx.embed(ctx.side(v), ctx.project(v)) == v for v in range(16))


@pytest.mark.parametrize("j", [0, 4])
def test_split_rejects_index(j):
    with pytest.raises(InvalidArgument):
        split(3, j)


@given(st.integers(2, 7).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))))
def test_split_invariants(nj):
    n, j = nj
    ctx = split(n, j)
    left, right = ctx.half("L"), ctx.half("R")
    assert len(left) == len(right) == 1 << (n - 1)
    assert to_mask(left) == ctx.half_mask("L")
    for v in range(1 << n):
        w = ctx.peer(v)
        assert ctx.side(w) != ctx.side(v)
        assert ctx.peer(w) == v
        assert ctx.project(w) == ctx.project(v)


@given(st.integers(3, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(1, n), st.integers(0, (1 << n) - 1), st.integers(0, (1 << n) - 1))))
def test_split_preserves_distance_within_half(case):
    n, j, u, v = case
    ctx = split(n, j)
    u = ctx.embed("L", ctx.project(u))
    v = ctx.embed("L", ctx.project(v))
    assert distance(ctx.project(u), ctx.project(v)) == distance(u, v)
    assert distance(ctx.project(ctx.peer(u)), ctx.project(ctx.peer(v))) == distance(u, v)


def test_path_helpers():
    assert is_path([0, 1, 3, 7])
    assert not is_path([0, 3])
    assert not is_path([0, 1, 0])
    assert adjacent(4, 5) and not adjacent(4, 4)
    assert set_distance([0, 1], [6, 7]) == 2


@given(st.sets(st.integers(0, 31)))
def test_mask_round_trip_and_expand(vs):
    m = to_mask(vs)
    assert from_mask(m) == sorted(vs)
    grown = set(from_mask(expand(m, 5)))
    assert grown == {w for v in vs for w in naive_neighbors(v, 5)}
    two = set(from_mask(at_least_two_neighbors(m, 5)))
    assert two == {v for v in range(32) if sum(w in vs for w in naive_neighbors(v, 5)) >= 2}


def test_flood_stays_in_component():
    allowed = full_mask(3) & ~to_mask([1, 2, 4])
    assert from_mask(flood(to_mask([0]), allowed, 3)) == [0]
    assert set(from_mask(flood(to_mask([7]), allowed, 3))) == {3, 5, 6, 7}


@given(st.permutations(range(4)), st.integers(0, 15))
def test_relabel_is_automorphism_with_inverse(perm, mask):
    rl = Relabel(4, tuple(perm), mask)
    inv = rl.inverse()
    images = [rl(v) for v in range(16)]
    assert sorted(images) == list(range(16))
    for v in range(16):
        assert inv(rl(v)) == v
        for w in neighbors(v, 4):
            assert adjacent(rl(v), rl(w))


def test_flip_is_involution():
    rl = Relabel.flip(4, 0b0100)
    assert all(rl(rl(v)) == v for v in range(16))
    assert rl.inverse()(3) == rl(3)
