import functools
import itertools
import random

import pytest
from hypothesis import given, settings

from cubepaths.errors import DimensionTooLarge
from cubepaths.faults import Instance
from cubepaths.router import route
from cubepaths.verify import brute_force_best, check_paths, verify
from conftest import theorem_instances
from mutations import FIELDS, MUTATIONS
from oracles import best_cover


def test_valid_route_output_passes():
    inst = Instance.make(4, [0b1111], [0b0000, 0b0011], [0b0001, 0b0010])
    paths, _ = route(inst)
    rep = verify(inst, paths)
    assert rep.passed and rep.meets_bound and rep.coverage >= 14
    assert rep.as_dict()["passed"] is True
    assert set(rep.pairing) == {0, 3}


def test_faulty_vertex_detected():
    inst = Instance.make(3, [0b110], [0], [7])
    rep = verify(inst, [(0, 2, 6, 7)])
    assert not rep.fault_free and rep.disjoint and rep.all_edges_valid
    assert any("faulty" in msg for msg in rep.failures)


def test_shared_vertex_detected():
    inst = Instance.make(3, [], [0, 3], [1, 2])
    rep = verify(inst, [(0, 4, 5, 1), (3, 7, 5, 4, 6, 2)])
    assert not rep.disjoint
    assert any("shared" in msg for msg in rep.failures)


def test_bad_edge_and_range_detected():
    inst = Instance.make(3, [], [0], [7])
    assert not verify(inst, [(0, 3, 7)]).all_edges_valid
    assert not verify(inst, [(0, 8, 7)]).all_edges_valid


def test_endpoint_problems():
    inst = Instance.make(3, [], [0, 3], [1, 2])
    rep = verify(inst, [(0, 1), (3, 2)])
    assert rep.endpoints_bijection and not rep.meets_bound
    assert verify(inst, [(1, 0), (2, 3)]).endpoints_bijection  # either orientation
    assert not verify(inst, [(0, 1)]).endpoints_bijection
    assert verify(inst, [(0, 2), (3, 1)]).endpoints_bijection  # any bijection will do
    assert not verify(inst, [(0, 1, 3, 2)]).endpoints_bijection
    assert not verify(inst, [(0, 1), (1, 3)]).endpoints_bijection


def test_brute_force_examples():
    best, witness = brute_force_best(Instance.make(2, [], [0b00], [0b01]))
    assert best == 4 and len(witness[0]) == 4
    best, witness = brute_force_best(Instance.make(3, [0b110], [0b000], [0b111]))
    assert best >= 6
    assert check_paths(3, [6], [0], [7], witness, best).passed


def test_brute_force_infeasible_and_cap():
    # 0 is cut off entirely
    assert brute_force_best(Instance.make(3, [1, 2, 4], [0], [7])) is None
    with pytest.raises(DimensionTooLarge):
        brute_force_best(Instance.make(5, [], [0], [1]))


def test_brute_force_agrees_with_naive_oracle_q3():
    for faults in [(), (5,), (3, 5)]:
        free = [v for v in range(8) if v not in faults]
        X = [v for v in free if bin(v).count("1") % 2 == 0]
        Y = [v for v in free if bin(v).count("1") % 2 == 1]
        for k in (1, 2):
            for S in itertools.combinations(X, k):
                for T in itertools.combinations(Y, k):
                    got = brute_force_best(Instance.make(3, faults, S, T))
                    want = best_cover(3, faults, S, T)
                    assert (got[0] if got else None) == want


@settings(max_examples=40)
@given(theorem_instances(n_min=3, n_max=4))
def test_theorem_bound_holds_on_oracle(inst):
    best, _ = brute_force_best(inst)
    assert best >= inst.bound
    paths, _ = route(inst)
    assert verify(inst, paths).coverage <= best


@functools.lru_cache(maxsize=None)
def _corpus(count, seed):
    from cubepaths.campaign import random_instance

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(4, 6)
        k = rng.randint(1, n - 2)
        # maximal f, where faults split across both classes leave some slack
        inst = random_instance(n, k, rng)
        out.append((inst, route(inst)[0]))
    return tuple(out)


@pytest.mark.parametrize("field", FIELDS)
def test_mutation_flips_exactly_its_field(field):
    hits = 0
    for inst, paths in _corpus(300, 11):
        assert verify(inst, paths).passed
        bad = MUTATIONS[field](inst, paths)
        if bad is None:
            continue
        hits += 1
        faults, mutated, bound = bad
        rep = check_paths(inst.n, faults, inst.sources, inst.sinks, mutated, bound)
        assert not rep.passed and rep.failures
        for other in FIELDS:
            assert getattr(rep, other) is (other != field), (field, other, rep.failures)
    assert hits >= 5
