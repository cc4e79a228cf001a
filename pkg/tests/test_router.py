import random

import pytest
from hypothesis import given, settings

from cubepaths.errors import BudgetExceeded, PreconditionViolation
from cubepaths.faults import Instance
from cubepaths.hypercube import adjacent, parity
from cubepaths.router import FALLBACK_TAGS, CaseTag, route
from cubepaths.solvers import SolverBudget
from cubepaths.verify import verify
from cubepaths.campaign import random_instance
from conftest import theorem_instances


def test_q3_hamiltonian_example():
    inst = Instance.make(3, [], [0b000], [0b111])
    paths, trace = route(inst)
    assert len(paths[0]) == 8
    assert trace.tags == ["BaseK1"]


def test_q5_theorem_bound_example():
    inst = Instance.make(5, [0b01000, 0b01100, 0b10001], [0, 3], [1, 2])
    paths, trace = route(inst)
    rep = verify(inst, paths)
    assert rep.passed and rep.coverage >= 26


def test_q4_example():
    inst = Instance.make(4, [0b1111], [0b0000, 0b0011], [0b0001, 0b0010])
    paths, trace = route(inst)
    rep = verify(inst, paths)
    assert rep.passed and len(paths) == 2 and rep.coverage >= 14
    assert trace.tags == ["BaseKmax"]


def test_rejects_non_theorem_instances():
    with pytest.raises(PreconditionViolation, match="f=4 exceeds"):
        route(Instance.make(5, [1, 2, 4, 8], [0, 3], [7, 11]))
    with pytest.raises(PreconditionViolation):
        route(Instance.make(4, [], [0, 3, 5], [1, 2, 4]))  # k > n - 2
    with pytest.raises(PreconditionViolation):
        route(Instance.make(4, [1, 2, 4, 8], [0], [3]))  # 0 isolated


def test_budget_exceeded_is_surfaced():
    inst = Instance.make(5, [], [0, 3], [1, 2])
    with pytest.raises(BudgetExceeded):
        route(inst, SolverBudget(max_dimension=3))


@settings(max_examples=80)
@given(theorem_instances(n_min=3, n_max=7))
def test_route_output_verifies(inst):
    paths, trace = route(inst)
    rep = verify(inst, paths)
    assert rep.passed, rep.failures
    for p in paths:
        assert all(parity(a) != parity(b) for a, b in zip(p, p[1:]))
    for rec in trace.records:
        assert all(adjacent(a, b) for a, b in rec.seams)
        assert isinstance(rec.case, CaseTag)


@settings(max_examples=40)
@given(theorem_instances(n_min=5, n_max=7))
def test_trace_shape(inst):
    _, trace = route(inst)
    assert trace.records
    top = trace.records[0]
    assert top.depth == 0 and top.n == inst.n
    for rec in trace.records:
        # depth never exceeds the distance to the smallest cube a base case handles
        assert rec.depth <= inst.n - 4
        if rec.case not in FALLBACK_TAGS and rec.case.value.startswith("Case"):
            assert rec.j is not None and rec.f_l + rec.f_r == rec.f


def test_every_construction_branch_is_reached():
    rng = random.Random(2024)
    seen = set()
    for _ in range(1500):
        n = rng.choice([5, 6])
        k = rng.randint(2, n - 3)
        _, trace = route(random_instance(n, k, rng))
        seen.update(trace.tags)
    expected = {"Case1_1", "Case1_2a", "Case2", "Case3a", "Case3b", "BaseK1", "BaseKmax"}
    assert expected <= seen


def test_route_is_deterministic():
    inst = random_instance(7, 3, random.Random(9))
    a, ta = route(inst)
    b, tb = route(inst)
    assert a == b and ta == tb


def test_level_record_dict():
    inst = random_instance(6, 2, random.Random(1))
    _, trace = route(inst)
    d = trace.records[0].as_dict()
    assert set(d) >= {"depth", "n", "k", "f", "case", "j", "p", "q", "f_L", "f_R", "seams"}
