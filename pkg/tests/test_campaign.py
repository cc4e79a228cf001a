import itertools

import pytest

from cubepaths.campaign import (
    conditional_fault_sets,
    enumerate_check,
    exhaustive_instances,
    random_instances,
)
from cubepaths.errors import InvalidArgument
from cubepaths.hypercube import parity, Parity


def test_exhaustive_q3_k1():
    s = enumerate_check(3, 1, "exhaustive")
    assert s.failed == 0 and s.passed == s.instances > 0
    assert s.counterexample is None


def test_exhaustive_q4_k2():
    s = enumerate_check(4, 2, "exhaustive")
    assert s.failed == 0 and s.instances == 10192


def test_randomized_replayable():
    a = enumerate_check(6, 3, "randomized", samples=200, seed=7)
    b = enumerate_check(6, 3, "randomized", samples=200, seed=7)
    assert a.failed == 0 and a.instances == 200
    assert a.as_dict() == b.as_dict()
    assert "runtime_s" not in a.as_dict() and "runtime_s" in a.as_dict(timing=True)


def test_sampler_respects_hypotheses():
    for inst in random_instances(6, 2, 200, seed=3):
        assert inst.f == 2 * 6 - 2 * 2 - 3
        assert not inst.structural_violations() and not inst.hypothesis_violations()


def test_exhaustive_instances_fix_source_class():
    insts = list(exhaustive_instances(3, 1))
    assert all(parity(i.sources[0]) is Parity.X for i in insts)
    assert len({(i.faults, i.sources, i.sinks) for i in insts}) == len(insts)


def test_conditional_fault_sets_count_q4():
    # every set of size <= 1, plus the size-2 and size-3 sets that keep two fault-free neighbours
    sets = list(conditional_fault_sets(4, 3))
    assert len([s for s in sets if len(s) <= 1]) == 17
    assert all(len(s) <= 3 for s in sets)


def test_failure_aborts_with_counterexample(monkeypatch):
    import cubepaths.campaign as campaign

    calls = itertools.count()

    def flaky(inst, budget):
        ok = next(calls) < 3
        return campaign.Outcome(ok, False, False, [], "" if ok else "boom")

    monkeypatch.setattr(campaign, "run_one", flaky)
    s = enumerate_check(5, 2, "randomized", samples=50, seed=1)
    assert s.failed == 1 and s.instances == 4
    assert s.counterexample is not None and s.error == "boom"
    assert s.as_dict()["counterexample"]["n"] == 5


@pytest.mark.parametrize(
    "args",
    [(5, 1, "exhaustive"), (8, 2, "randomized"), (5, 4, "randomized"), (5, 2, "sideways")],
)
def test_invalid_parameters(args):
    with pytest.raises(InvalidArgument):
        enumerate_check(*args, samples=1)


def test_workers_match_serial():
    a = enumerate_check(5, 2, "randomized", samples=60, seed=4, workers=2)
    b = enumerate_check(5, 2, "randomized", samples=60, seed=4, workers=1)
    assert a.as_dict() == b.as_dict()
