from fractions import Fraction

import pytest

import tiematch


def test_tight_instance_reaches_thirteen_ninths():
    rep = tiematch.verify(
        tiematch.tight_instance(), tiematch.tight_schedule(), tiematch.tight_oracle_bound()
    )
    assert rep["passed"]
    assert rep["m_size"] == 9
    assert rep["opt_size"] == 13
    assert tiematch.ratio(rep) == Fraction(13, 9)
    assert (rep["t"], rep["k"], rep["ell_sum"]) == (3, 1, 1)
    assert all(ok for ok, _ in rep["lemmas"].values())


def test_run_single_pair():
    inst = tiematch.Instance.parse("men 1\nwomen 1\nm 0: 0\nw 0: (0)\n")
    out = tiematch.run(inst)
    assert out["matching"] == [(0, 0)]
    assert out["accepted"] == [(0, 0)]
    assert out["steps"] == 2
    assert "accept" in out["trace"]


def test_blocking_pairs_and_oracle():
    inst = tiematch.Instance.from_lists([[0, 1], [0]], [[[0], [1]], [[0]]])
    assert tiematch.blocking_pairs(inst, []) != []
    opt = tiematch.opt_oracle(inst)
    assert tiematch.blocking_pairs(inst, opt) == []
    assert opt == [(0, 0)]


def test_round_trips():
    inst = tiematch.Instance.random(5, 4, 0.6, 0.5, 11)
    assert tiematch.Instance.parse(inst.serialize()) == inst
    sched = tiematch.tight_schedule()
    assert tiematch.Schedule.parse(sched.serialize()).serialize() == sched.serialize()


def test_errors_map_to_value_error():
    with pytest.raises(tiematch.TiematchError):
        tiematch.Instance.parse("men 1\nwomen 1\nm 0: 0\nw 0:\n")
    with pytest.raises(ValueError):
        tiematch.Instance.parse("garbage")


def test_fuzz_campaign():
    out = tiematch.fuzz(200, jobs=2)
    assert out["instances"] == 200
    assert out["failures"] == 0
    assert Fraction(*out["max_ratio"]) <= Fraction(13, 9)
    assert out["tsv"].count("\n") == 201
