import random

import pytest

from hlrc.code import encode
from hlrc.errors import InconsistentWordError, TooLargeError, TooManyErasuresError, ValidationError
from hlrc.repair import Tier, plan_repair, repair, tolerance_check

from .conftest import monomial_code


def erase(word, positions):
    out = list(word)
    for c in positions:
        out[c] = None
    return out


def test_single_erasure_plan(toy):
    c11 = toy.index_of_point[11]
    plan = plan_repair(toy, [c11])
    assert [s.tier for s in plan.steps] == [Tier.SUBNEST]
    assert [toy.eval_points[c] for c in plan.steps[0].helpers] == [1, 7]
    assert plan.total_access == 2


def test_same_subnest_pair_plan(toy):
    plan = plan_repair(toy, [0, 1])
    assert [s.tier for s in plan.steps] == [Tier.NEST]
    helpers = plan.steps[0].helpers
    assert len(helpers) == 4 and set(helpers) <= set(toy.nest_columns(0))
    # smallest surviving point values: 8, 11, 12, 18
    assert sorted(toy.eval_points[c] for c in helpers) == [8, 11, 12, 18]


def test_split_pairs_use_subnest_locality(toy):
    plan = plan_repair(toy, [0, 6])
    assert [s.tier for s in plan.steps] == [Tier.SUBNEST, Tier.SUBNEST]
    assert plan.total_access == 4
    plan = plan_repair(toy, [0, 3])  # same nest, different sub-nests
    assert [s.tier for s in plan.steps] == [Tier.SUBNEST, Tier.SUBNEST]


def test_scattered_eight_is_global(toy):
    erased = [0, 1, 2, 3, 7, 9, 12, 17]
    plan = plan_repair(toy, erased)
    assert [s.tier for s in plan.steps] == [Tier.GLOBAL]
    assert plan.total_access == 6
    assert not set(plan.steps[0].helpers) & set(erased)


def test_too_many_erasures(toy):
    with pytest.raises(TooManyErasuresError):
        plan_repair(toy, range(9))
    with pytest.raises(ValidationError):
        plan_repair(toy, [18])


def test_repair_round_trips_by_tier(toy):
    rng = random.Random(2024)
    for _ in range(300):
        cw = encode(toy, [rng.randrange(19) for _ in range(6)])
        single = [rng.randrange(18)]
        i, j = rng.randrange(3), rng.randrange(2)
        pair = rng.sample(toy.subnest_columns(i, j), 2)
        scattered = rng.sample(range(18), 8)
        for pattern in (single, pair, scattered):
            assert repair(toy, erase(cw, pattern)) == cw


def test_repair_on_larger_code():
    code = monomial_code(2, 6, 3, 3, s=2)
    rng = random.Random(1)
    for _ in range(30):
        cw = encode(code, [rng.randrange(64) for _ in range(code.k)])
        for count in (1, 2, code.d - 1):
            pattern = rng.sample(range(code.n), count)
            assert repair(code, erase(cw, pattern)) == cw


def test_inconsistent_word_detected_in_global_tier(toy):
    cw = encode(toy, [1, 2, 3, 4, 5, 6])
    word = erase(cw, [0, 1, 2, 3, 4, 5, 6, 7])
    word[17] = (word[17] + 1) % 19
    with pytest.raises(InconsistentWordError):
        repair(toy, word)


def test_pattern_must_match_word(toy):
    cw = encode(toy, [1, 2, 3, 4, 5, 6])
    with pytest.raises(ValidationError):
        repair(toy, erase(cw, [0]), erased=[1])


def test_tolerance_on_toy(toy):
    for i in range(3):
        assert tolerance_check(toy, toy.nest_columns(i), 2)
        for j in range(2):
            sub = toy.subnest_columns(i, j)
            assert tolerance_check(toy, sub, 1)
            assert not tolerance_check(toy, sub, 2)


def test_tolerance_cap(toy):
    with pytest.raises(TooLargeError):
        tolerance_check(toy, range(18), 9, cap=1000)


@pytest.mark.parametrize("case", [(2, 6, 3, 3, 1, 2), (5, 2, 3, 4, 1, 3), (37, 1, 3, 4, 0, 2)])
def test_tolerance_holds_for_constructed_codes(case):
    p, e, df, dh, s, lam = case
    code = monomial_code(p, e, df, dh, s, lam)
    for i in range(code.ell):
        assert tolerance_check(code, code.nest_columns(i), code.lam)
        for j in range(code.subnests_per_nest):
            assert tolerance_check(code, code.subnest_columns(i, j), 1)


def test_planner_prefers_cheapest_tier(toy):
    rng = random.Random(9)
    for _ in range(500):
        pattern = rng.sample(range(18), rng.randrange(1, 9))
        plan = plan_repair(toy, pattern)
        per_nest = {}
        for c in pattern:
            per_nest.setdefault(toy.locate(c)[0], []).append(c)
        worst = Tier.SUBNEST
        for cols in per_nest.values():
            subs = [toy.locate(c)[1] for c in cols]
            if len(set(subs)) < len(subs):
                worst = Tier.GLOBAL if len(cols) > toy.lam else max(worst, Tier.NEST, key=list(Tier).index)
        if worst is Tier.GLOBAL:
            assert [s.tier for s in plan.steps] == [Tier.GLOBAL]
        else:
            assert Tier.GLOBAL not in [s.tier for s in plan.steps]
        for step in plan.steps:
            assert len(step.helpers) == {Tier.SUBNEST: 2, Tier.NEST: 4, Tier.GLOBAL: 6}[step.tier]
            assert not set(step.helpers) & set(pattern)
