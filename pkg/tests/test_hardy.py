import random
from fractions import Fraction

import pytest

from src.common.errors import StatisticsError, TriggerError
from src.fock import OccupationPattern, boson_n, context_patterns, vacuum
from src.hardy import (
    HardyChain,
    Justification,
    PartialAssignment,
    default_order,
    global_consistency,
    hardy_search,
    propagate,
    support_table,
)
from src.occupancy import Statistics
from src.reporting.expected import (
    BOSON_CONTRADICTION,
    FERMION_CHAIN,
    FERMION_CONTRADICTIONS,
    boson_chain,
)

FERMION_TRIGGER = OccupationPattern("C3", (0, 1, 1, 0))


def boson_trigger(n):
    return OccupationPattern("C4", (n, 0, 0, 0))


def test_support_sizes(canonical, fermion_pair_state, boson_pair_state):
    fermions = support_table(fermion_pair_state, canonical)
    assert len(fermions.support("C6")) == 1
    assert len(fermions.support("C7")) == 3
    assert len(fermions.support("C1")) == 3
    assert fermions.probability(FERMION_TRIGGER) == Fraction(1, 16)

    bosons = support_table(boson_pair_state, canonical)
    assert len(bosons.support("C1")) == 1
    assert len(bosons.support("C6")) == 1
    assert len(bosons.support("C7")) == 3


def test_default_order_puts_sharp_contexts_first(canonical, fermion_pair_state):
    table = support_table(fermion_pair_state, canonical)
    order = default_order(table, canonical)
    assert order[0] == "C6"
    sizes = [len(table.support(cid)) for cid in order]
    assert sizes == sorted(sizes)


def test_fermion_chain(canonical, fermion_pair_state):
    table = support_table(fermion_pair_state, canonical)
    chain = propagate(table, FERMION_TRIGGER, canonical, 2, Statistics.FERMION)
    assert isinstance(chain, HardyChain)
    assert chain.probability == Fraction(1, 16)
    assert chain.trigger_context == "C3"
    assert chain.contradictions == FERMION_CONTRADICTIONS
    assert chain.contradiction == "C2"
    assert chain.forced_contexts(canonical) == FERMION_CHAIN
    assert [s.context_id for s in chain.steps] == ["C6", "C7", "C9", "C1", "C5", "C8"]


def test_fermion_chain_justifications(canonical, fermion_pair_state):
    table = support_table(fermion_pair_state, canonical)
    chain = propagate(table, FERMION_TRIGGER, canonical, 2, Statistics.FERMION)
    kinds = {s.justification for s in chain.steps}
    assert Justification.SUPPORT_AGREEMENT in kinds
    # 트리거 모드는 0 단계
    assert chain.assignment.provenance["v37"] == 0
    assert chain.assignment.provenance["v39"] == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_boson_chain(canonical, n):
    state = boson_n(canonical, "v16", n)
    table = support_table(state, canonical)
    chain = propagate(table, boson_trigger(n), canonical, n, Statistics.BOSON)
    assert isinstance(chain, HardyChain)
    assert chain.probability == Fraction(1, 4 ** n)
    assert chain.contradiction == BOSON_CONTRADICTION
    assert chain.forced_contexts(canonical) == boson_chain(n)


def test_zero_probability_trigger(canonical, fermion_pair_state):
    table = support_table(fermion_pair_state, canonical)
    # C6 에서는 (v67, v69) 만 support
    bad = OccupationPattern("C6", (1, 0, 0, 1))
    with pytest.raises(TriggerError):
        propagate(table, bad, canonical, 2, Statistics.FERMION)
    with pytest.raises(TriggerError):
        global_consistency(fermion_pair_state, canonical, bad, table)


def test_mismatched_table(canonical, fermion_pair_state):
    table = support_table(fermion_pair_state, canonical)
    with pytest.raises(StatisticsError):
        propagate(table, FERMION_TRIGGER, canonical, 2, Statistics.BOSON)
    with pytest.raises(StatisticsError):
        propagate(table, FERMION_TRIGGER, canonical, 2, Statistics.FERMION, order=["C1", "C2"])


@pytest.mark.parametrize("seed", range(5))
def test_scan_order_does_not_change_outcome(canonical, fermion_pair_state, boson_pair_state, seed):
    rng = random.Random(seed)
    for state in (fermion_pair_state, boson_pair_state):
        table = support_table(state, canonical)
        order = list(canonical.context_ids)
        rng.shuffle(order)
        for cid in canonical.context_ids:
            for trigger in table.support(cid):
                default = propagate(table, trigger, canonical, state.n_particles, state.statistics)
                shuffled = propagate(table, trigger, canonical, state.n_particles, state.statistics, order)
                assert isinstance(default, HardyChain) == isinstance(shuffled, HardyChain)
                if isinstance(default, PartialAssignment):
                    assert default.values == shuffled.values


def test_chains_have_no_consistent_completion(canonical, fermion_pair_state, boson_pair_state):
    for state in (fermion_pair_state, boson_pair_state):
        table = support_table(state, canonical)
        for chain in hardy_search(state, canonical):
            assert not global_consistency(state, canonical, chain.trigger, table)


def test_vacuum_is_consistent(canonical):
    state = vacuum(Statistics.FERMION)
    table = support_table(state, canonical)
    trigger = table.support("C1")[0]
    assert global_consistency(state, canonical, trigger, table)
    assert not isinstance(propagate(table, trigger, canonical, 0, Statistics.FERMION), HardyChain)
    assert hardy_search(state, canonical) == []


def test_hardy_search_finds_quarter_squared_chain(canonical, fermion_pair_state):
    chains = hardy_search(fermion_pair_state, canonical)
    assert chains
    assert FERMION_TRIGGER in {c.trigger for c in chains}
    assert max(c.probability for c in chains) >= Fraction(1, 16)


def test_hardy_search_parallel_matches_sequential(canonical, boson_pair_state):
    seq = hardy_search(boson_pair_state, canonical, jobs=1)
    par = hardy_search(boson_pair_state, canonical, jobs=2)
    assert [c.trigger for c in seq] == [c.trigger for c in par]
    assert [c.contradictions for c in seq] == [c.contradictions for c in par]
    assert boson_trigger(2) in {c.trigger for c in seq}


def test_partial_assignment_rejects_conflicts():
    assignment = PartialAssignment()
    assignment.assign("v16", 1, 0)
    assignment.assign("v16", 1, 2)
    with pytest.raises(ValueError):
        assignment.assign("v16", 0, 3)


def values_before(chain, step_number):
    """단계 step_number 직전까지 할당된 값 (트리거 = 0 단계)"""
    a = chain.assignment
    return {mid: v for mid, v in a.values.items() if a.provenance[mid] < step_number}


def agrees(pattern, values, h):
    return all(values.get(mid, c) == c for mid, c in pattern.as_dict(h).items())


def recheck_steps(chain, table, h, n, stats):
    for number, step in enumerate(chain.steps, start=1):
        before = values_before(chain, number)
        ids = h.context(step.context_id).mode_ids
        assert all(mid not in before for mid, _ in step.forced)
        if step.justification is Justification.SUPPORT_AGREEMENT:
            restricted = [p for p in table.support(step.context_id) if agrees(p, before, h)]
            assert restricted
            for mid, value in step.forced:
                assert {p.as_dict(h)[mid] for p in restricted} == {value}
        else:
            # 컨텍스트 합 = N 으로 강제된 값: 단계 뒤 컨텍스트가 다 차고 합이 N
            after = {**before, **dict(step.forced)}
            assert all(mid in after for mid in ids)
            assert sum(after[mid] for mid in ids) == n
            consistent = [p for p in context_patterns(h, step.context_id, n, stats) if agrees(p, before, h)]
            for mid, value in step.forced:
                assert {p.as_dict(h)[mid] for p in consistent} == {value}


def test_every_fermion_step_is_justified(canonical, fermion_pair_state):
    table = support_table(fermion_pair_state, canonical)
    chain = propagate(table, FERMION_TRIGGER, canonical, 2, Statistics.FERMION)
    recheck_steps(chain, table, canonical, 2, Statistics.FERMION)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_every_boson_step_is_justified(canonical, n):
    state = boson_n(canonical, "v16", n)
    table = support_table(state, canonical)
    chain = propagate(table, boson_trigger(n), canonical, n, Statistics.BOSON)
    recheck_steps(chain, table, canonical, n, Statistics.BOSON)


def test_every_searched_chain_is_justified(canonical, fermion_pair_state):
    table = support_table(fermion_pair_state, canonical)
    for chain in hardy_search(fermion_pair_state, canonical):
        recheck_steps(chain, table, canonical, 2, Statistics.FERMION)
