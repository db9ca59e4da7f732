from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest

from src.common.errors import ModeSetError, PauliExclusionError, ScalarError, StatisticsError, TransformError
from src.fock import (
    OccupationPattern,
    amplitude,
    amplitude_sign,
    boson_n,
    context_patterns,
    determinant,
    expand_in_context,
    fermion_pair,
    multiplicity_factorial,
    number_expectation,
    outcome_distribution,
    parse_state_spec,
    permanent,
    probability,
    product_of,
    product_state,
    state_spec_text,
    synthesize,
    transform_state,
    vacuum,
)
from src.modespace import apply_transform, givens, random_float_orthogonal, signed_permutation
from src.occupancy import Statistics
from src.scalars import EXACT, QSqrt2, parse_scalar

S2 = QSqrt2.sqrt2()

# 밀집 (반)대칭 두 입자 공간 오라클 (4⊗4, numpy object 배열에 정확 스칼라)


def unit(h, mode_id):
    v = h.mode(mode_id)
    return np.array(v.components, dtype=object) / EXACT.sqrt(v.norm_squared)


def two_particle(a, b, stats):
    sign = -1 if stats is Statistics.FERMION else 1
    return np.outer(a, b).ravel() + sign * np.outer(b, a).ravel()


def dense_probability(h, pair, pattern, stats):
    state = two_particle(unit(h, pair[0]), unit(h, pair[1]), stats)
    occupied = [mid for mid, c in pattern.as_dict(h).items() for _ in range(c)]
    basis = two_particle(unit(h, occupied[0]), unit(h, occupied[1]), stats)
    inner = np.dot(basis, state)
    return inner * inner / (np.dot(basis, basis) * np.dot(state, state))


ORACLE_PAIRS = [("v67", "v69"), ("v16", "v45"), ("v34", "v12"), ("v37", "v58"), ("v23", "v29")]


@pytest.mark.parametrize("pair", ORACLE_PAIRS)
def test_fermion_probabilities_match_dense_space(canonical, pair):
    state = fermion_pair(canonical, *pair)
    for cid in canonical.context_ids:
        patterns = context_patterns(canonical, cid, 2, Statistics.FERMION)
        assert len(patterns) == 6
        for p in patterns:
            assert probability(state, p, canonical) == dense_probability(canonical, pair, p, Statistics.FERMION)


@pytest.mark.parametrize("pair", ORACLE_PAIRS + [("v16", "v16"), ("v45", "v45")])
def test_boson_probabilities_match_dense_space(canonical, pair):
    state = product_of(canonical, list(pair), Statistics.BOSON)
    for cid in canonical.context_ids:
        patterns = context_patterns(canonical, cid, 2, Statistics.BOSON)
        assert len(patterns) == 10
        for p in patterns:
            assert probability(state, p, canonical) == dense_probability(canonical, pair, p, Statistics.BOSON)


def test_dense_amplitude_for_orthogonal_pair(canonical, fermion_pair_state):
    a, b = unit(canonical, "v67"), unit(canonical, "v69")
    state = two_particle(a, b, Statistics.FERMION) / S2
    for p in context_patterns(canonical, "C3", 2, Statistics.FERMION):
        x, y = [mid for mid, c in p.as_dict(canonical).items() if c]
        basis = two_particle(unit(canonical, x), unit(canonical, y), Statistics.FERMION) / S2
        assert amplitude(fermion_pair_state, p, canonical) == np.dot(basis, state)


# 전개 계수


def expansion(state, h, cid):
    return {tuple(p.occupied(h).items()): amp for p, amp in expand_in_context(state, cid, h)}


def test_fermion_pair_in_c3(canonical, fermion_pair_state):
    got = expansion(fermion_pair_state, canonical, "C3")
    assert got == {
        (("v34", 1), ("v37", 1)): parse_scalar("-1/4*s2"),
        (("v34", 1), ("v39", 1)): parse_scalar("1/4"),
        (("v34", 1), ("v23", 1)): parse_scalar("-3/4"),
        (("v37", 1), ("v39", 1)): parse_scalar("-1/4"),
        (("v37", 1), ("v23", 1)): parse_scalar("1/4"),
        (("v39", 1), ("v23", 1)): parse_scalar("1/4*s2"),
    }


def test_fermion_pair_in_c7_and_c9(canonical, fermion_pair_state):
    # 기준 전개와 전역 부호 -1 차이
    assert expansion(fermion_pair_state, canonical, "C7") == {
        (("v17", 1), ("v67", 1)): parse_scalar("-1/2*s2"),
        (("v67", 1), ("v47", 1)): parse_scalar("-1/2"),
        (("v67", 1), ("v37", 1)): parse_scalar("-1/2"),
    }
    assert expansion(fermion_pair_state, canonical, "C9") == {
        (("v69", 1), ("v59", 1)): parse_scalar("1/2*s2"),
        (("v69", 1), ("v39", 1)): parse_scalar("1/2"),
        (("v69", 1), ("v29", 1)): parse_scalar("-1/2"),
    }


def test_fermion_pair_is_sharp_in_c6(canonical, fermion_pair_state):
    assert expansion(fermion_pair_state, canonical, "C6") == {(("v67", 1), ("v69", 1)): QSqrt2(1)}


def test_boson_pair_in_c4(canonical, boson_pair_state):
    assert expansion(boson_pair_state, canonical, "C4") == {
        (("v45", 2),): parse_scalar("1/4"),
        (("v45", 1), ("v48", 1)): parse_scalar("1/4*s2"),
        (("v45", 1), ("v47", 1)): parse_scalar("-1/2"),
        (("v48", 2),): parse_scalar("1/4"),
        (("v48", 1), ("v47", 1)): parse_scalar("-1/2"),
        (("v47", 2),): parse_scalar("1/2"),
    }


@pytest.mark.parametrize("n, amp", [(1, "1/2"), (2, "1/4"), (3, "1/8"), (4, "1/16")])
def test_n_bosons_all_in_v45(canonical, n, amp):
    state = boson_n(canonical, "v16", n)
    pattern = OccupationPattern("C4", (n, 0, 0, 0))
    assert amplitude(state, pattern, canonical) == parse_scalar(amp)
    assert probability(state, pattern, canonical) == Fraction(1, 4 ** n)


def test_distributions_sum_to_one(canonical, fermion_pair_state, boson_pair_state):
    for state in (fermion_pair_state, boson_pair_state, boson_n(canonical, "v16", 3)):
        assert state.norm_squared() == 1
        for cid in canonical.context_ids:
            assert sum(outcome_distribution(state, cid, canonical).values(), QSqrt2()) == 1


def test_non_orthogonal_fermions_keep_exact_probabilities(canonical):
    state = fermion_pair(canonical, "v16", "v45")
    assert state.scale == Fraction(3, 4)
    assert state.norm_squared() == 1
    assert sum(outcome_distribution(state, "C2", canonical).values(), QSqrt2()) == 1
    # 진폭 자체는 √3 을 포함해 체 밖
    supported = [p for p, prob in outcome_distribution(state, "C2", canonical).items() if prob]
    with pytest.raises(ScalarError):
        for p in supported:
            amplitude(state, p, canonical)


def test_pauli_exclusion(canonical):
    with pytest.raises(PauliExclusionError):
        fermion_pair(canonical, "v16", "v16")
    state = fermion_pair(canonical, "v67", "v69")
    assert amplitude(state, OccupationPattern("C6", (0, 2, 0, 0)), canonical) == 0


def test_pattern_validation(canonical, fermion_pair_state):
    with pytest.raises(StatisticsError):
        amplitude(fermion_pair_state, OccupationPattern("C6", (1, 1, 1, 0)), canonical)
    with pytest.raises(StatisticsError):
        amplitude(fermion_pair_state, OccupationPattern("C6", (1, 1)), canonical)


def test_antisymmetry_of_determinant():
    m = [[QSqrt2(1), S2 / 2], [QSqrt2(Fraction(1, 3)), QSqrt2(2)]]
    swapped = [m[1], m[0]]
    assert determinant(m, EXACT) == -determinant(swapped, EXACT)
    assert determinant([], EXACT) == 1
    assert permanent(m, EXACT) == permanent(swapped, EXACT)
    assert permanent([], EXACT) == 1


def test_permanent_matches_expansion():
    m = [[QSqrt2(i + 2 * j) for j in range(3)] for i in range(3)]
    direct = sum(
        (m[0][p[0]] * m[1][p[1]] * m[2][p[2]] for p in permutations(range(3))),
        QSqrt2(),
    )
    assert permanent(m, EXACT) == direct
    assert multiplicity_factorial((2, 0, 3)) == 12


def test_number_expectation(canonical, fermion_pair_state, boson_pair_state):
    assert number_expectation(fermion_pair_state, "v34", canonical) == Fraction(3, 4)
    assert number_expectation(fermion_pair_state, "v34", canonical, "C4") == Fraction(3, 4)
    assert number_expectation(fermion_pair_state, "v67", canonical) == 1
    assert number_expectation(boson_pair_state, "v16", canonical) == 2
    assert number_expectation(boson_pair_state, "v45", canonical) == Fraction(1, 2)


def test_number_expectation_wrong_context(canonical, fermion_pair_state):
    with pytest.raises(ModeSetError):
        number_expectation(fermion_pair_state, "v34", canonical, "C1")


def test_synthesize_recovers_the_state(canonical, fermion_pair_state, boson_pair_state):
    for state, stats in ((fermion_pair_state, Statistics.FERMION), (boson_pair_state, Statistics.BOSON)):
        rebuilt = synthesize(expand_in_context(state, "C4", canonical), canonical, stats)
        assert rebuilt.norm_squared() == 1
        for cid in canonical.context_ids:
            assert outcome_distribution(rebuilt, cid, canonical) == outcome_distribution(state, cid, canonical)


def test_synthesize_empty():
    with pytest.raises(StatisticsError):
        synthesize([], None, Statistics.FERMION)


def test_transform_keeps_norm(fermion_pair_state):
    u = givens(4, 1, 3)
    moved = transform_state(fermion_pair_state, u)
    assert moved.norm_squared() == 1
    with pytest.raises(TransformError):
        transform_state(fermion_pair_state, [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    flipped = transform_state(fermion_pair_state, signed_permutation([1, 0, 2, 3]))
    assert flipped.norm_squared() == 1


def test_vacuum(canonical):
    state = vacuum(Statistics.BOSON)
    dist = outcome_distribution(state, "C1", canonical)
    assert list(dist.values()) == [1]


def test_state_specs(canonical):
    assert parse_state_spec("fermion-pair:v67,v69", canonical).n_particles == 2
    assert parse_state_spec("boson-pair:v16", canonical).statistics is Statistics.BOSON
    assert parse_state_spec("boson-n:v16:3", canonical).n_particles == 3
    assert parse_state_spec("fermion:v12,v18,v17", canonical).n_particles == 3
    assert parse_state_spec("vacuum:fermion", canonical).n_particles == 0


@pytest.mark.parametrize(
    "spec", ["photon:v16", "fermion-pair:v67", "boson-n:v16:x", "vacuum:anyon", "fermion:v12,v16,v17,v18,v23"]
)
def test_bad_state_specs(canonical, spec):
    with pytest.raises(StatisticsError):
        parse_state_spec(spec, canonical)


@pytest.mark.parametrize("pair", ORACLE_PAIRS)
def test_swapping_factors_flips_fermion_amplitudes(canonical, pair):
    u, w = canonical.mode(pair[0]), canonical.mode(pair[1])
    forward = product_state([u, w], Statistics.FERMION)
    backward = product_state([w, u], Statistics.FERMION)
    for cid in canonical.context_ids:
        for p in context_patterns(canonical, cid, 2, Statistics.FERMION):
            assert amplitude_sign(forward, p, canonical) == -amplitude_sign(backward, p, canonical)
            assert probability(forward, p, canonical) == probability(backward, p, canonical)
            if forward.scale == 1:
                assert amplitude(forward, p, canonical) == -amplitude(backward, p, canonical)


@pytest.mark.parametrize("pair", ORACLE_PAIRS)
def test_swapping_factors_keeps_boson_amplitudes(canonical, pair):
    u, w = canonical.mode(pair[0]), canonical.mode(pair[1])
    forward = product_state([u, w], Statistics.BOSON)
    backward = product_state([w, u], Statistics.BOSON)
    for cid in canonical.context_ids:
        for p in context_patterns(canonical, cid, 2, Statistics.BOSON):
            assert amplitude_sign(forward, p, canonical) == amplitude_sign(backward, p, canonical)
            assert probability(forward, p, canonical) == probability(backward, p, canonical)


def test_three_fermion_cyclic_and_odd_permutations(canonical):
    ids = ["v12", "v18", "v17"]
    base = product_of(canonical, ids, Statistics.FERMION)
    cyclic = product_of(canonical, ids[1:] + ids[:1], Statistics.FERMION)
    odd = product_of(canonical, [ids[1], ids[0], ids[2]], Statistics.FERMION)
    for p in context_patterns(canonical, "C2", 3, Statistics.FERMION):
        assert amplitude_sign(cyclic, p, canonical) == amplitude_sign(base, p, canonical)
        assert amplitude_sign(odd, p, canonical) == -amplitude_sign(base, p, canonical)


@pytest.mark.parametrize("seed", range(3))
def test_float_rotation_keeps_distributions(canonical, seed):
    h = canonical.to_backend("float")
    u = random_float_orthogonal(4, seed=seed)
    moved_h = apply_transform(h, u)
    for spec in ("fermion-pair:v67,v69", "boson-pair:v16"):
        state = parse_state_spec(spec, h)
        moved = transform_state(state, u)
        for cid in h.context_ids:
            before = outcome_distribution(state, cid, h)
            after = outcome_distribution(moved, cid, moved_h)
            for pattern, p in before.items():
                assert after[pattern] == pytest.approx(p, abs=1e-9)


def test_state_spec_text(canonical):
    assert state_spec_text("fermion-pair", "v67,v69") == "fermion-pair:v67,v69"
    assert state_spec_text("boson-n", "v16", 3) == "boson-n:v16:3"
    assert parse_state_spec(state_spec_text("boson-n", " v16 ", 2), canonical).n_particles == 2
    with pytest.raises(StatisticsError):
        state_spec_text("boson-n", "v16")
    with pytest.raises(StatisticsError):
        state_spec_text("anyon", "v16")
