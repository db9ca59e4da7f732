import itertools

import pytest

from src.common.errors import StatisticsError
from src.modespace import canonical_18
from src.occupancy import (
    Assignment,
    SolveMode,
    Statistics,
    assignment_total,
    bosonic_feasibility_scan,
    hole_dual,
    is_valid_assignment,
    parity_certificate,
    solutions_frame,
    solve,
)


def brute_force_fermions(h):
    """2^18 전수 조사. {N: 해 집합}"""
    contexts = [[h.mode_ids.index(mid) for mid in c.mode_ids] for c in h.contexts]
    found = {n: set() for n in range(h.dim + 1)}
    for bits in itertools.product((0, 1), repeat=len(h.mode_ids)):
        n = sum(bits[i] for i in contexts[0])
        if all(sum(bits[i] for i in ctx) == n for ctx in contexts[1:]):
            found[n].add(bits)
    return found


def brute_force_bosons(h, n):
    """컨텍스트 하나씩 패턴을 골라 공유 모드가 맞는 것만 남기는 완전 탐색"""
    ids = h.mode_ids
    compositions = [
        c for c in itertools.product(range(n + 1), repeat=h.dim) if sum(c) == n
    ]
    partial = [{}]
    for ctx in h.contexts:
        extended = []
        for values in partial:
            for comp in compositions:
                if all(values.get(mid, v) == v for mid, v in zip(ctx.mode_ids, comp)):
                    extended.append({**values, **dict(zip(ctx.mode_ids, comp))})
        partial = extended
    return {tuple(v[mid] for mid in ids) for v in partial}


@pytest.fixture(scope="module")
def fermion_oracle():
    h = canonical_18()
    return brute_force_fermions(h)


@pytest.mark.parametrize("n, feasible", [(0, True), (1, False), (2, True), (3, False), (4, True)])
def test_fermion_classification(canonical, fermion_oracle, n, feasible):
    result = solve(canonical, n, Statistics.FERMION, SolveMode.ENUMERATE)
    assert result.feasible is feasible
    assert {a.key for a in result.solutions} == fermion_oracle[n]


@pytest.mark.parametrize("n", [1, 3])
def test_odd_counts_carry_certificate(canonical, n):
    result = solve(canonical, n, Statistics.FERMION)
    assert not result.feasible
    assert result.certificate is not None
    assert result.certificate.n_contexts == 9
    assert "odd" in result.certificate.text


@pytest.mark.parametrize("n", [0, 4])
def test_trivial_fermion_counts_have_one_solution(canonical, n):
    result = solve(canonical, n, Statistics.FERMION, SolveMode.COUNT)
    assert result.count == 1
    assert result.certificate is None


def test_fermion_count_exceeds_dimension(canonical):
    with pytest.raises(StatisticsError, match="fermion count exceeds dimension"):
        solve(canonical, 5, Statistics.FERMION)
    with pytest.raises(StatisticsError):
        solve(canonical, -1, Statistics.BOSON)


def test_decide_returns_one_valid_solution(canonical):
    result = solve(canonical, 2, Statistics.FERMION, SolveMode.DECIDE)
    assert result.feasible
    assert len(result.solutions) == 1
    assert is_valid_assignment(result.solutions[0], canonical, Statistics.FERMION)


def test_fermion_solutions_are_boson_solutions(canonical):
    bosons = {a.key for a in solve(canonical, 2, Statistics.BOSON, SolveMode.ENUMERATE).solutions}
    fermions = {a.key for a in solve(canonical, 2, Statistics.FERMION, SolveMode.ENUMERATE).solutions}
    assert fermions < bosons
    assert bosons == brute_force_bosons(canonical, 2)


def test_boson_only_assignment(canonical):
    values = {mid: 0 for mid in canonical.mode_ids}
    values.update({"v18": 2, "v29": 2, "v56": 2, "v34": 1, "v37": 1, "v47": 1})
    a = Assignment(tuple((mid, values[mid]) for mid in canonical.mode_ids), 2)
    assert is_valid_assignment(a, canonical, Statistics.BOSON)
    assert not is_valid_assignment(a, canonical, Statistics.FERMION)
    assert assignment_total(a) == 9
    bosons = solve(canonical, 2, Statistics.BOSON, SolveMode.ENUMERATE).solutions
    assert a.key in {b.key for b in bosons}


def test_boson_n2_totals(canonical):
    for a in solve(canonical, 2, Statistics.BOSON, SolveMode.ENUMERATE).solutions:
        assert assignment_total(a) == 9


def test_boson_small_counts_against_oracle(canonical):
    for n in (0, 1, 2):
        count = solve(canonical, n, Statistics.BOSON, SolveMode.COUNT).count
        assert count == len(brute_force_bosons(canonical, n))


def test_n2_totals_and_hole_duals(canonical):
    solutions = solve(canonical, 2, Statistics.FERMION, SolveMode.ENUMERATE).solutions
    keys = {a.key for a in solutions}
    assert solutions
    for a in solutions:
        assert assignment_total(a) == 9
        dual = hole_dual(a, canonical)
        assert dual.n_particles == 2
        assert dual.key in keys


def test_hole_dual_of_vacuum(canonical):
    empty = solve(canonical, 0, Statistics.FERMION, SolveMode.ENUMERATE).solutions[0]
    full = hole_dual(empty, canonical)
    assert full.n_particles == 4
    assert set(full.key) == {1}
    assert is_valid_assignment(full, canonical, Statistics.FERMION)


def test_hole_dual_needs_binary_values(canonical):
    bad = Assignment(tuple((mid, 2) for mid in canonical.mode_ids), 8)
    with pytest.raises(StatisticsError):
        hole_dual(bad, canonical)


def test_enumeration_is_sorted(canonical):
    keys = [a.key for a in solve(canonical, 2, Statistics.FERMION, SolveMode.ENUMERATE).solutions]
    assert keys == sorted(keys)


def test_parallel_matches_sequential(canonical):
    for mode in (SolveMode.ENUMERATE, SolveMode.COUNT, SolveMode.DECIDE):
        seq = solve(canonical, 2, Statistics.BOSON, mode, jobs=1)
        par = solve(canonical, 2, Statistics.BOSON, mode, jobs=2)
        assert seq.feasible == par.feasible
        assert seq.count == par.count
        if seq.solutions is not None:
            assert [a.key for a in seq.solutions] == [a.key for a in par.solutions]


def test_certificate_short_circuits_enumerate_and_count(canonical):
    enum = solve(canonical, 3, Statistics.FERMION, SolveMode.ENUMERATE)
    count = solve(canonical, 1, Statistics.BOSON, SolveMode.COUNT)
    assert enum.solutions == []
    assert count.count == 0
    assert parity_certificate(canonical, 2) is None


def test_bosonic_scan(canonical):
    scan = bosonic_feasibility_scan(canonical, 3)
    assert scan[0] == 1
    assert scan[1] == 0
    assert scan[3] == 0
    assert scan[2] == solve(canonical, 2, Statistics.BOSON, SolveMode.COUNT).count


def test_is_valid_assignment_checks_every_context(canonical):
    a = solve(canonical, 2, Statistics.FERMION).solutions[0]
    values = dict(a.values)
    flipped_mode = canonical.mode_ids[0]
    values[flipped_mode] = 1 - values[flipped_mode]
    broken = Assignment(tuple(values.items()), 2)
    assert not is_valid_assignment(broken, canonical, Statistics.FERMION)


def test_solutions_frame(canonical):
    solutions = solve(canonical, 2, Statistics.FERMION, SolveMode.ENUMERATE).solutions
    frame = solutions_frame(solutions, canonical)
    assert list(frame.columns) == list(canonical.mode_ids)
    assert len(frame) == len(solutions)
    assert (frame.sum(axis=1) == 9).all()
