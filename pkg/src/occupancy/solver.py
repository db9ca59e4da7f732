"""
비문맥적 점유수 할당 탐색

각 컨텍스트에서 Σ v = N (입자수 보존), 페르미온은 v ∈ {0,1}, 보손은 v ∈ {0..N}.
완전 백트래킹 + 컨텍스트 합 전파. 결정(Decide), 전체 나열(EnumerateAll),
개수 세기(Count) 세 모드를 지원한다.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import pandas as pd

from src.common.errors import StatisticsError
from src.modespace import ModeHypergraph

logger = logging.getLogger(__name__)


class Statistics(Enum):
    FERMION = "fermion"
    BOSON = "boson"

    def max_value(self, n_particles: int) -> int:
        return min(1, n_particles) if self is Statistics.FERMION else n_particles

    def check(self, n_particles: int, dim: int) -> None:
        if n_particles < 0:
            raise StatisticsError(f"particle count must be non-negative, got {n_particles}")
        if self is Statistics.FERMION and n_particles > dim:
            raise StatisticsError(f"fermion count exceeds dimension ({n_particles} > {dim})")


class SolveMode(Enum):
    DECIDE = "decide"
    ENUMERATE = "enumerate"
    COUNT = "count"


@dataclass(frozen=True)
class Assignment:
    """모드 ID → 점유수. values 는 하이퍼그래프의 모드 선언 순서를 따른다."""

    values: Tuple[Tuple[str, int], ...]
    n_particles: int

    @property
    def key(self) -> Tuple[int, ...]:
        return tuple(v for _, v in self.values)

    def as_dict(self) -> Dict[str, int]:
        return dict(self.values)

    def __getitem__(self, mode_id: str) -> int:
        return self.as_dict()[mode_id]


@dataclass(frozen=True)
class ParityCertificate:
    n_contexts: int
    n_particles: int

    @property
    def text(self) -> str:
        total = self.n_contexts * self.n_particles
        return (
            f"summing the conservation constraint over all {self.n_contexts} contexts gives "
            f"{self.n_contexts}*{self.n_particles} = {total}, but every mode is counted in exactly "
            f"two contexts, so the same sum equals 2*(sum of all occupations), an even number; "
            f"{total} is odd"
        )


@dataclass
class FeasibilityResult:
    feasible: bool
    certificate: Optional[ParityCertificate] = None
    solutions: Optional[List[Assignment]] = None
    count: Optional[int] = None


def parity_certificate(h: ModeHypergraph, n_particles: int) -> Optional[ParityCertificate]:
    """모든 모드가 정확히 2개 컨텍스트에 속하고 (#컨텍스트)·N 이 홀수이면 모순 인증서"""
    if any(len(h.contexts_of(mid)) != 2 for mid in h.mode_ids):
        return None
    if (len(h.contexts) * n_particles) % 2 == 1:
        return ParityCertificate(len(h.contexts), n_particles)
    return None


class _Search:
    """컨텍스트 합 제약 백트래킹 (한 번의 탐색에서만 쓰는 가변 상태)"""

    def __init__(self, h: ModeHypergraph, n_particles: int, stats: Statistics) -> None:
        self.h = h
        self.n = n_particles
        self.max_value = stats.max_value(n_particles)
        self.mode_ids = list(h.mode_ids)
        self.mode_pos = {mid: i for i, mid in enumerate(self.mode_ids)}
        self.ctx_modes = [[self.mode_pos[mid] for mid in c.mode_ids] for c in h.contexts]
        self.mode_ctxs: List[List[int]] = [[] for _ in self.mode_ids]
        for ci, members in enumerate(self.ctx_modes):
            for mi in members:
                self.mode_ctxs[mi].append(ci)
        self.values: List[Optional[int]] = [None] * len(self.mode_ids)
        self.ctx_sum = [0] * len(self.ctx_modes)
        self.ctx_open = [len(m) for m in self.ctx_modes]

    def assign(self, mi: int, value: int) -> None:
        self.values[mi] = value
        for ci in self.mode_ctxs[mi]:
            self.ctx_sum[ci] += value
            self.ctx_open[ci] -= 1

    def unassign(self, mi: int) -> None:
        value = self.values[mi]
        self.values[mi] = None
        for ci in self.mode_ctxs[mi]:
            self.ctx_sum[ci] -= value
            self.ctx_open[ci] += 1

    def next_mode(self) -> Optional[int]:
        """가장 많이 채워진 열린 컨텍스트의 첫 미할당 모드 (동률은 선언 순서)"""
        best, best_filled = None, -1
        for ci, members in enumerate(self.ctx_modes):
            if self.ctx_open[ci] == 0:
                continue
            filled = len(members) - self.ctx_open[ci]
            if filled > best_filled:
                best, best_filled = ci, filled
        if best is not None:
            return next(mi for mi in self.ctx_modes[best] if self.values[mi] is None)
        # 어느 컨텍스트에도 속하지 않은 모드
        for mi, v in enumerate(self.values):
            if v is None:
                return mi
        return None

    def value_range(self, mi: int) -> range:
        lo, hi = 0, self.max_value
        for ci in self.mode_ctxs[mi]:
            remaining = self.n - self.ctx_sum[ci]
            others = self.ctx_open[ci] - 1
            hi = min(hi, remaining)
            lo = max(lo, remaining - others * self.max_value)
        return range(lo, hi + 1)

    def solutions(self) -> Iterator[Tuple[int, ...]]:
        mi = self.next_mode()
        if mi is None:
            if all(s == self.n for s in self.ctx_sum):
                yield tuple(self.values)
            return
        for value in self.value_range(mi):
            self.assign(mi, value)
            yield from self.solutions()
            self.unassign(mi)

    def count(self) -> int:
        mi = self.next_mode()
        if mi is None:
            return 1 if all(s == self.n for s in self.ctx_sum) else 0
        total = 0
        for value in self.value_range(mi):
            self.assign(mi, value)
            total += self.count()
            self.unassign(mi)
        return total


def _to_assignment(search: _Search, values: Sequence[int]) -> Assignment:
    return Assignment(tuple(zip(search.mode_ids, values)), search.n)


def _run_subtree(h: ModeHypergraph, n_particles: int, stats: Statistics, mode: SolveMode, first_value: Optional[int]):
    search = _Search(h, n_particles, stats)
    if first_value is not None:
        search.assign(search.next_mode(), first_value)
    if mode is SolveMode.COUNT:
        return search.count()
    if mode is SolveMode.DECIDE:
        first = next(search.solutions(), None)
        return [] if first is None else [first]
    return list(search.solutions())


def solve(
    h: ModeHypergraph,
    n_particles: int,
    stats: Statistics,
    mode: SolveMode = SolveMode.DECIDE,
    jobs: int = 1,
) -> FeasibilityResult:
    """
    비문맥적 할당 결정/나열/개수

    jobs > 1 이면 첫 번째 분기 변수의 값별로 하위 트리를 나눠 병렬 탐색하고,
    순차 탐색과 같은 결과가 되도록 값 순서대로 합친다.
    """
    stats.check(n_particles, h.dim)

    certificate = parity_certificate(h, n_particles)
    if certificate is not None:
        logger.info(f"패리티 인증서로 불가능 판정 (N={n_particles}, {stats.value})")
        return FeasibilityResult(
            feasible=False,
            certificate=certificate,
            solutions=[] if mode is SolveMode.ENUMERATE else None,
            count=0 if mode is SolveMode.COUNT else None,
        )

    root = _Search(h, n_particles, stats)
    first_mode = root.next_mode()
    if jobs > 1 and first_mode is not None:
        branches = list(root.value_range(first_mode))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_subtree, *zip(*[(h, n_particles, stats, mode, v) for v in branches])))
    else:
        parts = [_run_subtree(h, n_particles, stats, mode, None)]

    if mode is SolveMode.COUNT:
        count = sum(parts)
        logger.info(f"할당 개수: {count} (N={n_particles}, {stats.value})")
        return FeasibilityResult(feasible=count > 0, count=count)

    raw = [sol for part in parts for sol in part]
    if mode is SolveMode.DECIDE:
        raw = raw[:1]
    solutions = [_to_assignment(root, sol) for sol in raw]
    if mode is SolveMode.ENUMERATE:
        solutions.sort(key=lambda a: a.key)
    logger.info(
        f"탐색 완료: {'가능' if solutions else '불가능'} "
        f"(N={n_particles}, {stats.value}, 해 {len(solutions)}개 반환)"
    )
    return FeasibilityResult(feasible=bool(solutions), solutions=solutions)


def is_valid_assignment(a: Assignment, h: ModeHypergraph, stats: Statistics) -> bool:
    values = a.as_dict()
    if set(values) != set(h.mode_ids):
        return False
    top = stats.max_value(a.n_particles)
    if any(v < 0 or v > top for v in values.values()):
        return False
    return all(sum(values[mid] for mid in c.mode_ids) == a.n_particles for c in h.contexts)


def hole_dual(a: Assignment, h: ModeHypergraph) -> Assignment:
    """입자 ↔ 구멍 교환: v → 1 - v, N → d - N"""
    if any(v not in (0, 1) for _, v in a.values):
        raise StatisticsError("hole duality needs a fermionic (0/1) assignment")
    return Assignment(tuple((mid, 1 - v) for mid, v in a.values), h.dim - a.n_particles)


def assignment_total(a: Assignment) -> int:
    return sum(v for _, v in a.values)


def bosonic_feasibility_scan(h: ModeHypergraph, n_max: int, jobs: int = 1) -> Dict[int, int]:
    """N = 0..n_max 각각의 보손 할당 개수 (0 이면 그 N 에서 KS 집합)"""
    return {
        n: solve(h, n, Statistics.BOSON, SolveMode.COUNT, jobs=jobs).count for n in range(n_max + 1)
    }


def solutions_frame(solutions: Sequence[Assignment], h: ModeHypergraph) -> pd.DataFrame:
    """해 목록을 DataFrame 으로 (행 = 할당, 열 = 모드 선언 순서)"""
    return pd.DataFrame([a.as_dict() for a in solutions], columns=list(h.mode_ids))
