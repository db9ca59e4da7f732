"""
단순 SIC 연산자: 모든 모드 사영자의 (가중치 없는) 합

Σ_v |v⟩⟨v| = λ·I 이면 2차 양자화에서 C_SIC = λ·N̂ 이므로 양자값은
상태와 무관하게 N·λ. 비문맥적 상한은 가능한 모든 할당의 점유수 총합 최댓값.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from src.fock import FockState, number_expectation
from src.modespace import ModeHypergraph, projector_matrix
from src.modespace.linalg import Matrix, is_scalar_multiple_of_identity
from src.occupancy import SolveMode, Statistics, assignment_total, solve
from src.scalars import Scalar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SicReport:
    n_particles: int
    statistics: Statistics
    lam: Optional[Scalar]
    nc_bound: Optional[int]
    quantum_value: Optional[Scalar]
    violated: bool
    feasible: bool


def projector_sum(h: ModeHypergraph) -> Tuple[Matrix, Optional[Scalar]]:
    """정규화된 사영자 합과, 그것이 정확히 λ·I 일 때의 λ"""
    total = projector_matrix(h.modes, h.dim, h.backend)
    return total, is_scalar_multiple_of_identity(total, h.backend)


def sic_report(h: ModeHypergraph, n_particles: int, stats: Statistics, jobs: int = 1) -> SicReport:
    """
    비문맥적 상한(전체 할당 나열 후 총합 최댓값)과 양자값 N·λ 비교

    할당이 하나도 없으면 (KS 영역) nc_bound 는 None, violated 는 False.
    """
    _, lam = projector_sum(h)
    result = solve(h, n_particles, stats, SolveMode.ENUMERATE, jobs=jobs)
    nc_bound = max((assignment_total(a) for a in result.solutions), default=None)
    quantum_value = None if lam is None else lam * n_particles

    violated = False
    if nc_bound is None:
        logger.warning(f"⚠ N={n_particles} {stats.value}: 비문맥적 할당 없음 (KS 영역), SIC 비교 생략")
    elif quantum_value is not None:
        violated = h.backend.is_positive(quantum_value - nc_bound)

    logger.info(
        f"SIC: λ = {lam}, 비문맥적 상한 = {nc_bound}, 양자값 = {quantum_value}, "
        f"{'위반' if violated else '위반 없음'}"
    )
    return SicReport(
        n_particles=n_particles,
        statistics=stats,
        lam=lam,
        nc_bound=nc_bound,
        quantum_value=quantum_value,
        violated=violated,
        feasible=result.feasible,
    )


def sic_expectation(state: FockState, h: ModeHypergraph) -> Scalar:
    """⟨C_SIC⟩ = Σ_모드 ⟨n̂_v⟩"""
    backend = state.backend
    total = backend.zero()
    for mid in h.mode_ids:
        total = total + number_expectation(state, mid, h)
    return total
