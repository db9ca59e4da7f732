"""
Hardy 형 (상태 의존) 모순 탐색

트리거 결과(확률 > 0)에서 시작해 두 가지 강제 규칙으로 할당을 전파한다.
  - Conservation: 컨텍스트의 조합적 패턴(Σ = N) 중 현재 할당과 맞는 것들이
    어떤 미할당 모드에서 모두 같은 값을 가지면 그 값으로 고정
  - SupportAgreement: 같은 판단을 양자 support(확률 > 0 패턴)로 수행
규칙 순서: 포화 Conservation (0 강제) → 나머지 Conservation → SupportAgreement.
어떤 컨텍스트의 제한된 support 가 비면 모순.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from src.common.errors import StatisticsError, TriggerError
from src.fock import FockState, OccupationPattern, context_patterns, outcome_distribution
from src.modespace import ModeHypergraph
from src.occupancy import Statistics
from src.scalars import Scalar

logger = logging.getLogger(__name__)


class Justification(Enum):
    SUPPORT_AGREEMENT = "SupportAgreement"
    CONSERVATION = "Conservation"


@dataclass(frozen=True)
class SupportTable:
    """컨텍스트별 확률 > 0 패턴과 그 확률"""

    n_particles: int
    statistics: Statistics
    supports: Dict[str, Tuple[OccupationPattern, ...]]
    probabilities: Dict[OccupationPattern, Scalar]

    def support(self, context_id: str) -> Tuple[OccupationPattern, ...]:
        return self.supports[context_id]

    def probability(self, pattern: OccupationPattern) -> Scalar:
        return self.probabilities[pattern]

    def contains(self, pattern: OccupationPattern) -> bool:
        return pattern in self.probabilities


@dataclass
class PartialAssignment:
    """모드 값은 한 번만 저장되고 두 컨텍스트가 공유한다. provenance 는 강제한 단계 번호 (트리거 = 0)."""

    values: Dict[str, int] = field(default_factory=dict)
    provenance: Dict[str, int] = field(default_factory=dict)

    def assign(self, mode_id: str, value: int, step: int) -> None:
        if mode_id in self.values:
            if self.values[mode_id] != value:
                raise ValueError(
                    f"mode {mode_id} already holds {self.values[mode_id]}, cannot assign {value}"
                )
            return
        self.values[mode_id] = value
        self.provenance[mode_id] = step

    def agrees(self, pattern: OccupationPattern, h: ModeHypergraph) -> bool:
        for mid, count in pattern.as_dict(h).items():
            if mid in self.values and self.values[mid] != count:
                return False
        return True

    def context_values(self, context_id: str, h: ModeHypergraph) -> Optional[Dict[str, int]]:
        """컨텍스트의 모든 모드가 할당됐으면 {모드: 값}, 아니면 None"""
        ids = h.context(context_id).mode_ids
        if not all(mid in self.values for mid in ids):
            return None
        return {mid: self.values[mid] for mid in ids}


@dataclass(frozen=True)
class Step:
    context_id: str
    forced: Tuple[Tuple[str, int], ...]
    justification: Justification


@dataclass(frozen=True)
class HardyChain:
    trigger: OccupationPattern
    probability: Scalar
    steps: Tuple[Step, ...]
    contradiction: str
    contradictions: Tuple[str, ...]
    assignment: PartialAssignment

    @property
    def trigger_context(self) -> str:
        return self.trigger.context_id

    def forced_contexts(self, h: ModeHypergraph) -> Dict[str, Dict[str, int]]:
        """완전히 할당된 컨텍스트별 값 (모순 컨텍스트 포함)"""
        out = {}
        for cid in h.context_ids:
            values = self.assignment.context_values(cid, h)
            if values is not None:
                out[cid] = values
        return out


def support_table(state: FockState, h: ModeHypergraph) -> SupportTable:
    """모든 컨텍스트의 정확한 support (exact 백엔드에서는 0 판정이 정확)"""
    backend = state.backend
    supports: Dict[str, Tuple[OccupationPattern, ...]] = {}
    probabilities: Dict[OccupationPattern, Scalar] = {}
    for cid in h.context_ids:
        kept = []
        for pattern, prob in outcome_distribution(state, cid, h).items():
            if not backend.is_zero(prob):
                kept.append(pattern)
                probabilities[pattern] = prob
        supports[cid] = tuple(kept)
    logger.debug(
        "support 크기: " + ", ".join(f"{cid}={len(s)}" for cid, s in supports.items())
    )
    return SupportTable(state.n_particles, state.statistics, supports, probabilities)


def default_order(table: SupportTable, h: ModeHypergraph) -> List[str]:
    """support 가 작은 컨텍스트 먼저, 같으면 선언 순서"""
    position = {cid: i for i, cid in enumerate(h.context_ids)}
    return sorted(h.context_ids, key=lambda cid: (len(table.support(cid)), position[cid]))


def _agreed_values(
    patterns: Iterable[OccupationPattern], assignment: PartialAssignment, h: ModeHypergraph
) -> Tuple[Tuple[str, int], ...]:
    """주어진 패턴들이 모두 같은 값을 주는 미할당 모드"""
    patterns = list(patterns)
    if not patterns:
        return ()
    ids = h.context(patterns[0].context_id).mode_ids
    forced = []
    for pos, mid in enumerate(ids):
        if mid in assignment.values:
            continue
        seen = {p.counts[pos] for p in patterns}
        if len(seen) == 1:
            forced.append((mid, seen.pop()))
    return tuple(forced)


class _Propagation:
    """트리거 하나에 대한 전파 (가변 상태는 이 객체 안에만 있다)"""

    def __init__(
        self, table: SupportTable, h: ModeHypergraph, order: Sequence[str]
    ) -> None:
        self.table = table
        self.h = h
        self.order = list(order)
        self.assignment = PartialAssignment()
        self.steps: List[Step] = []
        self.combinatorial = {
            cid: context_patterns(h, cid, table.n_particles, table.statistics) for cid in h.context_ids
        }

    def restricted(self, context_id: str) -> List[OccupationPattern]:
        return [p for p in self.table.support(context_id) if self.assignment.agrees(p, self.h)]

    def empty_contexts(self) -> List[str]:
        return [cid for cid in self.order if not self.restricted(cid)]

    def conservation(self, context_id: str) -> Tuple[Tuple[str, int], ...]:
        consistent = (p for p in self.combinatorial[context_id] if self.assignment.agrees(p, self.h))
        return _agreed_values(consistent, self.assignment, self.h)

    def next_step(self) -> Optional[Step]:
        # 포화(이미 N 개가 찬 컨텍스트의 나머지 = 0)를 채워 넣기보다 먼저
        for cid in self.order:
            zeros = tuple((mid, v) for mid, v in self.conservation(cid) if v == 0)
            if zeros:
                return Step(cid, zeros, Justification.CONSERVATION)
        for cid in self.order:
            forced = self.conservation(cid)
            if forced:
                return Step(cid, forced, Justification.CONSERVATION)
        for cid in self.order:
            forced = _agreed_values(self.restricted(cid), self.assignment, self.h)
            if forced:
                return Step(cid, forced, Justification.SUPPORT_AGREEMENT)
        return None

    def run(self, trigger: OccupationPattern) -> Union["HardyChain", PartialAssignment]:
        for mid, count in trigger.as_dict(self.h).items():
            self.assignment.assign(mid, count, 0)

        while True:
            empty = self.empty_contexts()
            if empty:
                return HardyChain(
                    trigger=trigger,
                    probability=self.table.probability(trigger),
                    steps=tuple(self.steps),
                    contradiction=empty[0],
                    contradictions=tuple(empty),
                    assignment=self.assignment,
                )
            step = self.next_step()
            if step is None:
                return self.assignment
            self.steps.append(step)
            for mid, value in step.forced:
                self.assignment.assign(mid, value, len(self.steps))
            logger.debug(f"  {len(self.steps)}. {step.context_id} ← {dict(step.forced)} ({step.justification.value})")


def propagate(
    table: SupportTable,
    trigger: OccupationPattern,
    h: ModeHypergraph,
    n_particles: int,
    stats: Statistics,
    order: Optional[Sequence[str]] = None,
) -> Union[HardyChain, PartialAssignment]:
    """
    트리거에서 시작한 할당 전파

    모순을 만나면 HardyChain, 더 강제할 것이 없으면 도달한 PartialAssignment.
    order 로 컨텍스트 스캔 순서를 바꿀 수 있다 (모순 여부와 고정점은 순서와 무관).
    """
    if n_particles != table.n_particles or stats is not table.statistics:
        raise StatisticsError(
            f"support table is for N={table.n_particles} {table.statistics.value}s, "
            f"got N={n_particles} {stats.value}s"
        )
    if not table.contains(trigger):
        raise TriggerError(
            f"trigger {trigger.as_dict(h)} has zero probability in context {trigger.context_id}"
        )
    if order is None:
        order = default_order(table, h)
    elif sorted(order) != sorted(h.context_ids):
        raise StatisticsError("scan order must list every context exactly once")
    return _Propagation(table, h, order).run(trigger)


def _propagate_trigger(table: SupportTable, h: ModeHypergraph, trigger: OccupationPattern):
    return propagate(table, trigger, h, table.n_particles, table.statistics)


def hardy_search(state: FockState, h: ModeHypergraph, jobs: int = 1) -> List[HardyChain]:
    """모든 (컨텍스트, support 패턴) 트리거에 대해 전파하고 모순 체인을 모은다"""
    table = support_table(state, h)
    triggers = [p for cid in h.context_ids for p in table.support(cid)]
    logger.info(f"🔍 Hardy 탐색 시작: 트리거 {len(triggers)}개 (N={state.n_particles}, {state.statistics.value})")

    if jobs > 1 and len(triggers) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(_propagate_trigger, [table] * len(triggers), [h] * len(triggers), triggers)
            )
    else:
        results = [_propagate_trigger(table, h, t) for t in triggers]

    chains = [r for r in results if isinstance(r, HardyChain)]
    for chain in chains:
        logger.info(
            f"✅ 체인 발견: {chain.trigger_context} {chain.trigger.occupied(h)} "
            f"(P = {chain.probability}) → 모순 {', '.join(chain.contradictions)}"
        )
    logger.info(f"Hardy 탐색 완료: 체인 {len(chains)}개")
    return chains


def global_consistency(
    state: FockState,
    h: ModeHypergraph,
    trigger: OccupationPattern,
    table: Optional[SupportTable] = None,
) -> bool:
    """
    컨텍스트마다 support 패턴 하나씩 골라 공유 모드에서 모두 일치하게
    만들 수 있는지 (트리거 포함) 완전 탐색
    """
    if table is None:
        table = support_table(state, h)
    if not table.contains(trigger):
        raise TriggerError(
            f"trigger {trigger.as_dict(h)} has zero probability in context {trigger.context_id}"
        )

    values: Dict[str, int] = dict(trigger.as_dict(h))
    remaining = [cid for cid in default_order(table, h) if cid != trigger.context_id]

    def agrees(pattern: OccupationPattern) -> bool:
        return all(values.get(mid, count) == count for mid, count in pattern.as_dict(h).items())

    def search(i: int) -> bool:
        if i == len(remaining):
            return True
        for pattern in table.support(remaining[i]):
            if not agrees(pattern):
                continue
            added = [mid for mid in pattern.as_dict(h) if mid not in values]
            values.update({mid: pattern.as_dict(h)[mid] for mid in added})
            if search(i + 1):
                return True
            for mid in added:
                del values[mid]
        return False

    return search(0)
